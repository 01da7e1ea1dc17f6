"""JSON algebra documents.

Layout (all rationals are strings ``"p/q"`` or ``"n"``; indices are 0-based)::

    {
      "name": "DUAL",
      "evenDim": 2, "oddDim": 0,
      "basisNames": ["1", "x"],
      "product": [{"i": 0, "j": 0, "k": 0, "value": "1"}, ...],
      "alpha": [["1", "0"], ["0", "1"]],
      "forms": [{"name": "psi", "flavor": "supersymmetric", "parity": "even", "gram": [[...]]}],
      "operators": [{"name": "R", "kind": "rotabaxter", "matrix": [[...]],
                     "degree": 0, "power": 0, "weight": "0"}],
      "postalt": {"prec": [...], "succ": [...], "dot": [...]}
    }

Only ``evenDim``, ``oddDim`` and ``product`` are required.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import gsla
from .bform import FLAVORS, PARITIES, BilinearFormRep
from .errors import DimensionMismatch, ParseError, RangeError, RationalError, SchemaError
from .gsla import GradedMap, SuperSpace
from .homalg import HomAlgebra
from .opx import DerivationCandidate, RotaBaxterOp
from .postalt import PostAltStructure

OPERATOR_KINDS = ("derivation", "rotabaxter", "morphism")

_TOP_KEYS = ("name", "evenDim", "oddDim", "basisNames", "product", "alpha", "forms", "operators", "postalt")
_REQUIRED = ("evenDim", "oddDim", "product")
_FORM_KEYS = ("name", "flavor", "parity", "gram")
_OP_KEYS = ("name", "kind", "matrix", "degree", "power", "weight")
_ENTRY_KEYS = ("i", "j", "k", "value")


@dataclass(frozen=True)
class Operator:
    kind: str
    map: GradedMap
    power: int = 0
    weight: Fraction = Fraction(0)

    def as_derivation(self) -> DerivationCandidate:
        return DerivationCandidate(self.map, self.power)

    def as_rota_baxter(self) -> RotaBaxterOp:
        return RotaBaxterOp(self.map, self.weight)


@dataclass(frozen=True)
class AlgebraDocument:
    algebra: HomAlgebra
    forms: dict = field(default_factory=dict)
    operators: dict = field(default_factory=dict)
    postalt: PostAltStructure | None = None

    @property
    def space(self) -> SuperSpace:
        return self.algebra.space

    def with_(self, **changes) -> "AlgebraDocument":
        return replace(self, **changes)

    def __eq__(self, other):
        if not isinstance(other, AlgebraDocument):
            return NotImplemented
        return serialize(self) == serialize(other)

    def __hash__(self):
        return hash(serialize(self))


# ---------------------------------------------------------------- parsing helpers


def _rational(value, where: str) -> Fraction:
    if not isinstance(value, str):
        raise RationalError(f"{where}: rationals must be strings like \"3/4\", got {value!r}")
    try:
        return gsla.to_scalar(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise RationalError(f"{where}: cannot read {value!r} as a rational") from exc


def _int(value, where: str, lo: int = 0, hi: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: expected an integer, got {value!r}")
    if value < lo or (hi is not None and value > hi):
        raise RangeError(f"{where}: {value} out of range")
    return value


def _keys(obj, allowed, required, where: str) -> None:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    extra = sorted(set(obj) - set(allowed))
    if extra:
        raise SchemaError(f"{where}: unknown field(s) {', '.join(extra)}")
    missing = [k for k in required if k not in obj]
    if missing:
        raise SchemaError(f"{where}: missing field(s) {', '.join(missing)}")


def _matrix(rows, n: int, where: str) -> list:
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise SchemaError(f"{where}: expected a {n}x{n} matrix")
    return [[_rational(a, f"{where}[{i}][{j}]") for j, a in enumerate(r)] for i, r in enumerate(rows)]


def _sparse_tensor(entries, n: int, where: str) -> dict:
    if not isinstance(entries, list):
        raise SchemaError(f"{where}: expected a list of entries")
    out = {}
    for pos, e in enumerate(entries):
        w = f"{where}[{pos}]"
        _keys(e, _ENTRY_KEYS, _ENTRY_KEYS, w)
        idx = tuple(_int(e[key], f"{w}.{key}") for key in "ijk")
        if any(x >= n for x in idx):
            raise RangeError(f"{w}: index {idx} out of range for dimension {n}")
        if idx in out:
            raise SchemaError(f"{w}: duplicate entry {idx}")
        out[idx] = _rational(e["value"], f"{w}.value")
    return out


def from_dict(data: dict) -> AlgebraDocument:
    _keys(data, _TOP_KEYS, _REQUIRED, "document")
    p = _int(data["evenDim"], "evenDim")
    q = _int(data["oddDim"], "oddDim")
    n = p + q
    names = data.get("basisNames", ())
    if not isinstance(names, (list, tuple)) or not all(isinstance(s, str) for s in names):
        raise SchemaError("basisNames: expected a list of strings")
    try:
        space = SuperSpace(p, q, tuple(names))
    except (ValueError, DimensionMismatch) as exc:
        raise SchemaError(f"basisNames: {exc}") from exc
    product = _sparse_tensor(data["product"], n, "product")
    alpha = None
    if "alpha" in data:
        alpha = GradedMap(space, _matrix(data["alpha"], n, "alpha"), 0)
    A = HomAlgebra(space, product, alpha, data.get("name", "") or "")

    forms = {}
    for pos, f in enumerate(data.get("forms", [])):
        w = f"forms[{pos}]"
        _keys(f, _FORM_KEYS, ("name", "gram"), w)
        name = f["name"]
        if name in forms:
            raise SchemaError(f"{w}: duplicate form name {name!r}")
        flavor = f.get("flavor", "supersymmetric")
        parity = f.get("parity", "even")
        if flavor not in FLAVORS:
            raise SchemaError(f"{w}.flavor: expected one of {FLAVORS}")
        if parity not in PARITIES:
            raise SchemaError(f"{w}.parity: expected one of {PARITIES}")
        forms[name] = BilinearFormRep(space, _matrix(f["gram"], n, f"{w}.gram"), flavor, parity)

    operators = {}
    for pos, o in enumerate(data.get("operators", [])):
        w = f"operators[{pos}]"
        _keys(o, _OP_KEYS, ("name", "kind", "matrix"), w)
        name = o["name"]
        if name in operators:
            raise SchemaError(f"{w}: duplicate operator name {name!r}")
        if o["kind"] not in OPERATOR_KINDS:
            raise SchemaError(f"{w}.kind: expected one of {OPERATOR_KINDS}")
        degree = _int(o.get("degree", 0), f"{w}.degree", 0, 1)
        power = _int(o.get("power", 0), f"{w}.power")
        weight = _rational(o.get("weight", "0"), f"{w}.weight")
        m = GradedMap(space, _matrix(o["matrix"], n, f"{w}.matrix"), degree)
        operators[name] = Operator(o["kind"], m, power, weight)

    postalt = None
    if "postalt" in data:
        pa = data["postalt"]
        _keys(pa, ("prec", "succ", "dot"), (), "postalt")
        tensors = {key: _sparse_tensor(pa.get(key, []), n, f"postalt.{key}") for key in ("prec", "succ", "dot")}
        postalt = PostAltStructure(space, tensors["prec"], tensors["succ"], tensors["dot"], A.alpha)
    return AlgebraDocument(A, forms, operators, postalt)


def parse(text: str) -> AlgebraDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    return from_dict(data)


def load(path) -> AlgebraDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse(text)


# ---------------------------------------------------------------- serialization


def _fmt(a: Fraction) -> str:
    return str(Fraction(a))


def _entries(tensor) -> list:
    out = []
    for i, plane in enumerate(tensor):
        for j, vec in enumerate(plane):
            for k, a in enumerate(vec):
                if a:
                    out.append({"i": i, "j": j, "k": k, "value": _fmt(a)})
    return out


def _dense(m) -> list:
    return [[_fmt(a) for a in row] for row in m]


def to_dict(doc: AlgebraDocument) -> dict:
    A = doc.algebra
    out = {}
    if A.name:
        out["name"] = A.name
    out["evenDim"] = A.space.even_dim
    out["oddDim"] = A.space.odd_dim
    out["basisNames"] = list(A.space.names)
    out["product"] = _entries(A.product)
    out["alpha"] = _dense(A.alpha.matrix)
    if doc.forms:
        out["forms"] = [
            {"name": name, "flavor": F.flavor, "parity": F.parity, "gram": _dense(F.gram)}
            for name, F in doc.forms.items()
        ]
    if doc.operators:
        out["operators"] = [
            {"name": name, "kind": op.kind, "matrix": _dense(op.map.matrix),
             "degree": op.map.degree, "power": op.power, "weight": _fmt(op.weight)}
            for name, op in doc.operators.items()
        ]
    if doc.postalt is not None:
        P = doc.postalt
        out["postalt"] = {"prec": _entries(P.prec), "succ": _entries(P.succ), "dot": _entries(P.dot)}
    return out


def serialize(doc: AlgebraDocument) -> str:
    return json.dumps(to_dict(doc), indent=2) + "\n"


def save(doc: AlgebraDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(doc))


def document_of(A: HomAlgebra, forms: dict | None = None, operators: dict | None = None,
                postalt: PostAltStructure | None = None) -> AlgebraDocument:
    return AlgebraDocument(A, dict(forms or {}), dict(operators or {}), postalt)
