"""Command line interface: ``homalt check | construct | fixture | oracle``.

Exit codes: 0 every axiom holds, 1 some axiom fails (or a construction's
hypothesis fails), 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import documents, fixtures
from .bform import SUPERSKEW, SUPERSYMMETRIC, derivation_symplectic, pe_yau_twist
from .documents import AlgebraDocument
from .errors import (
    DimensionMismatch,
    GradingError,
    IndexOutOfRange,
    InputError,
    NotPreAlt,
    PreconditionFailed,
    SchemaError,
    SingularMatrix,
)
from .homalg import alpha_power_twist, commutator_bracket, opposite, untwist, yau_twist
from .opx import rb_derived_product, rb_symplectic
from .oracle import CATALOG, POSTALT_IDENTITIES, PREALT_IDENTITIES, oracle_check
from .postalt import bullet, rb_to_postalt, symplectic_split
from .report import AxiomReport
from .suites import SUITES, pick_form, pick_operator, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
_INPUT_ERRORS = (InputError, GradingError, DimensionMismatch, IndexOutOfRange, NotPreAlt)

OPS = (
    "opposite", "yau-twist", "untwist", "alpha-power", "commutator", "rb-split",
    "rb-derived", "bullet", "deriv-symplectic", "rb-symplectic", "symplectic-split",
)


def _print_report(report: AxiomReport, names, out) -> None:
    for e in report:
        print(e.describe(names), file=out)


def _report_json(suite: str, report: AxiomReport, code: int) -> str:
    return json.dumps({"suite": suite, "axioms": [e.to_dict() for e in report], "exit": code}, indent=2)


# ---------------------------------------------------------------- construct helpers


def _params(pairs) -> dict:
    out = {}
    for p in pairs or ():
        if "=" not in p:
            raise SchemaError(f"--param expects name=value, got {p!r}")
        k, v = p.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _resolve_operator(doc: AlgebraDocument, value: str | None, kind: str):
    """An operator named in ``doc``, or the first one of ``kind`` in the document at path ``value``."""
    if value is None or value in doc.operators:
        return pick_operator(doc, value, kind)
    if os.path.exists(value):
        other = documents.load(value)
        if not other.space.same_shape(doc.space):
            raise DimensionMismatch(f"{value}: operator lives on a different space")
        op = pick_operator(other, None, kind)
        return documents.Operator(op.kind, type(op.map)(doc.space, op.map.matrix, op.map.degree), op.power, op.weight)
    raise SchemaError(f"{value!r} is neither an operator in the document nor a file")


def _resolve_form(doc: AlgebraDocument, value: str | None, flavor: str | None):
    if value is None or value in doc.forms:
        return pick_form(doc, value, flavor)
    if os.path.exists(value):
        other = documents.load(value)
        F = pick_form(other, None, flavor)
        if not other.space.same_shape(doc.space):
            raise DimensionMismatch(f"{value}: form lives on a different space")
        return type(F)(doc.space, F.gram, F.flavor, F.parity)
    raise SchemaError(f"{value!r} is neither a form in the document nor a file")


def _int_param(params: dict, key: str, default: int) -> int:
    try:
        return int(params.get(key, default))
    except ValueError as exc:
        raise SchemaError(f"--param {key} must be an integer") from exc


def construct(doc: AlgebraDocument, op: str, params: dict) -> AlgebraDocument:
    A = doc.algebra
    if op == "opposite":
        return doc.with_(algebra=opposite(A), postalt=None)
    if op == "yau-twist":
        beta = _resolve_operator(doc, params.get("beta"), "morphism").map
        if "form" in params:
            B, _, _ = pe_yau_twist(A, _resolve_form(doc, params["form"], SUPERSYMMETRIC), beta)
        else:
            B = yau_twist(A, beta)
        return doc.with_(algebra=B, postalt=None)
    if op == "untwist":
        return doc.with_(algebra=untwist(A), postalt=None)
    if op == "alpha-power":
        return doc.with_(algebra=alpha_power_twist(A, _int_param(params, "n", 1)), postalt=None)
    if op == "commutator":
        return doc.with_(algebra=commutator_bracket(A), postalt=None)
    if op == "rb-split":
        R = _resolve_operator(doc, params.get("R"), "rotabaxter").as_rota_baxter()
        return doc.with_(postalt=rb_to_postalt(A, R))
    if op == "rb-derived":
        R = _resolve_operator(doc, params.get("R"), "rotabaxter").as_rota_baxter()
        return doc.with_(algebra=rb_derived_product(A, R), postalt=None)
    if op == "bullet":
        if doc.postalt is None:
            raise SchemaError("bullet needs a postalt section")
        return doc.with_(algebra=bullet(doc.postalt), postalt=None)
    if op == "deriv-symplectic":
        F = _resolve_form(doc, params.get("form"), SUPERSYMMETRIC)
        D = _resolve_operator(doc, params.get("D"), "derivation").map
        W = derivation_symplectic(A, F, D)
        return doc.with_(forms={**doc.forms, params.get("name", "omega"): W})
    if op == "rb-symplectic":
        F = _resolve_form(doc, params.get("form"), SUPERSYMMETRIC)
        R = _resolve_operator(doc, params.get("R"), "rotabaxter").as_rota_baxter()
        W = rb_symplectic(A, F, R)
        return doc.with_(forms={**doc.forms, params.get("name", "psi_R"): W})
    if op == "symplectic-split":
        W = _resolve_form(doc, params.get("form"), SUPERSKEW)
        return doc.with_(postalt=symplectic_split(A, W))
    raise SchemaError(f"unknown construction {op!r}")


def _emit(doc: AlgebraDocument, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(documents.serialize(doc))
    else:
        documents.save(doc, path)


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
    doc = documents.load(args.file)
    report = run_suite(doc, args.suite, form=args.form, operator=args.operator, phi=args.phi)
    code = EXIT_OK if report.holds else EXIT_FAIL
    if args.json:
        print(_report_json(args.suite, report, code))
    else:
        print(f"suite {args.suite}: {'all axioms hold' if report.holds else 'FAILED'}")
        _print_report(report, doc.space.names, sys.stdout)
    return code


def cmd_construct(args) -> int:
    doc = documents.load(args.file)
    try:
        out = construct(doc, args.op, _params(args.param))
    except (PreconditionFailed, SingularMatrix) as exc:
        print(f"construction {args.op} refused: {exc}", file=sys.stderr)
        report = getattr(exc, "report", None)
        if report is not None:
            _print_report(AxiomReport([e for e in report if not e.holds]), doc.space.names, sys.stderr)
        return EXIT_FAIL
    _emit(out, args.output)
    return EXIT_OK


def cmd_fixture(args) -> int:
    _emit(fixtures.document(args.name), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    doc = documents.load(args.file)
    obj = doc.algebra
    if args.identity in POSTALT_IDENTITIES + PREALT_IDENTITIES:
        if doc.postalt is None:
            raise SchemaError("this identity needs a postalt section")
        obj = doc.postalt
    ok = oracle_check(obj, args.identity, trials=args.trials, seed=args.seed)
    print(f"{args.identity}: {'holds' if ok else 'FAILS'} on {args.trials} random trials (seed {args.seed})")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homalt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run an axiom suite on an algebra document")
    c.add_argument("file")
    c.add_argument("--suite", choices=SUITES, default="alternative")
    c.add_argument("--form", help="name of the form to use (default: first suitable)")
    c.add_argument("--operator", help="name of the operator to use (default: first suitable)")
    c.add_argument("--phi", help="for --suite pe: 'alpha' or a morphism operator name")
    c.add_argument("--json", action="store_true", help="machine-readable report")
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("construct", help="build a new document from an existing one")
    k.add_argument("file")
    k.add_argument("--op", choices=OPS, required=True)
    k.add_argument("--param", action="append", metavar="NAME=VALUE",
                   help="operator/form name or document path, or an integer (n)")
    k.add_argument("-o", "--output", help="output path (default: stdout)")
    k.set_defaults(func=cmd_construct)

    f = sub.add_parser("fixture", help="write a built-in example algebra")
    f.add_argument("name", help=", ".join(fixtures.FIXTURE_NAMES))
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_fixture)

    o = sub.add_parser("oracle", help="check an identity on random homogeneous elements")
    o.add_argument("file")
    o.add_argument("--identity", required=True, help=", ".join(CATALOG))
    o.add_argument("--trials", type=int, default=100)
    o.add_argument("--seed", type=int, default=0)
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
