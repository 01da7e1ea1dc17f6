"""Deterministic example algebras, their companion forms and operators.

Names accepted by :func:`algebra`: ``ZERO(p|q)``, ``DUAL``, ``GRASSMANN(n)``,
``OCT``, ``OCTG``, ``MAT(1|1)``, ``BROKEN2``, ``TSTAR``, ``TSTAR-SUPER``. Anything random takes
an explicit seed.
"""
from __future__ import annotations

import itertools
import random
import re
from fractions import Fraction
from functools import lru_cache

from . import gsla
from .bform import SUPERSKEW, SUPERSYMMETRIC, BilinearFormRep, derivation_symplectic
from .errors import SingularMatrix, UnknownFixture
from .gsla import GradedMap, SuperSpace
from .homalg import HomAlgebra, check_morphism, product_tensor_of, yau_twist
from .opx import derivation_space

# ---------------------------------------------------------------- basic algebras


def zero(p: int, q: int) -> HomAlgebra:
    return HomAlgebra(SuperSpace(p, q), {}, None, f"ZERO({p}|{q})")


def dual(alpha=None) -> HomAlgebra:
    """Dual numbers ``K[x]/(x^2)`` with basis ``1, x``."""
    space = SuperSpace(2, 0, ("1", "x"))
    prod = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}
    a = GradedMap(space, gsla.as_matrix(alpha)) if alpha is not None else None
    return HomAlgebra(space, prod, a, "DUAL")


def _grassmann_basis(n: int) -> list:
    subsets = [s for r in range(n + 1) for s in itertools.combinations(range(1, n + 1), r)]
    return [s for s in subsets if len(s) % 2 == 0] + [s for s in subsets if len(s) % 2 == 1]


def _merge_sign(s: tuple, t: tuple) -> int:
    inversions = sum(1 for a in s for b in t if a > b)
    return -1 if inversions % 2 else 1


def grassmann(n: int) -> HomAlgebra:
    """Exterior algebra on ``n`` odd generators, monomial basis, even monomials first."""
    basis = _grassmann_basis(n)
    index = {s: i for i, s in enumerate(basis)}
    p = sum(1 for s in basis if len(s) % 2 == 0)
    names = tuple("".join(f"e{k}" for k in s) or "1" for s in basis)
    space = SuperSpace(p, len(basis) - p, names)
    prod = {}
    for (i, s), (j, t) in itertools.product(enumerate(basis), repeat=2):
        if set(s) & set(t):
            continue
        u = tuple(sorted(s + t))
        prod[(i, j, index[u])] = _merge_sign(s, t)
    return HomAlgebra(space, prod, None, f"GRASSMANN({n})")


def matrix11() -> HomAlgebra:
    """The associative matrix superalgebra ``M(1|1)``: even ``E11, E22``, odd ``E12, E21``."""
    units = [(1, 1), (2, 2), (1, 2), (2, 1)]
    space = SuperSpace(2, 2, tuple(f"E{a}{b}" for a, b in units))
    prod = {}
    for (i, (a, b)), (j, (c, e)) in itertools.product(enumerate(units), repeat=2):
        if b == c:
            prod[(i, j, units.index((a, e)))] = 1
    return HomAlgebra(space, prod, None, "MAT(1|1)")


def broken2() -> HomAlgebra:
    """``e0 e0 = e1``, ``e1 e1 = e0``; commutative but not alternative."""
    space = SuperSpace(2, 0)
    return HomAlgebra(space, {(0, 0, 1): 1, (1, 1, 0): 1}, None, "BROKEN2")


# ---------------------------------------------------------------- octonions


def _cd_conj(x: tuple) -> tuple:
    if len(x) == 1:
        return x
    h = len(x) // 2
    return _cd_conj(x[:h]) + tuple(-b for b in x[h:])


def cd_mul(x: tuple, y: tuple) -> tuple:
    """Cayley-Dickson product ``(a,b)(c,d) = (ac - d*b, da + bc*)`` on coordinate tuples."""
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    left = tuple(u - v for u, v in zip(cd_mul(a, c), cd_mul(_cd_conj(d), b)))
    right = tuple(u + v for u, v in zip(cd_mul(d, a), cd_mul(b, _cd_conj(c))))
    return left + right


@lru_cache(maxsize=None)
def _oct_tensor() -> tuple:
    e = [tuple(Fraction(int(i == k)) for k in range(8)) for i in range(8)]
    return product_tensor_of(8, lambda i, j: cd_mul(e[i], e[j]))


def octonions() -> HomAlgebra:
    names = ("1",) + tuple(f"e{k}" for k in range(1, 8))
    return HomAlgebra(SuperSpace(8, 0, names), _oct_tensor(), None, "OCT")


def oct_trace_form() -> BilinearFormRep:
    """``B(x, y)`` = real part of ``x y``: gram ``diag(1, -1, ..., -1)``."""
    return BilinearFormRep(SuperSpace(8, 0), gsla.diag([1] + [-1] * 7), SUPERSYMMETRIC)


def oct_doubling_involution() -> GradedMap:
    """``(a, b) -> (a, -b)`` on the last Cayley-Dickson doubling: an order-2 automorphism."""
    return GradedMap(SuperSpace(8, 0), gsla.diag([1] * 4 + [-1] * 4))


def octonions_super() -> HomAlgebra:
    """``OCT`` tensored with the Grassmann algebra on one odd generator ``t`` (8|8)."""
    o = _oct_tensor()
    names = tuple(f"{s}" for s in ("1",) + tuple(f"e{k}" for k in range(1, 8)))
    names = names + tuple(f"{s}t" for s in names)
    prod = {}
    for i, j in itertools.product(range(8), repeat=2):
        for k, c in enumerate(o[i][j]):
            if c:
                prod[(i, j, k)] = c
                prod[(i, j + 8, k + 8)] = c
                prod[(i + 8, j, k + 8)] = c
    return HomAlgebra(SuperSpace(8, 8, names), prod, None, "OCTG")


# ---------------------------------------------------------------- T*-type PE algebras


def tstar() -> HomAlgebra:
    """Basis ``p, q, p*, q*`` with ``p p = q``, ``p q* = p*``, ``q* p = p*``."""
    space = SuperSpace(4, 0, ("p", "q", "p*", "q*"))
    return HomAlgebra(space, {(0, 0, 1): 1, (0, 3, 2): 1, (3, 0, 2): 1}, None, "TSTAR")


def _sparse(n: int, entries: dict) -> list:
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), v in entries.items():
        m[i][j] = Fraction(v)
    return m


def tstar_form() -> BilinearFormRep:
    g = _sparse(4, {(0, 2): 1, (2, 0): 1, (1, 3): 1, (3, 1): 1})
    return BilinearFormRep(SuperSpace(4, 0), g, SUPERSYMMETRIC)


def tstar_super() -> HomAlgebra:
    """Even ``q, Q``, odd ``p, P`` with ``p p = q``, ``p Q = P``, ``Q p = -P``."""
    space = SuperSpace(2, 2, ("q", "Q", "p", "P"))
    return HomAlgebra(space, {(2, 2, 0): 1, (2, 1, 3): 1, (1, 2, 3): -1}, None, "TSTAR-SUPER")


def tstar_super_form() -> BilinearFormRep:
    g = _sparse(4, {(0, 1): 1, (1, 0): 1, (2, 3): 1, (3, 2): -1})
    return BilinearFormRep(SuperSpace(2, 2), g, SUPERSYMMETRIC)


def tstar_twist_map() -> GradedMap:
    """Isometric automorphism of ``TSTAR``."""
    return GradedMap(SuperSpace(4, 0), gsla.diag([2, 4, Fraction(1, 2), Fraction(1, 4)]))


def tstar_super_twist_map() -> GradedMap:
    return GradedMap(SuperSpace(2, 2), gsla.diag([4, Fraction(1, 4), 2, Fraction(1, 2)]))


# ---------------------------------------------------------------- companion forms


def dual_form() -> BilinearFormRep:
    """``B(1, x) = B(x, 1) = 1``, all else zero."""
    return BilinearFormRep(SuperSpace(2, 0), [[0, 1], [1, 0]], SUPERSYMMETRIC)


def grassmann2_form() -> BilinearFormRep:
    """Frobenius form of ``GRASSMANN(2)``: ``B(1, e1e2) = 1``, ``B(e1, e2) = 1``."""
    g = _sparse(4, {(0, 1): 1, (1, 0): 1, (2, 3): 1, (3, 2): -1})
    return BilinearFormRep(SuperSpace(2, 2), g, SUPERSYMMETRIC)


def odd_plane_form() -> BilinearFormRep:
    """Supersymmetric even form on ``0|2``: gram ``[[0, 1], [-1, 0]]``."""
    return BilinearFormRep(SuperSpace(0, 2), [[0, 1], [-1, 0]], SUPERSYMMETRIC)


def odd_plane_symplectic() -> BilinearFormRep:
    """Super-skew even form on ``0|2``: gram ``[[0, 1], [1, 0]]``."""
    return BilinearFormRep(SuperSpace(0, 2), [[0, 1], [1, 0]], SUPERSKEW)


def even_plane_symplectic() -> BilinearFormRep:
    return BilinearFormRep(SuperSpace(2, 0), [[0, 1], [-1, 0]], SUPERSKEW)


# ---------------------------------------------------------------- name lookup

_ZERO_RE = re.compile(r"^ZERO\((\d+)\|(\d+)\)$")
_GR_RE = re.compile(r"^GRASSMANN\((\d+)\)$")

FIXTURE_NAMES = ("ZERO(p|q)", "DUAL", "GRASSMANN(n)", "OCT", "OCTG", "MAT(1|1)", "BROKEN2", "TSTAR", "TSTAR-SUPER")


def algebra(name: str) -> HomAlgebra:
    key = name.strip().upper()
    m = _ZERO_RE.match(key)
    if m:
        return zero(int(m.group(1)), int(m.group(2)))
    m = _GR_RE.match(key)
    if m:
        n = int(m.group(1))
        if n > 3:
            raise UnknownFixture("GRASSMANN(n) is offered for n <= 3")
        return grassmann(n)
    simple = {
        "DUAL": dual,
        "OCT": octonions,
        "OCTG": octonions_super,
        "MAT(1|1)": matrix11,
        "BROKEN2": broken2,
        "TSTAR": tstar,
        "TSTAR-SUPER": tstar_super,
    }
    if key not in simple:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return simple[key]()


def companion_forms(name: str) -> dict:
    """Named forms that ship with a fixture."""
    key = name.strip().upper()
    if key == "DUAL":
        return {"psi": dual_form()}
    if key == "GRASSMANN(2)":
        return {"psi": grassmann2_form()}
    if key == "OCT":
        return {"psi": oct_trace_form()}
    if key == "TSTAR":
        return {"psi": tstar_form()}
    if key == "TSTAR-SUPER":
        return {"psi": tstar_super_form()}
    if key == "ZERO(0|2)":
        return {"psi": odd_plane_form(), "omega": odd_plane_symplectic()}
    if key == "ZERO(2|0)":
        return {"psi": BilinearFormRep(SuperSpace(2, 0), gsla.identity(2)), "omega": even_plane_symplectic()}
    return {}


# ---------------------------------------------------------------- automorphisms


@lru_cache(maxsize=None)
def octonion_sign_automorphisms() -> tuple:
    """All automorphisms of ``OCT`` that permute ``e1..e7`` up to sign.

    ``e1, e2, e4`` generate; the images of the other units follow from
    ``e_{a xor b} = +-e_a e_b``. Each candidate is verified in full.
    """
    A = octonions()
    space = A.space
    units = [(s, k) for k in range(1, 8) for s in (1, -1)]

    def vec(s, k):
        v = [Fraction(0)] * 8
        v[k] = Fraction(s)
        return tuple(v)

    found = []
    for g1, g2, g4 in itertools.product(units, repeat=3):
        img = {0: vec(1, 0), 1: vec(*g1), 2: vec(*g2), 4: vec(*g4)}
        for a, b in ((1, 2), (1, 4), (2, 4), (3, 4)):
            c = a ^ b
            coeff = A.product[a][b][c]  # e_a e_b = coeff e_c
            img[c] = gsla.vec_scale(coeff, A.mul(img[a], img[b]))
        cols = [img[k] for k in range(8)]
        if any(sum(1 for x in v if x) != 1 for v in cols):
            continue
        if len({next(i for i, x in enumerate(v) if x) for v in cols}) != 8:
            continue
        f = GradedMap(space, gsla.from_columns(cols))
        if check_morphism(f, A, A).holds:
            found.append(f)
    return tuple(found)


def random_automorphism(A: HomAlgebra, rng: random.Random) -> GradedMap:
    """A random self-morphism of ``OCT``, ``DUAL`` or ``GRASSMANN(2)`` (identity twist)."""
    if A.name == "OCT":
        return rng.choice(octonion_sign_automorphisms())
    if A.name == "DUAL":
        t = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        return GradedMap(A.space, gsla.diag([1, t]))
    if A.name == "GRASSMANN(2)":
        while True:
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
            det = a * d - b * c
            if det:
                break
        m = _sparse(4, {(0, 0): 1, (1, 1): det, (2, 2): a, (3, 2): c, (2, 3): b, (3, 3): d})
        return GradedMap(A.space, m)
    raise UnknownFixture(f"no automorphism generator for {A.name!r}")


def seeded_yau_twists(count: int = 50, seed: int = 0) -> list:
    """``count`` triples ``(A, beta, yau_twist(A, beta))`` over OCT, GRASSMANN(2) and DUAL."""
    rng = random.Random(seed)
    bases = [octonions(), grassmann(2), dual()]
    out = []
    for k in range(count):
        A = bases[k % len(bases)]
        beta = random_automorphism(A, rng)
        out.append((A, beta, yau_twist(A, beta)))
    return out


# ---------------------------------------------------------------- symplectic instances


def _invertible_combination(basis: list, bound: int = 2):
    """First invertible integer combination of ``basis`` with coefficients in ``[-bound, bound]``."""
    if not basis:
        return None
    rng = range(-bound, bound + 1)
    for coeffs in itertools.product(rng, repeat=len(basis)):
        if not any(coeffs):
            continue
        m = gsla.zeros(basis[0].dim)
        for c, D in zip(coeffs, basis):
            if c:
                m = gsla.mat_add(m, gsla.mat_scale(c, D.matrix))
        D = GradedMap(basis[0].space, m, 0)
        if gsla.is_invertible(D):
            return D
    return None


def pe_fixtures() -> list:
    """``(name, A, F)`` pseudo-Euclidean fixtures of dimension at most 4.

    The twisted T* entries carry a nontrivial twist and are alpha-PE.
    """
    t, ts = tstar(), tstar_super()
    return [
        ("ZERO(2|0)", zero(2, 0), BilinearFormRep(SuperSpace(2, 0), gsla.identity(2))),
        ("ZERO(0|2)", zero(0, 2), odd_plane_form()),
        ("ZERO(2|2)", zero(2, 2), BilinearFormRep(SuperSpace(2, 2), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])),
        ("DUAL", dual(), dual_form()),
        ("GRASSMANN(2)", grassmann(2), grassmann2_form()),
        ("TSTAR", t, tstar_form()),
        ("TSTAR-SUPER", ts, tstar_super_form()),
        ("TSTAR-twisted", yau_twist(t, tstar_twist_map()), tstar_form()),
        ("TSTAR-SUPER-twisted", yau_twist(ts, tstar_super_twist_map()), tstar_super_form()),
    ]


def symplectic_instances() -> list:
    """``(name, A, omega)`` built from PE fixtures via an invertible antisymmetric derivation.

    Derivations are found as an exact nullspace (Leibniz rule, antisymmetry,
    commuting with the twist); the first invertible small-integer combination
    is used. Fixtures without one (unital algebras, for instance) are skipped.
    """
    out = []
    for name, A, F in pe_fixtures():
        basis = derivation_space(A, 0, 0, form=F, phi=A.alpha)
        D = _invertible_combination(basis)
        if D is None:
            continue
        try:
            out.append((name, A, derivation_symplectic(A, F, D)))
        except SingularMatrix:
            continue
    return out


# ---------------------------------------------------------------- documents


def document(name: str):
    """Fixture algebra with its companion forms and operators as a document."""
    from .documents import Operator, document_of

    A = algebra(name)
    key = name.strip().upper()
    ops = {}
    if key == "DUAL":
        ops["R"] = Operator("rotabaxter", GradedMap(A.space, [[0, 0], [1, 0]]), 0, Fraction(0))
        ops["D"] = Operator("derivation", GradedMap(A.space, [[0, 0], [0, 1]]))
    elif key == "ZERO(0|2)":
        ops["R"] = Operator("rotabaxter", GradedMap(A.space, gsla.diag([1, -1])), 0, Fraction(0))
        ops["D"] = Operator("derivation", GradedMap(A.space, gsla.diag([1, -1])))
    elif key == "TSTAR":
        ops["D"] = Operator("derivation", GradedMap(A.space, gsla.diag([1, 2, -1, -2])))
        ops["beta"] = Operator("morphism", tstar_twist_map())
    elif key == "TSTAR-SUPER":
        ops["D"] = Operator("derivation", GradedMap(A.space, gsla.diag([2, -2, 1, -1])))
        ops["beta"] = Operator("morphism", tstar_super_twist_map())
    elif key == "OCT":
        ops["beta"] = Operator("morphism", oct_doubling_involution())
    forms = {}
    for fname, F in companion_forms(name).items():
        forms[fname] = BilinearFormRep(A.space, F.gram, F.flavor, F.parity)
    return document_of(A, forms, ops)
