"""Independent randomized oracle for the identity checkers.

Identities are evaluated on random homogeneous linear combinations of basis
vectors rather than on basis tuples. Elements are sparse ``{index: Fraction}``
dicts and every product is expanded term by term from the raw structure
constants, with a separately written sign rule. Nothing here calls the
checkers in ``homalg`` or ``postalt``.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .errors import UnknownIdentity

ALGEBRA_IDENTITIES = (
    "associative",
    "left-alternative",
    "right-alternative",
    "flexible",
    "cyclic-associator",
    "multiplicative",
    "malcev-antisymmetry",
    "hom-malcev",
)
POSTALT_IDENTITIES = tuple(f"postalt-{k}" for k in range(1, 11))
PREALT_IDENTITIES = tuple(f"prealt-{k}" for k in range(1, 5))
CATALOG = ALGEBRA_IDENTITIES + POSTALT_IDENTITIES + PREALT_IDENTITIES

ARITY = {
    "associative": 3,
    "left-alternative": 3,
    "right-alternative": 3,
    "flexible": 3,
    "cyclic-associator": 3,
    "multiplicative": 2,
    "malcev-antisymmetry": 2,
    "hom-malcev": 4,
    **{name: 3 for name in POSTALT_IDENTITIES + PREALT_IDENTITIES},
}


def sign(a: int, b: int) -> int:
    """(-1)^(a b) for parities a, b."""
    return (-1) ** ((a * b) % 2)


class Elem:
    """Homogeneous element: sparse coordinates and a parity."""

    __slots__ = ("c", "p")

    def __init__(self, coords: dict, parity: int):
        self.c = {k: v for k, v in coords.items() if v}
        self.p = parity % 2

    def __add__(self, other: "Elem") -> "Elem":
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return Elem(out, self.p if self.c else other.p)

    def __sub__(self, other: "Elem") -> "Elem":
        return self + other.scaled(-1)

    def scaled(self, s) -> "Elem":
        return Elem({k: s * v for k, v in self.c.items()}, self.p)

    def __bool__(self) -> bool:
        return bool(self.c)


def _sparse_table(tensor) -> dict:
    table = {}
    for i, plane in enumerate(tensor):
        for j, vec in enumerate(plane):
            terms = [(k, a) for k, a in enumerate(vec) if a]
            if terms:
                table[(i, j)] = terms
    return table


class Product:
    def __init__(self, tensor):
        self.table = _sparse_table(tensor)

    def __call__(self, u: Elem, v: Elem) -> Elem:
        out = {}
        for i, a in u.c.items():
            for j, b in v.c.items():
                for k, c in self.table.get((i, j), ()):
                    out[k] = out.get(k, 0) + a * b * c
        return Elem(out, u.p + v.p)


class Linear:
    """Even map given by a column-convention matrix."""

    def __init__(self, matrix):
        self.cols = {}
        n = len(matrix)
        for j in range(n):
            col = [(i, matrix[i][j]) for i in range(n) if matrix[i][j]]
            if col:
                self.cols[j] = col

    def __call__(self, u: Elem) -> Elem:
        out = {}
        for j, a in u.c.items():
            for i, m in self.cols.get(j, ()):
                out[i] = out.get(i, 0) + a * m
        return Elem(out, u.p)


# ---------------------------------------------------------------- identities on one product


def _algebra_identity(name: str, mul: Product, alpha: Linear):
    def asr(x, y, z):
        return mul(mul(x, y), alpha(z)) - mul(alpha(x), mul(y, z))

    if name == "associative":
        return asr
    if name == "left-alternative":
        return lambda x, y, z: asr(x, y, z) + asr(y, x, z).scaled(sign(x.p, y.p))
    if name == "right-alternative":
        return lambda x, y, z: asr(x, y, z) + asr(x, z, y).scaled(sign(y.p, z.p))
    if name == "flexible":
        return lambda x, y, z: asr(x, y, z) + asr(z, y, x).scaled(
            sign(x.p, y.p) * sign(x.p, z.p) * sign(y.p, z.p))
    if name == "cyclic-associator":
        return lambda x, y, z: asr(x, y, z) - asr(y, z, x).scaled(sign(x.p, y.p + z.p))
    if name == "multiplicative":
        return lambda x, y: alpha(mul(x, y)) - mul(alpha(x), alpha(y))
    if name == "malcev-antisymmetry":
        return lambda x, y: mul(x, y) + mul(y, x).scaled(sign(x.p, y.p))
    if name == "hom-malcev":
        def malcev(x, y, z, t):
            a2 = lambda u: alpha(alpha(u))
            lhs = mul(alpha(mul(x, z)), alpha(mul(y, t))).scaled(sign(y.p, z.p))
            rhs = (
                mul(mul(mul(x, y), alpha(z)), a2(t))
                + mul(mul(mul(y, z), alpha(t)), a2(x)).scaled(sign(x.p, y.p + z.p + t.p))
                + mul(mul(mul(z, t), alpha(x)), a2(y)).scaled(sign(x.p + y.p, z.p + t.p))
                + mul(mul(mul(t, x), alpha(y)), a2(z)).scaled(sign(t.p, x.p + y.p + z.p))
            )
            return lhs - rhs
        return malcev
    raise UnknownIdentity(name)


# ---------------------------------------------------------------- post- and pre-alternative


def _postalt_identity(k: int, lt: Product, gt: Product, dt: Product, alpha: Linear):
    def bul(u, v):
        return lt(u, v) + gt(u, v) + dt(u, v)

    a = alpha

    def four(t1, t2, t3, t4, s):
        return t1 - t2 + t3.scaled(s) - t4.scaled(s)

    def f(x, y, z):
        sxy, syz = sign(x.p, y.p), sign(y.p, z.p)
        if k == 1:
            return four(dt(dt(x, y), a(z)), dt(a(x), dt(y, z)), dt(dt(y, x), a(z)), dt(a(y), dt(x, z)), sxy)
        if k == 2:
            return four(dt(dt(x, y), a(z)), dt(a(x), dt(y, z)), dt(dt(x, z), a(y)), dt(a(x), dt(z, y)), syz)
        if k == 3:
            return four(lt(dt(x, y), a(z)), dt(a(x), lt(y, z)), lt(dt(y, x), a(z)), dt(a(y), lt(x, z)), sxy)
        if k == 4:
            return four(dt(gt(x, y), a(z)), gt(a(x), dt(y, z)), dt(gt(x, z), a(y)), gt(a(x), dt(z, y)), syz)
        if k == 5:
            return four(dt(gt(y, x), a(z)), gt(a(y), dt(x, z)), dt(lt(x, y), a(z)), dt(a(x), gt(y, z)), sxy)
        if k == 6:
            return four(dt(lt(z, x), a(y)), dt(a(z), gt(x, y)), lt(dt(z, y), a(x)), dt(a(z), lt(y, x)), sxy)
        if k == 7:
            return four(lt(gt(x, y), a(z)), gt(a(x), lt(y, z)), lt(lt(y, x), a(z)), lt(a(y), bul(x, z)), sxy)
        if k == 8:
            return four(lt(gt(x, y), a(z)), gt(a(x), lt(y, z)), gt(bul(x, z), a(y)), gt(a(x), gt(z, y)), syz)
        if k == 9:
            return four(gt(bul(x, y), a(z)), gt(a(x), gt(y, z)), gt(bul(y, x), a(z)), gt(a(y), gt(x, z)), sxy)
        if k == 10:
            return four(lt(lt(z, x), a(y)), lt(a(z), bul(x, y)), lt(lt(z, y), a(x)), lt(a(z), bul(y, x)), sxy)
        raise UnknownIdentity(f"postalt-{k}")

    return f


def _prealt_identity(k: int, lt: Product, gt: Product, alpha: Linear):
    a = alpha

    def star(u, v):
        return lt(u, v) + gt(u, v)

    def al(x, y, z):
        return gt(star(x, y), a(z)) - gt(a(x), gt(y, z))

    def am(x, y, z):
        return lt(gt(x, y), a(z)) - gt(a(x), lt(y, z))

    def ar(x, y, z):
        return lt(lt(x, y), a(z)) - lt(a(x), star(y, z))

    def f(x, y, z):
        if k == 1:
            return am(x, y, z) + ar(y, x, z).scaled(sign(x.p, y.p))
        if k == 2:
            return am(x, y, z) + al(x, z, y).scaled(sign(z.p, y.p))
        if k == 3:
            return al(x, y, z) + al(y, x, z).scaled(sign(x.p, y.p))
        if k == 4:
            return ar(x, y, z) + ar(x, z, y).scaled(sign(z.p, y.p))
        raise UnknownIdentity(f"prealt-{k}")

    return f


# ---------------------------------------------------------------- driver


def _random_homogeneous(rng: random.Random, even: int, dim: int, parity: int) -> Elem:
    idx = range(even) if parity == 0 else range(even, dim)
    return Elem({i: Fraction(rng.randint(-30, 30)) for i in idx}, parity)


def _identity_for(obj, name: str):
    if name not in CATALOG:
        raise UnknownIdentity(f"unknown identity {name!r}; catalog: {', '.join(CATALOG)}")
    alpha = Linear(obj.alpha.matrix)
    if name in ALGEBRA_IDENTITIES:
        if not hasattr(obj, "product"):
            raise UnknownIdentity(f"{name!r} applies to a Hom-algebra")
        return _algebra_identity(name, Product(obj.product), alpha)
    if not hasattr(obj, "prec"):
        raise UnknownIdentity(f"{name!r} applies to a post-alternative structure")
    k = int(name.rsplit("-", 1)[1])
    if name in POSTALT_IDENTITIES:
        return _postalt_identity(k, Product(obj.prec), Product(obj.succ), Product(obj.dot), alpha)
    if any(a for plane in obj.dot for vec in plane for a in vec):
        raise UnknownIdentity("pre-alternative identities need a zero third product")
    return _prealt_identity(k, Product(obj.prec), Product(obj.succ), alpha)


def oracle_check(obj, identity: str, trials: int = 50, seed: int = 0) -> bool:
    """Evaluate ``identity`` on ``trials`` random homogeneous combinations.

    ``obj`` is a ``HomAlgebra`` (algebra identities) or a ``PostAltStructure``.
    Parity patterns are cycled so every pattern the space admits is visited.
    Coefficients are integers in ``[-30, 30]``. Returns False on the first
    nonzero value.
    """
    f = _identity_for(obj, identity)
    p, q = obj.space.even_dim, obj.space.odd_dim
    if p + q == 0:
        return True
    parities = [x for x in (0, 1) if (p if x == 0 else q)]
    patterns = list(itertools.product(parities, repeat=ARITY[identity]))
    rng = random.Random(seed)
    for t in range(trials):
        pattern = patterns[t % len(patterns)]
        args = [_random_homogeneous(rng, p, p + q, par) for par in pattern]
        if f(*args):
            return False
    return True
