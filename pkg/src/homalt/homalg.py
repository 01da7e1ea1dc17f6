"""Hom-superalgebras given by structure constants.

A :class:`HomAlgebra` stores ``c[i][j][k]`` with ``e_i * e_j = sum_k c[i][j][k] e_k``
and an even twist map ``alpha``. The checkers below evaluate each defining
identity on every homogeneous basis tuple; by multilinearity that is the same
as checking it on all homogeneous elements.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import gsla
from .errors import (
    DimensionMismatch,
    GradingError,
    IndexOutOfRange,
    NotAMorphism,
    NotMultiplicative,
)
from .gsla import ZERO, GradedMap, SuperSpace, koszul_sign
from .report import AxiomReport, scan


def _check_grading(space: SuperSpace, tensor, what: str = "product") -> None:
    deg = space.degrees
    for i, plane in enumerate(tensor):
        for j, vec in enumerate(plane):
            for k, a in enumerate(vec):
                if a and deg[k] != (deg[i] + deg[j]) % 2:
                    raise GradingError(
                        f"{what} is not even: {space.names[i]}*{space.names[j]} has a "
                        f"component on {space.names[k]} of the wrong parity"
                    )


def as_tensor(n: int, data) -> tuple:
    """Normalise a dense nested sequence or a sparse ``{(i, j, k): value}`` dict."""
    if isinstance(data, dict):
        t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), v in data.items():
            if not all(0 <= x < n for x in (i, j, k)):
                raise IndexOutOfRange(f"index ({i}, {j}, {k}) out of range for dim {n}")
            t[i][j][k] = gsla.to_scalar(v)
        data = t
    if len(data) != n or any(len(p) != n or any(len(v) != n for v in p) for p in data):
        raise DimensionMismatch(f"product tensor must be {n}x{n}x{n}")
    return tuple(tuple(tuple(gsla.to_scalar(a) for a in v) for v in p) for p in data)


def zero_tensor(n: int) -> tuple:
    return tuple(tuple(gsla.zero_vector(n) for _ in range(n)) for _ in range(n))


class ProductTable:
    """Sparse multiplication table for fast bilinear evaluation."""

    def __init__(self, tensor):
        self.n = len(tensor)
        self.rows = [
            [[(k, a) for k, a in enumerate(tensor[i][j]) if a] for j in range(self.n)]
            for i in range(self.n)
        ]

    def mul(self, u, v):
        n = self.n
        out = [ZERO] * n
        nv = [(b, y) for b, y in enumerate(v) if y]
        if not nv:
            return tuple(out)
        for a, x in enumerate(u):
            if not x:
                continue
            row = self.rows[a]
            for b, y in nv:
                xy = x * y
                for k, c in row[b]:
                    out[k] += xy * c
        return tuple(out)


def tensor_add(*tensors) -> tuple:
    return tuple(
        tuple(tuple(sum(vs, ZERO) for vs in zip(*vecs)) for vecs in zip(*planes))
        for planes in zip(*tensors)
    )


def tensor_scale(c, t) -> tuple:
    c = gsla.to_scalar(c)
    return tuple(tuple(tuple(c * a for a in v) for v in p) for p in t)


@dataclass(frozen=True)
class HomAlgebra:
    space: SuperSpace
    product: tuple
    alpha: GradedMap | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.space.dim
        object.__setattr__(self, "product", as_tensor(n, self.product))
        alpha = self.alpha if self.alpha is not None else gsla.identity_map(self.space)
        if not alpha.space.same_shape(self.space):
            raise DimensionMismatch("twist map lives on a different space")
        if alpha.degree != 0 and not alpha.is_zero():
            raise GradingError("the twist map must be even")
        if alpha.space != self.space:
            alpha = GradedMap(self.space, alpha.matrix, 0)
        object.__setattr__(self, "alpha", alpha)
        _check_grading(self.space, self.product)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def degrees(self) -> tuple:
        return self.space.degrees

    @cached_property
    def table(self) -> ProductTable:
        return ProductTable(self.product)

    def mul(self, u, v):
        return self.table.mul(u, v)

    def basis(self, i: int):
        return gsla.basis_vector(self.dim, i)

    def prod(self, i: int, j: int):
        return self.product[i][j]

    @cached_property
    def alpha_images(self) -> tuple:
        return tuple(self.alpha.image(i) for i in range(self.dim))

    def with_product(self, product, alpha: GradedMap | None = None, name: str = "") -> "HomAlgebra":
        return HomAlgebra(self.space, product, self.alpha if alpha is None else alpha, name)

    def is_regular(self) -> bool:
        return gsla.is_invertible(self.alpha)


def zero_algebra(space: SuperSpace, alpha: GradedMap | None = None) -> HomAlgebra:
    return HomAlgebra(space, zero_tensor(space.dim), alpha, name=f"ZERO({space.even_dim}|{space.odd_dim})")


def push_forward(f: GradedMap, tensor) -> tuple:
    """Apply ``f`` to every structure vector: the product ``f(x . y)``."""
    return tuple(tuple(gsla.apply(f, v) for v in plane) for plane in tensor)


def product_tensor_of(n: int, mul) -> tuple:
    """Tabulate a bilinear operation given as ``mul(i, j) -> vector``."""
    return tuple(tuple(tuple(mul(i, j)) for j in range(n)) for i in range(n))


# ---------------------------------------------------------------- associator


def _check_index(A: HomAlgebra, *idx) -> None:
    for i in idx:
        if not 0 <= i < A.dim:
            raise IndexOutOfRange(f"basis index {i} out of range for dim {A.dim}")


def associator(A: HomAlgebra, i: int, j: int, k: int):
    """Coordinates of ``(e_i e_j) alpha(e_k) - alpha(e_i) (e_j e_k)``."""
    _check_index(A, i, j, k)
    a = A.alpha_images
    return gsla.vec_sub(A.mul(A.product[i][j], a[k]), A.mul(a[i], A.product[j][k]))


def associator_tensor(A: HomAlgebra) -> list:
    """All basis associators, ``as_t[i][j][k]``."""
    n = A.dim
    a = A.alpha_images
    P = A.product
    return [
        [[gsla.vec_sub(A.mul(P[i][j], a[k]), A.mul(a[i], P[j][k])) for k in range(n)] for j in range(n)]
        for i in range(n)
    ]


# ---------------------------------------------------------------- identity checkers


def check_multiplicative(A: HomAlgebra) -> AxiomReport:
    a = A.alpha_images

    def defect(i, j):
        return gsla.vec_sub(gsla.apply(A.alpha, A.product[i][j]), A.mul(a[i], a[j]))

    return AxiomReport([scan("multiplicative", A.dim, 2, defect)])


def check_hom_associative(A: HomAlgebra) -> AxiomReport:
    t = associator_tensor(A)
    return AxiomReport([scan("hom-associative", A.dim, 3, lambda i, j, k: t[i][j][k])])


def _left_alt_entry(A, t):
    d = A.degrees

    def defect(i, j, k):
        s = koszul_sign(d[i], d[j])
        return tuple(x + s * y for x, y in zip(t[i][j][k], t[j][i][k]))

    return scan("left-alternative", A.dim, 3, defect)


def _right_alt_entry(A, t):
    d = A.degrees

    def defect(i, j, k):
        s = koszul_sign(d[j], d[k])
        return tuple(x + s * y for x, y in zip(t[i][j][k], t[i][k][j]))

    return scan("right-alternative", A.dim, 3, defect)


def check_left_alternative(A: HomAlgebra) -> AxiomReport:
    return AxiomReport([_left_alt_entry(A, associator_tensor(A))])


def check_right_alternative(A: HomAlgebra) -> AxiomReport:
    return AxiomReport([_right_alt_entry(A, associator_tensor(A))])


def check_alternative(A: HomAlgebra) -> AxiomReport:
    """Left and right Hom-alternativity, one entry each."""
    t = associator_tensor(A)
    return AxiomReport([_left_alt_entry(A, t), _right_alt_entry(A, t)])


def check_flexible(A: HomAlgebra) -> AxiomReport:
    t = associator_tensor(A)
    d = A.degrees

    def defect(i, j, k):
        e = d[i] * d[j] + d[i] * d[k] + d[j] * d[k]
        s = -1 if e % 2 else 1
        return tuple(x + s * y for x, y in zip(t[i][j][k], t[k][j][i]))

    return AxiomReport([scan("flexible", A.dim, 3, defect)])


def check_cyclic_associator(A: HomAlgebra) -> AxiomReport:
    t = associator_tensor(A)
    d = A.degrees

    def defect(i, j, k):
        s = koszul_sign(d[i], (d[j] + d[k]) % 2)
        return tuple(x - s * y for x, y in zip(t[i][j][k], t[j][k][i]))

    return AxiomReport([scan("cyclic-associator", A.dim, 3, defect)])


def check_morphism(f: GradedMap, A: HomAlgebra, B: HomAlgebra, weak: bool = False) -> AxiomReport:
    """Product compatibility ``f(xy) = f(x)f(y)`` and, unless weak, ``f alpha = alpha' f``."""
    if f.dim != A.dim or f.dim != B.dim:
        raise DimensionMismatch("morphism, source and target must have equal dimension")
    images = [f.image(i) for i in range(A.dim)]

    def product_defect(i, j):
        return gsla.vec_sub(gsla.apply(f, A.product[i][j]), B.mul(images[i], images[j]))

    entries = [scan("product-compatibility", A.dim, 2, product_defect)]
    if not weak:
        lhs = gsla.matmul(f.matrix, A.alpha.matrix)
        rhs = gsla.matmul(B.alpha.matrix, f.matrix)
        entries.append(
            scan("twist-compatibility", A.dim, 1,
                 lambda j: gsla.vec_sub(gsla.column(lhs, j), gsla.column(rhs, j)))
        )
    return AxiomReport(entries)


# ---------------------------------------------------------------- constructions


def opposite(A: HomAlgebra) -> HomAlgebra:
    """``x op y = -(-1)^{|x||y|} y x`` with the same twist."""
    d = A.degrees
    n = A.dim

    def mul(i, j):
        s = -koszul_sign(d[i], d[j])
        return gsla.vec_scale(s, A.product[j][i])

    return A.with_product(product_tensor_of(n, mul), name=f"{A.name}^op" if A.name else "")


def yau_twist(A: HomAlgebra, beta: GradedMap) -> HomAlgebra:
    """Push the product through a self-morphism ``beta``; the new twist is ``beta alpha``."""
    report = check_morphism(beta, A, A)
    if not report.holds:
        raise NotAMorphism("beta is not a morphism of the Hom-algebra", report)
    return HomAlgebra(
        A.space,
        push_forward(beta, A.product),
        gsla.compose(beta, A.alpha),
        f"{A.name}_beta" if A.name else "",
    )


def untwist(A: HomAlgebra) -> HomAlgebra:
    """The plain product ``alpha^-1(x) . alpha^-1(y)`` of a regular Hom-algebra.

    The result carries the identity twist and satisfies ``alpha(x .' y) = x . y``.
    """
    inv = gsla.invert(A.alpha)
    report = check_multiplicative(A)
    if not report.holds:
        raise NotMultiplicative("untwisting needs a multiplicative Hom-algebra", report)
    cols = [inv.image(i) for i in range(A.dim)]
    prod = product_tensor_of(A.dim, lambda i, j: A.mul(cols[i], cols[j]))
    return HomAlgebra(A.space, prod, None, f"{A.name}'" if A.name else "")


def alpha_power_twist(A: HomAlgebra, n: int) -> HomAlgebra:
    """Product ``alpha^n(x) . alpha^n(y)`` with twist ``alpha^(n+1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    report = check_multiplicative(A)
    if not report.holds:
        raise NotMultiplicative("the alpha^n twist needs a multiplicative Hom-algebra", report)
    an = gsla.power(A.alpha, n)
    cols = [an.image(i) for i in range(A.dim)]
    prod = product_tensor_of(A.dim, lambda i, j: A.mul(cols[i], cols[j]))
    return HomAlgebra(A.space, prod, gsla.compose(A.alpha, an), A.name)


def commutator_bracket(A: HomAlgebra) -> HomAlgebra:
    """``[x, y] = x y - (-1)^{|x||y|} y x``."""
    d = A.degrees

    def mul(i, j):
        s = koszul_sign(d[i], d[j])
        return tuple(a - s * b for a, b in zip(A.product[i][j], A.product[j][i]))

    return A.with_product(product_tensor_of(A.dim, mul), name=f"[{A.name}]" if A.name else "")


def check_super_anticommutative(L: HomAlgebra) -> AxiomReport:
    d = L.degrees

    def defect(i, j):
        s = koszul_sign(d[i], d[j])
        return tuple(a + s * b for a, b in zip(L.product[i][j], L.product[j][i]))

    return AxiomReport([scan("malcev-antisymmetry", L.dim, 2, defect)])


def check_hom_malcev(L: HomAlgebra) -> AxiomReport:
    """Super-anticommutativity plus the quartic Hom-Malcev super-identity.

    The identity is read as

        (-1)^{|y||z|} [a([x,z]), a([y,t])]
          = [[[x,y],a(z)],a^2(t)] + (-1)^{|x|(|y|+|z|+|t|)} [[[y,z],a(t)],a^2(x)]
          + (-1)^{(|x|+|y|)(|z|+|t|)} [[[z,t],a(x)],a^2(y)]
          + (-1)^{|t|(|x|+|y|+|z|)} [[[t,x],a(y)],a^2(z)].
    """
    n = L.dim
    d = L.degrees
    a1 = L.alpha_images
    a2 = tuple(gsla.apply(L.alpha, v) for v in a1)
    br = L.product
    abr = [[gsla.apply(L.alpha, br[i][j]) for j in range(n)] for i in range(n)]
    inner = [[[L.mul(br[i][j], a1[k]) for k in range(n)] for j in range(n)] for i in range(n)]
    quad = {}

    def q(x, y, z, t):
        key = (x, y, z, t)
        v = quad.get(key)
        if v is None:
            v = quad[key] = L.mul(inner[x][y][z], a2[t])
        return v

    def defect(x, y, z, t):
        dx, dy, dz, dt = d[x], d[y], d[z], d[t]
        lhs = gsla.vec_scale(koszul_sign(dy, dz), L.mul(abr[x][z], abr[y][t]))
        s2 = koszul_sign(dx, (dy + dz + dt) % 2)
        s3 = koszul_sign((dx + dy) % 2, (dz + dt) % 2)
        s4 = koszul_sign(dt, (dx + dy + dz) % 2)
        r1, r2, r3, r4 = q(x, y, z, t), q(y, z, t, x), q(z, t, x, y), q(t, x, y, z)
        return tuple(
            l - (w1 + s2 * w2 + s3 * w3 + s4 * w4)
            for l, w1, w2, w3, w4 in zip(lhs, r1, r2, r3, r4)
        )

    return check_super_anticommutative(L) + AxiomReport([scan("hom-malcev", n, 4, defect)])


# ---------------------------------------------------------------- basis changes


def change_basis(A: HomAlgebra, P: GradedMap) -> HomAlgebra:
    """Express ``A`` in the basis given by the columns of the even map ``P``.

    New structure constants are ``P^-1 (P e_i . P e_j)``; the twist becomes
    ``P^-1 alpha P``.
    """
    inv = gsla.invert(P)
    cols = [P.image(i) for i in range(A.dim)]
    prod = product_tensor_of(A.dim, lambda i, j: gsla.apply(inv, A.mul(cols[i], cols[j])))
    alpha = gsla.compose(inv, gsla.compose(A.alpha, P))
    return HomAlgebra(A.space, prod, alpha, A.name)


def permutation_map(space: SuperSpace, perm) -> GradedMap:
    """Even map sending ``e_i`` to ``e_perm[i]``; ``perm`` must preserve parity."""
    n = space.dim
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation")
    if any(space.degree(i) != space.degree(perm[i]) for i in range(n)):
        raise GradingError("permutation must preserve parity")
    cols = [gsla.basis_vector(n, perm[i]) for i in range(n)]
    return GradedMap(space, gsla.from_columns(cols), 0)
