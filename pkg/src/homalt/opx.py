"""Operators on Hom-superalgebras: alpha^k-superderivations and Rota-Baxter operators."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import gsla
from .bform import BilinearFormRep, check_pseudo_euclidean, evaluate
from .errors import (
    DimensionMismatch,
    NotAlternative,
    NotPseudoEuclidean,
    NotRotaBaxter,
    PreconditionFailed,
    WrongWeight,
)
from .gsla import ZERO, GradedMap, koszul_sign
from .homalg import HomAlgebra, check_alternative, product_tensor_of
from .report import AxiomReport, flag, scan


@dataclass(frozen=True)
class DerivationCandidate:
    map: GradedMap
    power: int = 0

    @property
    def degree(self) -> int:
        return self.map.degree


@dataclass(frozen=True)
class RotaBaxterOp:
    map: GradedMap
    weight: object = 0

    def __post_init__(self):
        object.__setattr__(self, "weight", gsla.to_scalar(self.weight))


def check_superderivation(A: HomAlgebra, D: DerivationCandidate) -> AxiomReport:
    """``D(xy) = D(x) a^k(y) + (-1)^{|x||D|} a^k(x) D(y)`` on all basis pairs."""
    if D.map.dim != A.dim:
        raise DimensionMismatch("derivation and algebra dimensions differ")
    n = A.dim
    d = A.degrees
    ak = gsla.power(A.alpha, D.power)
    dk = [D.map.image(i) for i in range(n)]
    akk = [ak.image(i) for i in range(n)]

    def defect(i, j):
        lhs = gsla.apply(D.map, A.product[i][j])
        s = koszul_sign(d[i], D.degree)
        r1 = A.mul(dk[i], akk[j])
        r2 = A.mul(akk[i], dk[j])
        return tuple(l - a - s * b for l, a, b in zip(lhs, r1, r2))

    return AxiomReport([scan("superderivation", n, 2, defect)])


def check_antisymmetric(F: BilinearFormRep, D, phi: GradedMap | None = None) -> AxiomReport:
    """``B(D x, y) + (-1)^{|x||D|} B(x, D y) = 0``; with ``phi`` also ``phi D = D phi``."""
    m = D.map if isinstance(D, DerivationCandidate) else D
    if m.dim != F.dim:
        raise DimensionMismatch("operator and form dimensions differ")
    n = F.dim
    d = F.space.degrees
    imgs = [m.image(i) for i in range(n)]
    basis = [gsla.basis_vector(n, i) for i in range(n)]

    def defect(i, j):
        return evaluate(F, imgs[i], basis[j]) + koszul_sign(d[i], m.degree) * evaluate(F, basis[i], imgs[j])

    entries = [scan("antisymmetric", n, 2, defect)]
    if phi is not None:
        lhs = gsla.matmul(phi.matrix, m.matrix)
        rhs = gsla.matmul(m.matrix, phi.matrix)
        entries.append(scan("commutes-with-phi", n, 1,
                            lambda j: gsla.vec_sub(gsla.column(lhs, j), gsla.column(rhs, j))))
    return AxiomReport(entries)


def derivation_bracket(D1: DerivationCandidate, D2: DerivationCandidate) -> DerivationCandidate:
    """Graded commutator ``D1 D2 - (-1)^{|D1||D2|} D2 D1``."""
    if D1.map.dim != D2.map.dim:
        raise DimensionMismatch("derivations act on different spaces")
    s = koszul_sign(D1.degree, D2.degree)
    a = gsla.matmul(D1.map.matrix, D2.map.matrix)
    b = gsla.matmul(D2.map.matrix, D1.map.matrix)
    m = gsla.mat_sub(a, gsla.mat_scale(s, b))
    return DerivationCandidate(
        GradedMap(D1.map.space, m, (D1.degree + D2.degree) % 2), D1.power + D2.power
    )


# ---------------------------------------------------------------- solving for derivations


def _homogeneous_positions(space, degree):
    p = space.even_dim
    n = space.dim
    return [(r, c) for r in range(n) for c in range(n) if ((r < p) != (c < p)) == bool(degree)]


def derivation_space(A: HomAlgebra, degree: int = 0, power: int = 0,
                     form: BilinearFormRep | None = None, phi: GradedMap | None = None) -> list:
    """Basis of the homogeneous alpha^k-superderivations of the given degree.

    The Leibniz rule is linear in the matrix entries, so the space is an exact
    nullspace. With ``form`` the antisymmetry condition is imposed as well,
    with ``phi`` the commutation ``phi D = D phi``.
    """
    n = A.dim
    d = A.degrees
    unknowns = _homogeneous_positions(A.space, degree)
    ak = gsla.power(A.alpha, power).matrix
    akk = [gsla.column(ak, i) for i in range(n)]
    # the defect is linear in D: evaluating it on each unit matrix gives one
    # column of the constraint system
    columns = []
    for (r, c) in unknowns:
        unit = [[ZERO] * n for _ in range(n)]
        unit[r][c] = gsla.ONE
        E = GradedMap(A.space, unit, degree)
        eqs = []
        imgs = [E.image(i) for i in range(n)]
        for i, j in itertools.product(range(n), repeat=2):
            lhs = gsla.apply(E, A.product[i][j])
            s = koszul_sign(d[i], degree)
            r1 = A.mul(imgs[i], akk[j])
            r2 = A.mul(akk[i], imgs[j])
            eqs.extend(l - a - s * b for l, a, b in zip(lhs, r1, r2))
        if form is not None:
            for i, j in itertools.product(range(n), repeat=2):
                eqs.append(
                    evaluate(form, imgs[i], A.basis(j))
                    + koszul_sign(d[i], degree) * evaluate(form, A.basis(i), imgs[j])
                )
        if phi is not None:
            comm = gsla.mat_sub(gsla.matmul(phi.matrix, E.matrix), gsla.matmul(E.matrix, phi.matrix))
            eqs.extend(a for row in comm for a in row)
        columns.append(eqs)
    if not unknowns:
        return []
    system = gsla.transpose(columns)
    basis = []
    for vec in gsla.nullspace(system, len(unknowns)):
        m = [[ZERO] * n for _ in range(n)]
        for (r, c), v in zip(unknowns, vec):
            m[r][c] = v
        basis.append(GradedMap(A.space, m, degree))
    return basis


# ---------------------------------------------------------------- Rota-Baxter


def check_rota_baxter(A: HomAlgebra, R: RotaBaxterOp) -> AxiomReport:
    """Evenness, ``R alpha = alpha R`` and ``R(x)R(y) = R(R(x)y + xR(y) + lam xy)``."""
    if R.map.dim != A.dim:
        raise DimensionMismatch("operator and algebra dimensions differ")
    n = A.dim
    lam = R.weight
    even = R.map.degree == 0 or R.map.is_zero()
    comm = gsla.mat_sub(gsla.matmul(R.map.matrix, A.alpha.matrix), gsla.matmul(A.alpha.matrix, R.map.matrix))
    imgs = [R.map.image(i) for i in range(n)]
    basis = [A.basis(i) for i in range(n)]

    def defect(i, j):
        lhs = A.mul(imgs[i], imgs[j])
        inner = gsla.vec_add(
            gsla.vec_add(A.mul(imgs[i], basis[j]), A.mul(basis[i], imgs[j])),
            gsla.vec_scale(lam, A.product[i][j]),
        )
        return gsla.vec_sub(lhs, gsla.apply(R.map, inner))

    return AxiomReport([
        flag("even", even),
        scan("commutes-with-alpha", n, 1, lambda j: gsla.column(comm, j)),
        scan("rota-baxter", n, 2, defect),
    ])


def _require_rb_alternative(A: HomAlgebra, R: RotaBaxterOp) -> None:
    alt = check_alternative(A)
    if not alt.holds:
        raise NotAlternative("the algebra is not Hom-alternative", alt)
    rb = check_rota_baxter(A, R)
    if not rb.holds:
        raise NotRotaBaxter("R is not a Rota-Baxter operator of the stated weight", rb)


def rb_derived_product(A: HomAlgebra, R: RotaBaxterOp) -> HomAlgebra:
    """``x o y = R(x) y + x R(y) + lam x y`` with the same twist."""
    _require_rb_alternative(A, R)
    n = A.dim
    imgs = [R.map.image(i) for i in range(n)]

    def mul(i, j):
        out = gsla.vec_add(A.mul(imgs[i], A.basis(j)), A.mul(A.basis(i), imgs[j]))
        return gsla.vec_add(out, gsla.vec_scale(R.weight, A.product[i][j]))

    return A.with_product(product_tensor_of(n, mul), name=f"{A.name}_R" if A.name else "")


def check_rb_form_compat(F: BilinearFormRep, R: RotaBaxterOp) -> AxiomReport:
    """``B(Rx, y) + B(x, Ry) + lam B(x, y) = 0``, i.e. ``M^T G + G M + lam G = 0``."""
    if R.map.dim != F.dim:
        raise DimensionMismatch("operator and form dimensions differ")
    M = R.map.matrix
    G = F.gram
    total = gsla.mat_add(
        gsla.mat_add(gsla.matmul(gsla.transpose(M), G), gsla.matmul(G, M)),
        gsla.mat_scale(R.weight, G),
    )
    return AxiomReport([scan("rb-form-compatible", F.dim, 2, lambda i, j: total[i][j])])


def rb_symplectic(A: HomAlgebra, F: BilinearFormRep, R: RotaBaxterOp) -> BilinearFormRep:
    """``B_R(x, y) = B(R^-1 x, y)`` for an invertible weight-0 compatible RB operator."""
    from .bform import SUPERSKEW

    if R.weight != 0:
        raise WrongWeight(f"weight must be 0, got {R.weight}")
    inv = gsla.invert(R.map)
    pe = check_pseudo_euclidean(A, F, phi=A.alpha)
    if not pe.holds:
        raise NotPseudoEuclidean("input is not alpha-pseudo-Euclidean", pe)
    rb = check_rota_baxter(A, R)
    if not rb.holds:
        raise NotRotaBaxter("R is not a Rota-Baxter operator of weight 0", rb)
    compat = check_rb_form_compat(F, R)
    if not compat.holds:
        raise PreconditionFailed("R is not compatible with the form", compat)
    gram = gsla.matmul(gsla.transpose(inv.matrix), F.gram)
    return BilinearFormRep(F.space, gram, SUPERSKEW, "even")
