"""Bilinear forms on super vector spaces: pseudo-Euclidean and symplectic structures."""
from __future__ import annotations

from dataclasses import dataclass

from . import gsla
from .errors import (
    DimensionMismatch,
    NotAMorphism,
    NotAnIsometry,
    NotAntisymmetric,
    NotADerivation,
    NotPseudoEuclidean,
    NotSymplectic,
    NotAlternative,
)
from .gsla import ZERO, GradedMap, SuperSpace, koszul_sign
from .homalg import HomAlgebra, check_alternative, check_morphism, check_hom_malcev, opposite, yau_twist
from .report import AxiomReport, flag, scan

SUPERSYMMETRIC = "supersymmetric"
SUPERSKEW = "super-skew"
FLAVORS = (SUPERSYMMETRIC, SUPERSKEW)
PARITIES = ("even", "odd")


@dataclass(frozen=True)
class BilinearFormRep:
    """Gram matrix ``gram[i][j] = B(e_i, e_j)`` with its declared symmetry and parity.

    The declaration is not enforced at construction; :func:`check_form_shape`
    compares it with the matrix.
    """

    space: SuperSpace
    gram: tuple
    flavor: str = SUPERSYMMETRIC
    parity: str = "even"

    def __post_init__(self):
        g = gsla.as_matrix(self.gram)
        n = self.space.dim
        if len(g) != n or any(len(r) != n for r in g):
            raise DimensionMismatch(f"gram matrix must be {n}x{n}")
        if self.flavor not in FLAVORS:
            raise ValueError(f"flavor must be one of {FLAVORS}")
        if self.parity not in PARITIES:
            raise ValueError(f"parity must be one of {PARITIES}")
        object.__setattr__(self, "gram", g)

    @property
    def dim(self) -> int:
        return self.space.dim

    def __call__(self, u, v):
        return evaluate(self, u, v)


def evaluate(F: BilinearFormRep, u, v):
    """``u^T G v``."""
    total = ZERO
    for i, a in enumerate(u):
        if a:
            row = F.gram[i]
            total += a * sum((row[j] * b for j, b in enumerate(v) if b), ZERO)
    return total


def _same_dim(*objs) -> None:
    dims = {o.dim for o in objs}
    if len(dims) > 1:
        raise DimensionMismatch("all arguments must live on spaces of the same dimension")


def check_form_shape(F: BilinearFormRep) -> AxiomReport:
    d = F.space.degrees
    G = F.gram

    def parity_defect(i, j):
        mixed = d[i] != d[j]
        if (F.parity == "even") == mixed:
            return G[i][j]
        return ZERO

    sgn = 1 if F.flavor == SUPERSYMMETRIC else -1

    def symmetry_defect(i, j):
        return G[i][j] - sgn * koszul_sign(d[i], d[j]) * G[j][i]

    return AxiomReport([
        scan(f"{F.parity}-parity", F.dim, 2, parity_defect),
        scan(F.flavor, F.dim, 2, symmetry_defect),
    ])


def check_nondegenerate(F: BilinearFormRep) -> bool:
    return gsla.rank(F.gram) == F.dim


def _invariance(A: HomAlgebra, F: BilinearFormRep, phi: GradedMap | None, name: str):
    n = A.dim
    ph = [phi.image(i) for i in range(n)] if phi is not None else [A.basis(i) for i in range(n)]
    P = A.product

    def defect(i, j, k):
        return evaluate(F, P[i][j], ph[k]) - evaluate(F, ph[i], P[j][k])

    return scan(name, n, 3, defect)


def check_invariant(A: HomAlgebra, F: BilinearFormRep) -> AxiomReport:
    """``B(x y, z) = B(x, y z)``."""
    _same_dim(A, F)
    return AxiomReport([_invariance(A, F, None, "invariant")])


def check_phi_invariant(A: HomAlgebra, F: BilinearFormRep, phi: GradedMap) -> AxiomReport:
    """``B(x y, phi z) = B(phi x, y z)``."""
    _same_dim(A, F, phi)
    return AxiomReport([_invariance(A, F, phi, "phi-invariant")])


def check_alpha_compatible(F: BilinearFormRep, alpha: GradedMap) -> AxiomReport:
    """``B(alpha x, alpha y) = B(x, y)``, i.e. ``M^T G M = G``."""
    _same_dim(F, alpha)
    lhs = gsla.matmul(gsla.matmul(gsla.transpose(alpha.matrix), F.gram), alpha.matrix)
    return AxiomReport([scan("alpha-compatible", F.dim, 2, lambda i, j: lhs[i][j] - F.gram[i][j])])


def check_isometry(f: GradedMap, F: BilinearFormRep, F2: BilinearFormRep) -> bool:
    _same_dim(f, F, F2)
    lhs = gsla.matmul(gsla.matmul(gsla.transpose(f.matrix), F2.gram), f.matrix)
    return lhs == F.gram


def check_pseudo_euclidean(A: HomAlgebra, F: BilinearFormRep, phi: GradedMap | None = None) -> AxiomReport:
    """Shape (supersymmetric, even), nondegeneracy, (phi-)invariance, alpha-compatibility.

    Hom-alternativity of the algebra itself is part of the definition and is
    reported too.
    """
    _same_dim(A, F)
    shape = check_form_shape(BilinearFormRep(F.space, F.gram, SUPERSYMMETRIC, "even"))
    inv = check_invariant(A, F) if phi is None else check_phi_invariant(A, F, phi)
    return (
        check_alternative(A)
        + shape
        + AxiomReport([flag("nondegenerate", check_nondegenerate(F))])
        + inv
        + check_alpha_compatible(F, A.alpha)
    )


def pe_yau_twist(A: HomAlgebra, F: BilinearFormRep, beta: GradedMap):
    """Twist a pseudo-Euclidean Hom-alternative superalgebra by a PE morphism.

    Returns ``(A_beta, F, beta)``; the result is beta-pseudo-Euclidean.
    """
    pe = check_pseudo_euclidean(A, F)
    if not pe.holds:
        raise NotPseudoEuclidean("input is not pseudo-Euclidean", pe)
    mor = check_morphism(beta, A, A)
    if not mor.holds:
        raise NotAMorphism("beta is not a morphism", mor)
    if not check_isometry(beta, F, F):
        raise NotAnIsometry("beta does not preserve the form")
    return yau_twist(A, beta), F, beta


def check_phi_quadratic_malcev(L: HomAlgebra, B: BilinearFormRep, phi: GradedMap | None = None) -> AxiomReport:
    """Hom-Malcev bracket with a supersymmetric nondegenerate alpha-compatible form and

    ``B([x,y], phi z) + (-1)^{|x||y|} B(phi y, [x,z]) = 0``.
    """
    _same_dim(L, B)
    n = L.dim
    d = L.degrees
    ph = [phi.image(i) for i in range(n)] if phi is not None else [L.basis(i) for i in range(n)]
    P = L.product

    def defect(i, j, k):
        return evaluate(B, P[i][j], ph[k]) + koszul_sign(d[i], d[j]) * evaluate(B, ph[j], P[i][k])

    shape = check_form_shape(BilinearFormRep(B.space, B.gram, SUPERSYMMETRIC, "even"))
    return (
        check_hom_malcev(L)
        + shape
        + AxiomReport([flag("nondegenerate", check_nondegenerate(B))])
        + check_alpha_compatible(B, L.alpha)
        + AxiomReport([scan("quadratic-invariance", n, 3, defect)])
    )


def _closedness(A: HomAlgebra, W: BilinearFormRep, name: str = "closed"):
    n = A.dim
    d = A.degrees
    a = A.alpha_images
    P = A.product

    def defect(x, y, z):
        return (
            koszul_sign(d[x], d[z]) * evaluate(W, a[x], P[y][z])
            + koszul_sign(d[y], d[x]) * evaluate(W, a[y], P[z][x])
            + koszul_sign(d[z], d[y]) * evaluate(W, a[z], P[x][y])
        )

    return scan(name, n, 3, defect)


def check_symplectic(A: HomAlgebra, W: BilinearFormRep) -> AxiomReport:
    """Super-skew even nondegenerate form satisfying the twisted closedness identity."""
    _same_dim(A, W)
    shape = check_form_shape(BilinearFormRep(W.space, W.gram, SUPERSKEW, "even"))
    return shape + AxiomReport([flag("nondegenerate", check_nondegenerate(W)), _closedness(A, W)])


def check_symplectic_malcev(L: HomAlgebra, W: BilinearFormRep) -> AxiomReport:
    from .homalg import check_super_anticommutative

    return check_super_anticommutative(L) + check_symplectic(L, W)


def derivation_symplectic(A: HomAlgebra, F: BilinearFormRep, D: GradedMap) -> BilinearFormRep:
    """``w(x, y) = B(D x, y)`` for an invertible even antisymmetric derivation ``D``.

    Gram matrix ``D^T G``.
    """
    from .opx import DerivationCandidate, check_antisymmetric, check_superderivation

    _same_dim(A, F, D)
    if D.degree != 0 and not D.is_zero():
        raise NotADerivation("the derivation must be even")
    pe = check_pseudo_euclidean(A, F, phi=A.alpha)
    if not pe.holds:
        raise NotPseudoEuclidean("input is not alpha-pseudo-Euclidean", pe)
    der = check_superderivation(A, DerivationCandidate(D, 0))
    if not der.holds:
        raise NotADerivation("D is not a superderivation", der)
    anti = check_antisymmetric(F, D)
    if not anti.holds:
        raise NotAntisymmetric("D is not antisymmetric for the form", anti)
    gsla.invert(D)  # SingularMatrix: a degenerate D gives a degenerate w
    gram = gsla.matmul(gsla.transpose(D.matrix), F.gram)
    return BilinearFormRep(F.space, gram, SUPERSKEW, "even")


def opposite_symplectic(A: HomAlgebra, W: BilinearFormRep):
    """``(A^op, w)``; w stays symplectic on the opposite algebra."""
    alt = check_alternative(A)
    if not alt.holds:
        raise NotAlternative("input is not Hom-alternative", alt)
    sym = check_symplectic(A, W)
    if not sym.holds:
        raise NotSymplectic("form is not symplectic", sym)
    return opposite(A), W
