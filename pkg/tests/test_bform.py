from fractions import Fraction as F

import pytest

from homalt import fixtures as fx
from homalt import gsla
from homalt.bform import (
    SUPERSKEW,
    SUPERSYMMETRIC,
    BilinearFormRep,
    check_alpha_compatible,
    check_form_shape,
    check_invariant,
    check_isometry,
    check_nondegenerate,
    check_phi_invariant,
    check_phi_quadratic_malcev,
    check_pseudo_euclidean,
    check_symplectic,
    check_symplectic_malcev,
    derivation_symplectic,
    opposite_symplectic,
    pe_yau_twist,
)
from homalt.errors import (
    DimensionMismatch,
    NotAnIsometry,
    NotAntisymmetric,
    NotPseudoEuclidean,
    NotSymplectic,
    SingularMatrix,
)
from homalt.gsla import GradedMap, SuperSpace
from homalt.homalg import commutator_bracket, opposite, zero_algebra

EVEN2, ODD2 = SuperSpace(2, 0), SuperSpace(0, 2)


def form(space, gram, flavor=SUPERSYMMETRIC, parity="even"):
    return BilinearFormRep(space, gram, flavor, parity)


# ---------------------------------------------------------------- shape


def test_form_shape_examples():
    assert check_form_shape(form(SuperSpace(3, 0), gsla.identity(3))).holds
    bad = check_form_shape(form(ODD2, gsla.identity(2)))
    assert not bad.holds
    assert bad.failures()[0].name == "supersymmetric"
    assert check_form_shape(form(ODD2, [[0, 1], [-1, 0]])).holds


def test_form_shape_parity():
    sp = SuperSpace(1, 1)
    mixed = form(sp, [[0, 1], [1, 0]])
    assert not check_form_shape(mixed)["even-parity"].holds
    odd = form(sp, [[0, 1], [1, 0]], parity="odd")
    assert check_form_shape(odd).holds
    with pytest.raises(DimensionMismatch):
        form(sp, [[1]])
    with pytest.raises(ValueError):
        form(sp, gsla.identity(2), flavor="hermitian")


def test_nondegenerate_examples():
    assert check_nondegenerate(form(EVEN2, gsla.identity(2)))
    assert not check_nondegenerate(form(EVEN2, [[1, 0], [0, 0]]))
    # det [[0, 1], [1, 0]] = -1
    assert check_nondegenerate(fx.dual_form())


# ---------------------------------------------------------------- invariance


def test_invariance_examples():
    assert check_invariant(zero_algebra(EVEN2), form(EVEN2, [[3, 1], [1, 5]])).holds
    assert check_invariant(fx.dual(), fx.dual_form()).holds
    # B(1.x, x) = B(x, x) = 1 but B(1, x.x) = 0
    entry = check_invariant(fx.dual(), form(EVEN2, gsla.identity(2))).entries[0]
    assert entry.witness == (0, 1, 1)
    assert entry.defect == (F(1),)


def test_phi_invariance_with_identity_is_plain_invariance():
    for name, A, Fm in fx.pe_fixtures():
        plain = check_invariant(A, Fm).holds
        assert check_phi_invariant(A, Fm, gsla.identity_map(A.space)).holds == plain, name


def test_invariance_matches_gram_tensor_equation():
    # sum_k c[i][j][k] G[k][l] == sum_k c[j][l][k] G[i][k] for all i, j, l
    cases = [(fx.dual(), fx.dual_form()), (fx.octonions(), fx.oct_trace_form()),
             (fx.tstar_super(), fx.tstar_super_form()), (fx.dual(), form(EVEN2, gsla.identity(2)))]
    for A, Fm in cases:
        c, G, n = A.product, Fm.gram, A.dim
        tensor_ok = all(
            sum(c[i][j][k] * G[k][l] for k in range(n)) == sum(c[j][l][k] * G[i][k] for k in range(n))
            for i in range(n) for j in range(n) for l in range(n)
        )
        assert check_invariant(A, Fm).holds == tensor_ok


def test_alpha_compatibility_examples():
    G = form(EVEN2, gsla.identity(2))
    assert check_alpha_compatible(G, gsla.identity_map(EVEN2)).holds
    assert check_alpha_compatible(G, GradedMap(EVEN2, [[0, 1], [1, 0]])).holds
    assert not check_alpha_compatible(G, GradedMap(EVEN2, gsla.diag([2, 1]))).holds


def test_isometry_examples():
    G = form(EVEN2, gsla.identity(2))
    assert check_isometry(gsla.identity_map(EVEN2), G, G)
    assert check_isometry(GradedMap(EVEN2, [[0, 1], [1, 0]]), G, G)
    assert not check_isometry(gsla.scalar_map(EVEN2, 2), G, G)


# ---------------------------------------------------------------- pseudo-Euclidean


def test_pseudo_euclidean_examples():
    assert check_pseudo_euclidean(fx.dual(), fx.dual_form()).holds
    assert check_pseudo_euclidean(zero_algebra(EVEN2), form(EVEN2, [[2, 1], [1, 0]])).holds
    O = fx.octonions()
    assert check_pseudo_euclidean(O, fx.oct_trace_form()).holds
    # gram = I: B(1.e1, e1) = 1 but B(1, e1 e1) = B(1, -1) = -1
    rep = check_pseudo_euclidean(O, form(O.space, gsla.identity(8)))
    assert [e.name for e in rep.failures()] == ["invariant"]
    assert rep["invariant"].witness == (0, 1, 1)
    assert rep["invariant"].defect == (F(2),)


def test_pe_fixtures_are_pe():
    for name, A, Fm in fx.pe_fixtures():
        assert check_pseudo_euclidean(A, Fm, A.alpha).holds, name


def test_pe_yau_twist():
    D, psi = fx.dual(), fx.dual_form()
    A, Fm, phi = pe_yau_twist(D, psi, gsla.identity_map(D.space))
    assert A.product == D.product and Fm == psi
    assert phi.matrix == gsla.identity(2)
    for A0, F0, beta in [(fx.tstar(), fx.tstar_form(), fx.tstar_twist_map()),
                         (fx.tstar_super(), fx.tstar_super_form(), fx.tstar_super_twist_map()),
                         (fx.octonions(), fx.oct_trace_form(), fx.oct_doubling_involution())]:
        A, Fm, phi = pe_yau_twist(A0, F0, beta)
        assert check_pseudo_euclidean(A, Fm, phi).holds


def test_pe_yau_twist_errors():
    D = fx.dual()
    with pytest.raises(NotAnIsometry):
        pe_yau_twist(D, fx.dual_form(), GradedMap(D.space, gsla.diag([1, 2])))
    with pytest.raises(NotPseudoEuclidean):
        pe_yau_twist(fx.broken2(), form(EVEN2, gsla.identity(2)), gsla.identity_map(EVEN2))


def test_phi_quadratic_malcev():
    Z = zero_algebra(ODD2)
    assert check_phi_quadratic_malcev(Z, fx.odd_plane_form()).holds
    for name, A, Fm in fx.pe_fixtures():
        assert check_phi_quadratic_malcev(commutator_bracket(A), Fm, A.alpha).holds, name
    assert check_phi_quadratic_malcev(commutator_bracket(fx.octonions()), fx.oct_trace_form()).holds


# ---------------------------------------------------------------- symplectic


def test_symplectic_examples():
    assert check_symplectic(zero_algebra(ODD2), fx.odd_plane_symplectic()).holds
    assert check_symplectic(zero_algebra(EVEN2), fx.even_plane_symplectic()).holds
    for name, A, W in fx.symplectic_instances():
        assert check_symplectic(A, W).holds, name


def test_symplectic_rejects_symmetric_form():
    rep = check_symplectic(zero_algebra(EVEN2), form(EVEN2, gsla.identity(2), SUPERSKEW))
    assert not rep["super-skew"].holds


def test_derivation_symplectic_examples():
    Z = zero_algebra(ODD2)
    W = derivation_symplectic(Z, fx.odd_plane_form(), GradedMap(ODD2, gsla.diag([1, -1])))
    # diag(1,-1)^T [[0,1],[-1,0]]
    assert W.gram == gsla.as_matrix([[0, 1], [1, 0]])
    assert check_symplectic(Z, W).holds
    Z2 = zero_algebra(EVEN2)
    W2 = derivation_symplectic(Z2, form(EVEN2, gsla.identity(2)), GradedMap(EVEN2, [[0, 1], [-1, 0]]))
    # omega(e0, e1) = B(D e0, e1) = B(-e1, e1) = -1
    assert W2.gram == gsla.as_matrix([[0, -1], [1, 0]])
    assert check_symplectic(Z2, W2).holds


def test_derivation_symplectic_errors():
    Z = zero_algebra(EVEN2)
    with pytest.raises(NotAntisymmetric):
        derivation_symplectic(Z, form(EVEN2, gsla.identity(2)), gsla.scalar_map(EVEN2, 3))
    with pytest.raises(SingularMatrix):
        derivation_symplectic(zero_algebra(ODD2), fx.odd_plane_form(), gsla.zero_map(ODD2))


def test_symplectic_malcev():
    assert check_symplectic_malcev(zero_algebra(ODD2), fx.odd_plane_symplectic()).holds
    for name, A, W in fx.symplectic_instances():
        assert check_symplectic_malcev(commutator_bracket(A), W).holds, name


def test_opposite_symplectic():
    for A, W in [(zero_algebra(ODD2), fx.odd_plane_symplectic()),
                 (zero_algebra(EVEN2), fx.even_plane_symplectic())] + [(A, W) for _, A, W in fx.symplectic_instances()]:
        Aop, W2 = opposite_symplectic(A, W)
        assert Aop.product == opposite(A).product and W2 == W
        assert check_symplectic(Aop, W2).holds
    with pytest.raises(NotSymplectic):
        opposite_symplectic(zero_algebra(EVEN2), form(EVEN2, gsla.identity(2), SUPERSKEW))
