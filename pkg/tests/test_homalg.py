import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homalt import fixtures as fx
from homalt import gsla
from homalt.errors import (
    DimensionMismatch,
    GradingError,
    IndexOutOfRange,
    NotAMorphism,
    NotMultiplicative,
    SingularMatrix,
)
from homalt.gsla import GradedMap, SuperSpace
from homalt.homalg import (
    HomAlgebra,
    alpha_power_twist,
    associator,
    change_basis,
    check_alternative,
    check_cyclic_associator,
    check_flexible,
    check_hom_associative,
    check_hom_malcev,
    check_left_alternative,
    check_morphism,
    check_multiplicative,
    check_right_alternative,
    commutator_bracket,
    opposite,
    permutation_map,
    untwist,
    yau_twist,
    zero_algebra,
)


def vec(*xs):
    return tuple(F(x) for x in xs)


# ---------------------------------------------------------------- construction


def test_product_grading_is_enforced():
    sp = SuperSpace(1, 1)
    with pytest.raises(GradingError):
        HomAlgebra(sp, {(0, 1, 0): 1})
    with pytest.raises(IndexOutOfRange):
        HomAlgebra(sp, {(0, 2, 0): 1})
    with pytest.raises(GradingError):
        HomAlgebra(sp, {}, GradedMap(sp, [[0, 1], [1, 0]], 1))


def test_associator_examples():
    assert associator(zero_algebra(SuperSpace(2, 1)), 0, 1, 2) == vec(0, 0, 0)
    # (e0 e0) e1 - e0 (e0 e1) = e1 e1 - 0 = e0
    assert associator(fx.broken2(), 0, 0, 1) == vec(1, 0)
    D = fx.dual()
    for i in range(2):
        for j in range(2):
            for k in range(2):
                assert associator(D, i, j, k) == vec(0, 0)
    with pytest.raises(IndexOutOfRange):
        associator(D, 0, 0, 2)


def test_multiplicative_examples():
    assert check_multiplicative(fx.octonions()).holds
    assert check_multiplicative(zero_algebra(SuperSpace(2, 0), GradedMap(SuperSpace(2, 0), [[1, 2], [3, 4]]))).holds
    assert check_multiplicative(fx.dual([[1, 0], [0, 2]])).holds
    assert not check_multiplicative(fx.dual([[2, 0], [0, 1]])).holds


def test_octonions_alternative_not_associative():
    O = fx.octonions()
    assert check_left_alternative(O).holds
    assert check_right_alternative(O).holds
    assert check_flexible(O).holds
    assert check_cyclic_associator(O).holds
    entry = check_hom_associative(O).entries[0]
    assert not entry.holds
    i, j, k = entry.witness
    e = [tuple(F(int(a == b)) for b in range(8)) for a in range(8)]
    expected = tuple(a - b for a, b in zip(fx.cd_mul(fx.cd_mul(e[i], e[j]), e[k]),
                                           fx.cd_mul(e[i], fx.cd_mul(e[j], e[k]))))
    assert entry.defect == expected
    assert any(entry.defect)


def test_octonion_norm_is_multiplicative():
    # independent sanity check of the Cayley-Dickson table: N(xy) = N(x)N(y)
    rng = random.Random(5)
    for _ in range(20):
        x = tuple(F(rng.randint(-9, 9)) for _ in range(8))
        y = tuple(F(rng.randint(-9, 9)) for _ in range(8))
        xy = fx.cd_mul(x, y)
        assert sum(a * a for a in xy) == sum(a * a for a in x) * sum(a * a for a in y)


def test_broken2_negative_control():
    B = fx.broken2()
    left = check_left_alternative(B).entries[0]
    assert not left.holds
    assert left.witness == (0, 0, 1)
    assert left.defect == vec(2, 0)
    assert not check_cyclic_associator(B).holds


def test_small_associative_superalgebras():
    for name in ("DUAL", "GRASSMANN(1)", "GRASSMANN(2)", "GRASSMANN(3)", "MAT(1|1)"):
        A = fx.algebra(name)
        assert check_hom_associative(A).holds, name
        assert check_alternative(A).holds, name
        assert check_flexible(A).holds, name


def test_zero_dimensional_algebra_passes_everything():
    A = zero_algebra(SuperSpace(0, 0))
    for report in (check_alternative(A), check_flexible(A), check_hom_malcev(A), check_multiplicative(A)):
        assert report.holds


# ---------------------------------------------------------------- constructions


def test_opposite_examples():
    Z = zero_algebra(SuperSpace(1, 1))
    assert opposite(Z).product == Z.product
    for name in ("OCT", "GRASSMANN(2)", "MAT(1|1)", "BROKEN2"):
        A = fx.algebra(name)
        assert opposite(opposite(A)).product == A.product
    assert check_alternative(opposite(fx.octonions())).holds
    # x op y = -(-1)^{|x||y|} y x: on GRASSMANN(1) the odd generator squares to zero either way
    G = fx.grassmann(1)
    assert opposite(G).product[0][1] == tuple(-a for a in G.product[1][0])


def test_yau_twist_examples():
    O = fx.octonions()
    beta = fx.oct_doubling_involution()
    assert check_morphism(beta, O, O).holds
    T = yau_twist(O, beta)
    assert T.alpha.matrix == beta.matrix
    assert check_alternative(T).holds
    assert yau_twist(O, gsla.identity_map(O.space)).product == O.product
    sp = SuperSpace(2, 0)
    Z = zero_algebra(sp)
    b = GradedMap(sp, [[1, 2], [0, 3]])
    assert yau_twist(Z, b).alpha.matrix == b.matrix
    with pytest.raises(NotAMorphism):
        yau_twist(fx.dual(), GradedMap(sp, gsla.diag([2, 1])))


def test_untwist_examples():
    O = fx.octonions()
    assert untwist(O).product == O.product
    T = yau_twist(O, fx.oct_doubling_involution())
    U = untwist(T)
    assert U.alpha == gsla.identity_map(O.space)
    assert check_alternative(U).holds
    # alpha(x .' y) = x . y
    for i in range(8):
        for j in range(8):
            assert gsla.apply(T.alpha, U.product[i][j]) == T.product[i][j]
    with pytest.raises(SingularMatrix):
        untwist(fx.dual([[1, 0], [0, 0]]))
    with pytest.raises(NotMultiplicative):
        untwist(fx.dual([[2, 0], [0, 1]]))


def test_alpha_power_twist_on_dual():
    D = fx.dual([[1, 0], [0, 2]])
    assert alpha_power_twist(D, 0).product == D.product
    T = alpha_power_twist(D, 1)
    # alpha(1) alpha(1) = 1, alpha(1) alpha(x) = 2x, alpha(x) alpha(x) = 0
    assert T.product[0][0] == vec(1, 0)
    assert T.product[0][1] == vec(0, 2)
    assert T.product[1][0] == vec(0, 2)
    assert T.product[1][1] == vec(0, 0)
    assert T.alpha.matrix == gsla.diag([1, 4])
    # DUAL with this twist is not Hom-alternative (as(1,1,x) = 2x - x), and neither is
    # the twisted output: as(1,1,x) = 1.4x - 1.2x = 4x, so left defect 8x, right 4x
    assert not check_alternative(D).holds
    report = check_alternative(T)
    assert report["left-alternative"].defect == vec(0, 8)
    assert report["right-alternative"].defect == vec(0, 4)
    # a Hom-alternative input with the same twist: DUAL Yau-twisted by diag(1, 2)
    Y = yau_twist(fx.dual(), GradedMap(D.space, gsla.diag([1, 2])))
    for n in range(3):
        assert check_alternative(alpha_power_twist(Y, n)).holds
    Z = zero_algebra(SuperSpace(1, 1), GradedMap(SuperSpace(1, 1), gsla.diag([2, 3])))
    assert alpha_power_twist(Z, 2).product == Z.product
    with pytest.raises(NotMultiplicative):
        alpha_power_twist(fx.dual([[2, 0], [0, 1]]), 1)


def test_commutator_bracket_examples():
    assert all(not any(v) for p in commutator_bracket(fx.dual()).product for v in p)
    L = commutator_bracket(fx.octonions())
    assert check_hom_malcev(L).holds
    M = commutator_bracket(fx.matrix11())
    # gl(1|1): [E12, E21] = E11 + E22 (odd-odd anticommutator)
    assert M.product[2][3] == vec(1, 1, 0, 0)
    assert check_hom_malcev(M).holds


def test_hom_malcev_rejects_non_lie_bracket():
    # [e0,e2] = e2, [e1,e2] = e1: the Jacobian J(e0,e1,e2) = e1 is nonzero
    sp = SuperSpace(3, 0)
    L = HomAlgebra(sp, {(0, 2, 2): 1, (2, 0, 2): -1, (1, 2, 1): 1, (2, 1, 1): -1})
    report = check_hom_malcev(L)
    assert report["malcev-antisymmetry"].holds
    assert not report["hom-malcev"].holds
    assert not check_hom_malcev(fx.octonions()).holds  # OCT itself is not anticommutative


def test_check_morphism_examples():
    O = fx.octonions()
    assert check_morphism(gsla.identity_map(O.space), O, O).holds
    zero = gsla.zero_map(O.space)
    rep = check_morphism(zero, O, O)
    assert rep.names() == ["product-compatibility", "twist-compatibility"]
    assert rep.holds
    D = fx.dual([[1, 0], [0, 2]])
    assert check_morphism(D.alpha, D, D).holds
    with pytest.raises(DimensionMismatch):
        check_morphism(gsla.identity_map(O.space), O, fx.dual())


def test_weak_morphism_skips_twist_condition():
    D = fx.dual([[1, 0], [0, 2]])
    f = GradedMap(D.space, gsla.diag([1, 3]))
    D2 = fx.dual([[1, 0], [0, 5]])
    assert not check_morphism(f, D, D2).holds
    assert check_morphism(f, D, D2, weak=True).holds


def test_change_basis_by_permutation_preserves_alternativity():
    O = fx.octonions()
    P = permutation_map(O.space, [0, 3, 1, 2, 7, 4, 6, 5])
    Q = change_basis(O, P)
    assert Q.product != O.product
    assert check_alternative(Q).holds
    assert not check_hom_associative(Q).holds


# ---------------------------------------------------------------- properties


def graded_tensors(p, q):
    n = p + q
    deg = [0] * p + [1] * q
    return st.lists(st.integers(-3, 3), min_size=n ** 3, max_size=n ** 3).map(
        lambda xs: {(i, j, k): xs[(i * n + j) * n + k]
                    for i in range(n) for j in range(n) for k in range(n)
                    if deg[k] == (deg[i] + deg[j]) % 2 and xs[(i * n + j) * n + k]}
    )


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_opposite_is_an_involution(data):
    p, q = data.draw(st.integers(0, 2)), data.draw(st.integers(0, 2))
    A = HomAlgebra(SuperSpace(p, q), data.draw(graded_tensors(p, q)))
    assert opposite(opposite(A)).product == A.product
    assert yau_twist(A, gsla.identity_map(A.space)).product == A.product


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_alternative_twists_are_flexible_with_cyclic_associator(seed):
    rng = random.Random(seed)
    A = [fx.octonions(), fx.grassmann(2), fx.dual()][seed % 3]
    beta = fx.random_automorphism(A, rng)
    T = yau_twist(A, beta)
    assert check_alternative(T).holds
    assert check_flexible(T).holds
    assert check_cyclic_associator(T).holds
    assert check_morphism(T.alpha, T, T).holds
    assert check_alternative(opposite(T)).holds
    assert check_hom_malcev(commutator_bracket(T)).holds


def test_every_fixture_satisfies_the_lemma_and_propositions():
    for name in ("DUAL", "GRASSMANN(2)", "GRASSMANN(3)", "OCT", "MAT(1|1)", "TSTAR", "TSTAR-SUPER", "ZERO(2|1)"):
        A = fx.algebra(name)
        assert check_alternative(A).holds
        assert check_flexible(A).holds and check_cyclic_associator(A).holds, name
        assert check_alternative(opposite(A)).holds, name
        assert check_hom_malcev(commutator_bracket(A)).holds, name
