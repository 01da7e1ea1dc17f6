"""Acceptance criteria 1-10, one check per criterion.

Each ``criterion_k`` returns ``(ok, detail)``. The pytest wrapper prints one
PASS/FAIL line per criterion; ``python tests/test_acceptance.py`` does the
same without pytest.
"""
import sys
import time
from fractions import Fraction as F

import pytest

from homalt import fixtures as fx
from homalt import gsla
from homalt.bform import (
    SUPERSYMMETRIC,
    BilinearFormRep,
    check_form_shape,
    check_phi_quadratic_malcev,
    check_pseudo_euclidean,
    derivation_symplectic,
    pe_yau_twist,
)
from homalt.gsla import GradedMap, SuperSpace
from homalt.homalg import (
    HomAlgebra,
    alpha_power_twist,
    check_alternative,
    check_cyclic_associator,
    check_flexible,
    check_hom_associative,
    check_hom_malcev,
    check_left_alternative,
    check_multiplicative,
    check_right_alternative,
    check_super_anticommutative,
    commutator_bracket,
    opposite,
    untwist,
    yau_twist,
    zero_algebra,
    zero_tensor,
)
from homalt.opx import RotaBaxterOp, check_rb_form_compat, check_rota_baxter, rb_derived_product, rb_symplectic
from homalt.oracle import ALGEBRA_IDENTITIES, POSTALT_IDENTITIES, PREALT_IDENTITIES, oracle_check
from homalt.postalt import (
    PostAltStructure,
    bullet,
    check_bullet_equals_product,
    check_post_alternative,
    check_pre_alternative,
    pre_alternative,
    rb_to_postalt,
    symplectic_split,
)

ORACLE_TRIALS = 50

# alternative fixtures of dimension at most 8
RB_FIXTURES = ("ZERO(1|1)", "ZERO(0|2)", "DUAL", "GRASSMANN(1)", "GRASSMANN(2)", "GRASSMANN(3)",
               "OCT", "MAT(1|1)", "TSTAR", "TSTAR-SUPER")


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def criterion_1():
    O = fx.octonions()

    def run():
        return [check_left_alternative(O), check_right_alternative(O), check_flexible(O),
                check_cyclic_associator(O)], check_hom_associative(O)

    (passing, assoc), secs = _timed(run)
    e = assoc.entries[0]
    ok = all(r.holds for r in passing) and not assoc.holds and e.witness is not None and secs < 5
    return ok, f"alternative identities hold, associativity fails at {e.witness}; {secs:.2f} s (< 5 s)"


def criterion_2():
    rep, secs = _timed(lambda: check_hom_malcev(commutator_bracket(fx.octonions())))
    return rep.holds and secs < 30, f"8^4 quadruples checked, holds={rep.holds}; {secs:.2f} s (< 30 s)"


def criterion_3():
    bases = [fx.octonions(), fx.grassmann(2), fx.dual()]
    twists = fx.seeded_yau_twists(50, seed=0)
    bad = []
    for A in bases:
        if not check_alternative(opposite(A)).holds:
            bad.append(f"opposite({A.name})")
    for k, (A, beta, T) in enumerate(twists):
        if T != yau_twist(A, beta) or not check_alternative(T).holds:
            bad.append(f"twist {k}")
        if not check_alternative(opposite(T)).holds:
            bad.append(f"opposite(twist {k})")
        if T.is_regular():
            U = untwist(T)
            if U.alpha.matrix != gsla.identity(U.dim) or not check_alternative(U).holds:
                bad.append(f"untwist(twist {k})")
        else:
            bad.append(f"twist {k} not regular")
    return not bad, f"3 bases + {len(twists)} seeded twists; failures: {bad or 'none'}"


def criterion_4():
    D, psi = fx.dual(), fx.dual_form()
    pe = check_pseudo_euclidean(D, psi).holds
    malcev = check_phi_quadratic_malcev(commutator_bracket(D), psi, gsla.identity_map(D.space)).holds
    A, Fm, phi = pe_yau_twist(D, psi, gsla.identity_map(D.space))
    same = A.product == D.product and A.alpha.matrix == D.alpha.matrix and Fm == psi
    return pe and malcev and same, f"PE={pe}, phi-quadratic Malcev={malcev}, identity twist unchanged={same}"


def rb_cases():
    cases = [("DUAL R(1)=x lam=0", fx.dual(), RotaBaxterOp(GradedMap(SuperSpace(2, 0), [[0, 0], [1, 0]]), 0))]
    for name in RB_FIXTURES:
        A = fx.algebra(name)
        for lam in (0, 1):
            cases.append((f"{name} R=0 lam={lam}", A, RotaBaxterOp(gsla.zero_map(A.space), lam)))
        cases.append((f"{name} R=-id lam=1", A, RotaBaxterOp(gsla.scalar_map(A.space, -1), 1)))
    return cases


def criterion_5():
    bad = []
    cases = rb_cases()
    for label, A, R in cases:
        if not check_rota_baxter(A, R).holds:
            bad.append(f"{label}: rota-baxter")
            continue
        P = rb_to_postalt(A, R)
        if not check_post_alternative(P).holds:
            bad.append(f"{label}: post-alternative")
        B = bullet(P)
        if not check_alternative(B).holds or B.product != rb_derived_product(A, R).product:
            bad.append(f"{label}: bullet")
        if R.weight == 0 and not check_pre_alternative(P).holds:
            bad.append(f"{label}: pre-alternative")
    return not bad, f"{len(cases)} (algebra, R, lambda) cases; failures: {bad or 'none'}"


def criterion_6():
    bad = []
    cases = rb_cases()
    for label, A, R in cases:
        for n in (0, 1, 2):
            B = alpha_power_twist(A, n)
            if B.alpha.matrix != gsla.power(A.alpha, n + 1).matrix or not check_rota_baxter(B, R).holds:
                bad.append(f"{label} n={n}")
    return not bad, f"{len(cases)} cases x n in {{0,1,2}}; failures: {bad or 'none'}"


def criterion_7():
    bad = []
    for sp, W in [(SuperSpace(0, 2), fx.odd_plane_symplectic()), (SuperSpace(2, 0), fx.even_plane_symplectic())]:
        P = symplectic_split(zero_algebra(sp), W)
        if P.prec != zero_tensor(2) or P.succ != zero_tensor(2):
            bad.append(f"ZERO({sp.even_dim}|{sp.odd_dim})")
    instances = fx.symplectic_instances()
    for name, A, W in instances:
        P = symplectic_split(A, W)
        if not check_pre_alternative(P).holds or not check_bullet_equals_product(A, W, P):
            bad.append(name)
    names = ", ".join(n for n, _, _ in instances)
    return not bad and len(instances) > 0, f"instances: {names}; failures: {bad or 'none'}"


def criterion_8():
    sp = SuperSpace(0, 2)
    Z = zero_algebra(sp)
    R = RotaBaxterOp(GradedMap(sp, gsla.diag([1, -1])), 0)
    Wr = rb_symplectic(Z, fx.odd_plane_form(), R)
    Wd = derivation_symplectic(Z, fx.odd_plane_form(), gsla.invert(R.map))
    return Wr.gram == Wd.gram, f"rb_symplectic gram {[list(map(str, r)) for r in Wr.gram]} equals derivation route"


def _non_lie_bracket():
    t = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    t[0][2][2], t[2][0][2] = 1, -1
    t[1][2][1], t[2][1][1] = 1, -1
    return HomAlgebra(SuperSpace(3, 0), t, None, "non-Lie bracket")


def oracle_algebras():
    out = [fx.algebra(n) for n in RB_FIXTURES] + [fx.broken2(), fx.dual(gsla.diag([1, 2]))]
    out += [A for name, A, _ in fx.pe_fixtures() if "twisted" in name]
    out += [commutator_bracket(fx.octonions()), commutator_bracket(fx.matrix11()), _non_lie_bracket()]
    out.append(fx.seeded_yau_twists(1, seed=0)[0][2])
    return out


def oracle_structures():
    out = [rb_to_postalt(A, R) for _, A, R in rb_cases() if A.dim <= 4]
    out += [symplectic_split(A, W) for _, A, W in fx.symplectic_instances()]
    z = zero_tensor(2)
    out.append(PostAltStructure(SuperSpace(2, 0), z, z, fx.broken2().product))
    out.append(pre_alternative(SuperSpace(1, 1), [[(1, 0), (0, 2)], [(0, 1), (3, 0)]],
                               [[(2, 0), (0, -1)], [(0, 1), (1, 0)]]))
    return out


def _algebra_reports(A):
    return {
        "associative": check_hom_associative(A).entries[0],
        "left-alternative": check_left_alternative(A).entries[0],
        "right-alternative": check_right_alternative(A).entries[0],
        "flexible": check_flexible(A).entries[0],
        "cyclic-associator": check_cyclic_associator(A).entries[0],
        "multiplicative": check_multiplicative(A).entries[0],
        "malcev-antisymmetry": check_super_anticommutative(A).entries[0],
        "hom-malcev": check_hom_malcev(A)["hom-malcev"],
    }


def criterion_9():
    disagreements, checked, failures_seen = [], 0, 0
    for A in oracle_algebras():
        reports = _algebra_reports(A)
        assert set(reports) == set(ALGEBRA_IDENTITIES)
        for ident in ALGEBRA_IDENTITIES:
            basis = reports[ident].holds
            checked += 1
            failures_seen += not basis
            if basis != oracle_check(A, ident, trials=ORACLE_TRIALS, seed=0):
                disagreements.append(f"{A.name or A.dim}:{ident}")
    for P in oracle_structures():
        post = check_post_alternative(P)
        pre = check_pre_alternative(P) if P.is_pre_alternative() else None
        for k, ident in enumerate(POSTALT_IDENTITIES):
            basis = post.entries[k].holds
            checked += 1
            failures_seen += not basis
            if basis != oracle_check(P, ident, trials=ORACLE_TRIALS, seed=0):
                disagreements.append(f"postalt dim {P.dim}:{ident}")
        if pre is None:
            continue
        for k, ident in enumerate(PREALT_IDENTITIES):
            basis = pre.entries[k].holds
            checked += 1
            failures_seen += not basis
            if basis != oracle_check(P, ident, trials=ORACLE_TRIALS, seed=0):
                disagreements.append(f"prealt dim {P.dim}:{ident}")
    detail = (f"{checked} (object, identity) pairs, {failures_seen} failing on both routes, "
              f"{ORACLE_TRIALS} trials each; disagreements: {disagreements or 'none'}")
    return not disagreements, detail


def criterion_10():
    left = check_left_alternative(fx.broken2()).entries[0]
    broken = (not left.holds) and left.witness == (0, 0, 1) and left.defect == (F(2), F(0))
    sp = SuperSpace(0, 2)
    shape = not check_form_shape(BilinearFormRep(sp, gsla.identity(2), SUPERSYMMETRIC)).holds
    compat = not check_rb_form_compat(fx.odd_plane_form(), RotaBaxterOp(gsla.identity_map(sp), 0)).holds
    return broken and shape and compat, (
        f"BROKEN2 witness {left.witness} defect {tuple(map(str, left.defect))}; "
        f"identity gram on 0|2 rejected={shape}; R=id incompatible={compat}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(k, ok, detail):
    return f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("k", range(1, 11))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        results.append(ok)
        print(_line(k, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
