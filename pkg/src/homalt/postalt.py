"""Hom-post-alternative and Hom-pre-alternative superalgebras.

A :class:`PostAltStructure` carries three even products ``prec`` (x < y),
``succ`` (x > y) and ``dot`` (x . y) sharing one twist map. Its ten defining
axioms are evaluated with the three-term sum ``x * y = x > y + x < y + x . y``.
When ``dot`` vanishes the structure is pre-alternative; that four-axiom suite
is evaluated through its own associators ``ass_l``, ``ass_m``, ``ass_r`` and a
separately coded two-term sum.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import gsla
from .bform import BilinearFormRep, check_symplectic, evaluate
from .errors import (
    DimensionMismatch,
    GradingError,
    NotAlternative,
    NotAMorphism,
    NotPreAlt,
    NotSymplectic,
    PreconditionFailed,
    SingularMatrix,
)
from .gsla import GradedMap, SuperSpace, koszul_sign
from .homalg import (
    HomAlgebra,
    ProductTable,
    _check_grading,
    as_tensor,
    check_alternative,
    product_tensor_of,
    push_forward,
    tensor_add,
    tensor_scale,
    zero_tensor,
)
from .opx import RotaBaxterOp, _require_rb_alternative
from .report import AxiomReport, scan


@dataclass(frozen=True)
class PostAltStructure:
    space: SuperSpace
    prec: tuple
    succ: tuple
    dot: tuple
    alpha: GradedMap | None = None

    def __post_init__(self):
        n = self.space.dim
        for name in ("prec", "succ", "dot"):
            t = as_tensor(n, getattr(self, name))
            _check_grading(self.space, t, name)
            object.__setattr__(self, name, t)
        alpha = self.alpha if self.alpha is not None else gsla.identity_map(self.space)
        if alpha.dim != n:
            raise DimensionMismatch("twist map lives on a different space")
        if alpha.degree != 0 and not alpha.is_zero():
            raise GradingError("the twist map must be even")
        object.__setattr__(self, "alpha", alpha)

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_pre_alternative(self) -> bool:
        return all(not a for p in self.dot for v in p for a in v)


def pre_alternative(space: SuperSpace, prec, succ, alpha: GradedMap | None = None) -> PostAltStructure:
    return PostAltStructure(space, prec, succ, zero_tensor(space.dim), alpha)


def bullet(P: PostAltStructure) -> HomAlgebra:
    """The Hom-algebra with product ``prec + succ + dot``."""
    return HomAlgebra(P.space, tensor_add(P.prec, P.succ, P.dot), P.alpha)


# ---------------------------------------------------------------- the ten axioms


def check_post_alternative(P: PostAltStructure, legacy_axiom5: bool = False) -> AxiomReport:
    """All ten post-alternative axioms on every basis triple."""
    axioms = postalt_defects(P, legacy_axiom5)
    return AxiomReport([scan(f"post-alternative-{k}", P.dim, 3, f) for k, f in enumerate(axioms, 1)])


def postalt_defects(P: PostAltStructure, legacy_axiom5: bool = False) -> tuple:
    """The ten axiom defects as functions of a basis index triple.

    Axiom 5 is evaluated as

        (y>x).a(z) - a(y)>(x.z) + (-1)^{|x||y|} ((x<y).a(z) - a(x).(y>z)),

    the placement under which it is the super left-alternative identity of
    the dot product pulled back along the split. ``legacy_axiom5=True`` puts
    the Koszul sign on ``a(y)>(x.z)`` instead of ``a(x).(y>z)``; the two agree
    when ``|x||y|`` is even.
    """
    n = P.dim
    d = P.space.degrees
    a = [P.alpha.image(i) for i in range(n)]
    lt, gt, dt = ProductTable(P.prec), ProductTable(P.succ), ProductTable(P.dot)
    L, G, D = lt.mul, gt.mul, dt.mul
    bul = ProductTable(tensor_add(P.prec, P.succ, P.dot)).mul
    e = [gsla.basis_vector(n, i) for i in range(n)]

    def comb(*terms):
        return tuple(sum(vals) for vals in zip(*terms))

    def neg(s, v):
        return tuple(s * x for x in v)

    def ax1(x, y, z):
        s = koszul_sign(d[x], d[y])
        return comb(D(D(e[x], e[y]), a[z]), neg(-1, D(a[x], D(e[y], e[z]))),
                    neg(s, D(D(e[y], e[x]), a[z])), neg(-s, D(a[y], D(e[x], e[z]))))

    def ax2(x, y, z):
        s = koszul_sign(d[y], d[z])
        return comb(D(D(e[x], e[y]), a[z]), neg(-1, D(a[x], D(e[y], e[z]))),
                    neg(s, D(D(e[x], e[z]), a[y])), neg(-s, D(a[x], D(e[z], e[y]))))

    def ax3(x, y, z):
        s = koszul_sign(d[x], d[y])
        return comb(L(D(e[x], e[y]), a[z]), neg(-1, D(a[x], L(e[y], e[z]))),
                    neg(s, L(D(e[y], e[x]), a[z])), neg(-s, D(a[y], L(e[x], e[z]))))

    def ax4(x, y, z):
        s = koszul_sign(d[y], d[z])
        return comb(D(G(e[x], e[y]), a[z]), neg(-1, G(a[x], D(e[y], e[z]))),
                    neg(s, D(G(e[x], e[z]), a[y])), neg(-s, G(a[x], D(e[z], e[y]))))

    def ax5(x, y, z):
        s = koszul_sign(d[x], d[y])
        t1 = D(G(e[y], e[x]), a[z])
        t3 = D(L(e[x], e[y]), a[z])
        u = D(a[x], G(e[y], e[z]))
        w = G(a[y], D(e[x], e[z]))
        if legacy_axiom5:
            return comb(t1, neg(-1, u), neg(s, t3), neg(-s, w))
        return comb(t1, neg(-1, w), neg(s, t3), neg(-s, u))

    def ax6(x, y, z):
        s = koszul_sign(d[x], d[y])
        return comb(D(L(e[z], e[x]), a[y]), neg(-1, D(a[z], G(e[x], e[y]))),
                    neg(s, L(D(e[z], e[y]), a[x])), neg(-s, D(a[z], L(e[y], e[x]))))

    def ax7(x, y, z):
        s = koszul_sign(d[x], d[y])
        return comb(L(G(e[x], e[y]), a[z]), neg(-1, G(a[x], L(e[y], e[z]))),
                    neg(s, L(L(e[y], e[x]), a[z])), neg(-s, L(a[y], bul(e[x], e[z]))))

    def ax8(x, y, z):
        s = koszul_sign(d[y], d[z])
        return comb(L(G(e[x], e[y]), a[z]), neg(-1, G(a[x], L(e[y], e[z]))),
                    neg(s, G(bul(e[x], e[z]), a[y])), neg(-s, G(a[x], G(e[z], e[y]))))

    def ax9(x, y, z):
        s = koszul_sign(d[x], d[y])
        return comb(G(bul(e[x], e[y]), a[z]), neg(-1, G(a[x], G(e[y], e[z]))),
                    neg(s, G(bul(e[y], e[x]), a[z])), neg(-s, G(a[y], G(e[x], e[z]))))

    def ax10(x, y, z):
        s = koszul_sign(d[x], d[y])
        return comb(L(L(e[z], e[x]), a[y]), neg(-1, L(a[z], bul(e[x], e[y]))),
                    neg(s, L(L(e[z], e[y]), a[x])), neg(-s, L(a[z], bul(e[y], e[x]))))

    return (ax1, ax2, ax3, ax4, ax5, ax6, ax7, ax8, ax9, ax10)


# ---------------------------------------------------------------- pre-alternative suite


class _PreAlt:
    """Evaluates the three pre-alternative associators on basis vectors."""

    def __init__(self, P: PostAltStructure):
        if not P.is_pre_alternative():
            raise NotPreAlt("the third product is not identically zero")
        n = P.dim
        self.n = n
        self.a = [P.alpha.image(i) for i in range(n)]
        self.e = [gsla.basis_vector(n, i) for i in range(n)]
        self.lt = ProductTable(P.prec).mul
        self.gt = ProductTable(P.succ).mul

    def star(self, u, v):
        return gsla.vec_add(self.lt(u, v), self.gt(u, v))

    def ass_l(self, x, y, z):
        e, a, gt = self.e, self.a, self.gt
        return gsla.vec_sub(gt(self.star(e[x], e[y]), a[z]), gt(a[x], gt(e[y], e[z])))

    def ass_m(self, x, y, z):
        e, a, gt, lt = self.e, self.a, self.gt, self.lt
        return gsla.vec_sub(lt(gt(e[x], e[y]), a[z]), gt(a[x], lt(e[y], e[z])))

    def ass_r(self, x, y, z):
        e, a, lt = self.e, self.a, self.lt
        return gsla.vec_sub(lt(lt(e[x], e[y]), a[z]), lt(a[x], self.star(e[y], e[z])))


def ass_l(P: PostAltStructure, i: int, j: int, k: int):
    return _PreAlt(P).ass_l(i, j, k)


def ass_m(P: PostAltStructure, i: int, j: int, k: int):
    return _PreAlt(P).ass_m(i, j, k)


def ass_r(P: PostAltStructure, i: int, j: int, k: int):
    return _PreAlt(P).ass_r(i, j, k)


def check_pre_alternative(P: PostAltStructure) -> AxiomReport:
    pa = _PreAlt(P)
    d = P.space.degrees
    n = P.dim

    def add(u, s, v):
        return tuple(x + s * y for x, y in zip(u, v))

    def p1(x, y, z):
        return add(pa.ass_m(x, y, z), koszul_sign(d[x], d[y]), pa.ass_r(y, x, z))

    def p2(x, y, z):
        return add(pa.ass_m(x, y, z), koszul_sign(d[z], d[y]), pa.ass_l(x, z, y))

    def p3(x, y, z):
        return add(pa.ass_l(x, y, z), koszul_sign(d[x], d[y]), pa.ass_l(y, x, z))

    def p4(x, y, z):
        return add(pa.ass_r(x, y, z), koszul_sign(d[z], d[y]), pa.ass_r(x, z, y))

    return AxiomReport([
        scan(f"pre-alternative-{k}", n, 3, f) for k, f in enumerate((p1, p2, p3, p4), 1)
    ])


# ---------------------------------------------------------------- constructions


def rb_to_postalt(A: HomAlgebra, R: RotaBaxterOp) -> PostAltStructure:
    """Split a Hom-alternative product along a Rota-Baxter operator of weight lam:
    ``x < y = x R(y)``, ``x > y = R(x) y``, ``x . y = lam xy``.
    """
    _require_rb_alternative(A, R)
    n = A.dim
    imgs = [R.map.image(i) for i in range(n)]
    prec = product_tensor_of(n, lambda i, j: A.mul(A.basis(i), imgs[j]))
    succ = product_tensor_of(n, lambda i, j: A.mul(imgs[i], A.basis(j)))
    dot = tensor_scale(R.weight, A.product)
    return PostAltStructure(A.space, prec, succ, dot, A.alpha)


def postalt_yau_twist(P: PostAltStructure, beta: GradedMap) -> PostAltStructure:
    """Push all three products through ``beta``; the new twist is ``beta alpha``."""
    from .homalg import check_morphism

    for name in ("prec", "succ", "dot"):
        host = HomAlgebra(P.space, getattr(P, name), P.alpha)
        rep = check_morphism(beta, host, host)
        if not rep.holds:
            raise NotAMorphism(f"beta is not a morphism of the {name} product", rep)
    return PostAltStructure(
        P.space,
        push_forward(beta, P.prec),
        push_forward(beta, P.succ),
        push_forward(beta, P.dot),
        gsla.compose(beta, P.alpha),
    )


def symplectic_split(A: HomAlgebra, W: BilinearFormRep) -> PostAltStructure:
    """Compatible pre-alternative structure of a regular symplectic Hom-alternative superalgebra.

    ``x < y`` and ``x > y`` are the unique solutions of

        w(x < y, a^2 z) = w(x, a^-1(y) z)
        w(x > y, a^2 z) = (-1)^{|x|(|y|+|z|)} w(y, z a^-1(x))

    for all basis ``z``. Both families share the matrix ``H[a][k] = w(e_a, a^2 e_k)``,
    which is factored once.
    """
    try:
        inv = gsla.invert(A.alpha)
    except SingularMatrix as exc:
        raise PreconditionFailed("the twist map is not invertible") from exc
    alt = check_alternative(A)
    if not alt.holds:
        raise NotAlternative("input is not Hom-alternative", alt)
    sym = check_symplectic(A, W)
    if not sym.holds:
        raise NotSymplectic("form is not symplectic", sym)
    n = A.dim
    d = A.degrees
    a2 = gsla.power(A.alpha, 2)
    e = [A.basis(i) for i in range(n)]
    a2e = [a2.image(k) for k in range(n)]
    ainv = [inv.image(i) for i in range(n)]
    H = [[evaluate(W, e[r], a2e[k]) for r in range(n)] for k in range(n)]  # H^T

    rhs = []
    for i in range(n):
        for j in range(n):
            rhs.append(tuple(evaluate(W, e[i], A.mul(ainv[j], e[k])) for k in range(n)))
    for i in range(n):
        for j in range(n):
            rhs.append(tuple(
                koszul_sign(d[i], (d[j] + d[k]) % 2) * evaluate(W, e[j], A.mul(e[k], ainv[i]))
                for k in range(n)
            ))
    sols = gsla.solve_many(H, rhs) if n else []
    prec = [[sols[i * n + j] for j in range(n)] for i in range(n)]
    succ = [[sols[n * n + i * n + j] for j in range(n)] for i in range(n)]
    return pre_alternative(A.space, prec, succ, A.alpha)


def check_bullet_equals_product(A: HomAlgebra, W: BilinearFormRep, P: PostAltStructure) -> bool:
    """True iff ``prec + succ`` reproduces the product of ``A`` exactly."""
    return tensor_add(P.prec, P.succ) == A.product
