"""Named check suites over documents, and the catalog-to-checker map used to
compare the basis-tuple checkers with the randomized oracle."""
from __future__ import annotations

from .bform import (
    SUPERSKEW,
    SUPERSYMMETRIC,
    check_phi_quadratic_malcev,
    check_pseudo_euclidean,
    check_symplectic,
)
from .documents import AlgebraDocument
from .errors import SchemaError
from .homalg import (
    check_alternative,
    check_cyclic_associator,
    check_flexible,
    check_hom_associative,
    check_hom_malcev,
    check_left_alternative,
    check_multiplicative,
    check_right_alternative,
    check_super_anticommutative,
)
from .opx import check_rb_form_compat, check_rota_baxter
from .postalt import check_post_alternative, check_pre_alternative
from .report import AxiomEntry, AxiomReport

SUITES = ("alternative", "pe", "symplectic", "malcev", "postalt", "prealt", "rb")


def _pick(items: dict, name: str | None, what: str, accept=lambda v: True):
    if name is not None:
        if name not in items:
            raise SchemaError(f"document has no {what} named {name!r}")
        return items[name]
    for v in items.values():
        if accept(v):
            return v
    raise SchemaError(f"document has no suitable {what}")


def pick_form(doc: AlgebraDocument, name: str | None, flavor: str | None = None):
    return _pick(doc.forms, name, "form", lambda F: flavor is None or F.flavor == flavor)


def pick_operator(doc: AlgebraDocument, name: str | None, kind: str | None = None):
    return _pick(doc.operators, name, "operator", lambda op: kind is None or op.kind == kind)


def run_suite(doc: AlgebraDocument, suite: str, form: str | None = None,
              operator: str | None = None, phi: str | None = None) -> AxiomReport:
    """Run one named suite.

    ``form`` and ``operator`` select document entries by name; by default the
    first entry of the right flavor or kind is used. ``phi`` names a morphism
    operator for the twisted invariance of the ``pe`` suite, or ``"alpha"``.
    """
    A = doc.algebra
    if suite == "alternative":
        return check_alternative(A) + check_flexible(A) + check_cyclic_associator(A)
    if suite == "pe":
        F = pick_form(doc, form, SUPERSYMMETRIC)
        ph = None
        if phi == "alpha":
            ph = A.alpha
        elif phi is not None:
            ph = pick_operator(doc, phi).map
        return check_pseudo_euclidean(A, F, ph)
    if suite == "symplectic":
        return check_symplectic(A, pick_form(doc, form, SUPERSKEW))
    if suite == "malcev":
        if form is not None:
            return check_phi_quadratic_malcev(A, pick_form(doc, form), A.alpha)
        return check_hom_malcev(A)
    if suite in ("postalt", "prealt"):
        if doc.postalt is None:
            raise SchemaError("document has no postalt section")
        if suite == "postalt":
            return check_post_alternative(doc.postalt)
        return check_pre_alternative(doc.postalt)
    if suite == "rb":
        R = pick_operator(doc, operator, "rotabaxter").as_rota_baxter()
        report = check_rota_baxter(A, R)
        if form is not None:
            report = report + check_rb_form_compat(pick_form(doc, form), R)
        return report
    raise SchemaError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def basis_entry(obj, identity: str) -> AxiomEntry:
    """The basis-tuple checker's verdict for a catalog identity."""
    simple = {
        "associative": check_hom_associative,
        "left-alternative": check_left_alternative,
        "right-alternative": check_right_alternative,
        "flexible": check_flexible,
        "cyclic-associator": check_cyclic_associator,
        "multiplicative": check_multiplicative,
        "malcev-antisymmetry": check_super_anticommutative,
    }
    if identity in simple:
        return simple[identity](obj).entries[0]
    if identity == "hom-malcev":
        return check_hom_malcev(obj)["hom-malcev"]
    kind, k = identity.rsplit("-", 1)
    if kind == "postalt":
        return check_post_alternative(obj).entries[int(k) - 1]
    if kind == "prealt":
        return check_pre_alternative(obj).entries[int(k) - 1]
    raise SchemaError(f"unknown identity {identity!r}")
