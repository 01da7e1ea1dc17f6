"""Exact verification and construction toolkit for Hom-alternative superalgebras."""
from .bform import BilinearFormRep
from .errors import HomAltError, InputError, PreconditionFailed
from .gsla import GradedMap, SuperSpace, koszul_sign
from .homalg import HomAlgebra
from .opx import DerivationCandidate, RotaBaxterOp
from .postalt import PostAltStructure
from .report import AxiomEntry, AxiomReport

__all__ = [
    "AxiomEntry",
    "AxiomReport",
    "BilinearFormRep",
    "DerivationCandidate",
    "GradedMap",
    "HomAlgebra",
    "HomAltError",
    "InputError",
    "PostAltStructure",
    "PreconditionFailed",
    "RotaBaxterOp",
    "SuperSpace",
    "koszul_sign",
]
