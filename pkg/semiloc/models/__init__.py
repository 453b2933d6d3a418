# semiloc/models/__init__.py

# Importa os tipos de domínio principais
from .qmap_model import BipartiteDims, ComplexMatrix, CpMap, KrausSet
from .dilation_model import Dilation, Isometry
from .causality_model import BipartiteMap, CausalityVerdict, Classification, VerdictSkeleton
from .decomposition_model import Decomposition, VerificationReport
from .corpus_model import NamedExample

__all__ = [
    "BipartiteDims",
    "BipartiteMap",
    "CausalityVerdict",
    "Classification",
    "ComplexMatrix",
    "CpMap",
    "Decomposition",
    "Dilation",
    "Isometry",
    "KrausSet",
    "NamedExample",
    "VerdictSkeleton",
    "VerificationReport",
]
