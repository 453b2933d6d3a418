# semiloc/models/causality_model.py

from dataclasses import dataclass, field
from typing import Optional

from semiloc.core.exceptions import DimensionMismatchException
from semiloc.models.qmap_model import BipartiteDims, CpMap


@dataclass(frozen=True, eq=False)
class BipartiteMap:
    """Operação E com H_in = H_out = H_A ⊗ H_B."""

    dims: BipartiteDims
    e: CpMap

    def __post_init__(self):
        n = self.dims.composite
        if self.e.din != n or self.e.dout != n:
            raise DimensionMismatchException(detail="Mapa bipartido deve ser quadrado sobre H_A ⊗ H_B",
                                             expected=(n, n), got=(self.e.din, self.e.dout))


@dataclass(frozen=True)
class VerdictSkeleton:
    """Somente os quatro booleanos do diagrama de implicações."""

    semicausal_BtoA_blocked: bool
    semicausal_AtoB_blocked: bool
    causal: bool
    product_localizable: bool

    def respects_lattice(self) -> bool:
        """localizável ⟹ causal ⟹ semicausal nos dois sentidos."""
        if self.causal != (self.semicausal_BtoA_blocked and self.semicausal_AtoB_blocked):
            return False
        return not (self.product_localizable and not self.causal)


@dataclass(frozen=True, eq=False)
class CausalityVerdict:
    semicausal_BtoA_blocked: bool
    semicausal_AtoB_blocked: bool
    causal: bool
    product_localizable: bool
    residual_A: float
    residual_B: float
    T: Optional[CpMap] = field(default=None, repr=False)
    Tprime: Optional[CpMap] = field(default=None, repr=False)

    def __post_init__(self):
        if self.residual_A < 0 or self.residual_B < 0:
            raise ValueError("Resíduos devem ser não negativos")

    def skeleton(self) -> VerdictSkeleton:
        return VerdictSkeleton(
            semicausal_BtoA_blocked=self.semicausal_BtoA_blocked,
            semicausal_AtoB_blocked=self.semicausal_AtoB_blocked,
            causal=self.causal,
            product_localizable=self.product_localizable,
        )


@dataclass(frozen=True, eq=False)
class Classification:
    """Veredito completo do diagrama de implicações, incluindo a semilocalizabilidade construtiva."""

    verdict: CausalityVerdict
    semilocalizable: bool
    lattice_consistent: bool
