# semiloc/models/decomposition_model.py

from dataclasses import dataclass, field

import numpy as np

from semiloc.models.dilation_model import Isometry
from semiloc.models.qmap_model import CpMap


@dataclass(frozen=True, eq=False)
class Decomposition:
    """
    Saída da semilocalização E = (G ⊗ id_B) ∘ (id_A ⊗ F).

    W: H_A → H_A ⊗ H_C (Stinespring minimal de T), U: H_C ⊗ H_B → H_B ⊗ H_D,
    G: B(H_AC) → B(H_A), G(x) = W* x W, e F: B(H_B) → B(H_CB), F(b) = U*(b ⊗ 1_D)U.
    direction indica quem envia o sistema C ("A_to_B": Alice envia C para Bob).
    """

    dC: int
    dD: int
    W: np.ndarray = field(repr=False)
    U: Isometry = field(repr=False)
    G: CpMap = field(repr=False)
    F: CpMap = field(repr=False)
    reconstruction_residual: float
    F_unitality: float
    direction: str = "A_to_B"


@dataclass(frozen=True)
class VerificationReport:
    choi_distance: float
    f_unitality_defect: float
    g_cp_margin: float
    dC: int
    dD: int
    tol: float

    @property
    def passed(self) -> bool:
        return (self.choi_distance < self.tol
                and self.f_unitality_defect < self.tol
                and self.g_cp_margin > -self.tol)
