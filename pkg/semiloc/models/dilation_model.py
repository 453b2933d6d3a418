# semiloc/models/dilation_model.py

from dataclasses import dataclass, field

import numpy as np

from semiloc.core.exceptions import DimensionMismatchException, InvalidMatrixException
from semiloc.utils.matrix_validation import as_complex_matrix


@dataclass(frozen=True, eq=False)
class Dilation:
    """
    Representação de Stinespring E(a) = V*(a ⊗ 1_K)V.

    V: H_in → H_out ⊗ K é uma matriz (dout·k) x din, com H_out como perna lenta.
    Vψ = Σ_α (K_α ψ) ⊗ ε_α, isto é, V.reshape(dout, k, din)[:, α, :] = K_α.
    """

    din: int
    dout: int
    k: int
    V: np.ndarray = field(repr=False)
    minimal: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise DimensionMismatchException(detail="Espaço de dilatação vazio", expected=">= 1", got=self.k)
        V = as_complex_matrix(self.V)
        if V.shape != (self.dout * self.k, self.din):
            raise DimensionMismatchException(detail="Operador de Stinespring com dimensões incompatíveis",
                                             expected=(self.dout * self.k, self.din), got=V.shape)
        object.__setattr__(self, "V", V)

    @property
    def kraus_tensor(self) -> np.ndarray:
        """Array (k, dout, din) das componentes de V na base canônica de K."""
        return self.V.reshape(self.dout, self.k, self.din).transpose(1, 0, 2)


@dataclass(frozen=True, eq=False)
class Isometry:
    """Isometria U: H_src → H_dst (matriz ddst x dsrc), U*U = 1."""

    dsrc: int
    ddst: int
    U: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.dsrc > self.ddst:
            raise InvalidMatrixException(
                detail=f"Isometria exige dsrc <= ddst (recebido {self.dsrc} > {self.ddst})"
            )
        U = as_complex_matrix(self.U)
        if U.shape != (self.ddst, self.dsrc):
            raise DimensionMismatchException(detail="Isometria com dimensões incompatíveis",
                                             expected=(self.ddst, self.dsrc), got=U.shape)
        object.__setattr__(self, "U", U)

    def defect(self) -> float:
        """‖U*U − 1‖_F."""
        return float(np.linalg.norm(self.U.conj().T @ self.U - np.eye(self.dsrc)))

    @property
    def is_unitary(self) -> bool:
        return self.dsrc == self.ddst
