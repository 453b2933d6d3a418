# semiloc/models/qmap_model.py

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from semiloc.core.exceptions import DimensionMismatchException, InvalidMatrixException
from semiloc.utils.matrix_validation import MatrixValidator, as_complex_matrix

# Matrizes complexas densas; os tipos de domínio guardam cópias somente leitura
ComplexMatrix = np.ndarray


@dataclass(frozen=True)
class BipartiteDims:
    """Par (dA, dB) do espaço H_A ⊗ H_B, com A como índice lento."""

    dA: int
    dB: int

    def __post_init__(self):
        if int(self.dA) < 1 or int(self.dB) < 1:
            raise DimensionMismatchException(detail="Dimensões bipartidas devem ser >= 1",
                                             expected=">= 1", got=(self.dA, self.dB))

    @property
    def composite(self) -> int:
        return self.dA * self.dB

    @property
    def legs(self) -> Tuple[int, int]:
        return self.dA, self.dB

    def swapped(self) -> "BipartiteDims":
        return BipartiteDims(self.dB, self.dA)


@dataclass(frozen=True, eq=False)
class CpMap:
    """
    Mapa completamente positivo E: B(H_out) → B(H_in) na imagem de Heisenberg.

    Guardado pela matriz de Choi C = Σ_ij |i⟩⟨j| ⊗ E_*(|i⟩⟨j|) sobre H_in ⊗ H_out
    (ação de Schrödinger sobre unidades matriciais, sem normalização).
    Hermiticidade é imposta na construção; positividade e subunitalidade são
    verificadas por is_cp / is_subunital.
    """

    din: int
    dout: int
    choi: ComplexMatrix = field(repr=False)

    def __post_init__(self):
        if self.din < 1 or self.dout < 1:
            raise DimensionMismatchException(detail="Dimensões do mapa devem ser >= 1",
                                             expected=">= 1", got=(self.din, self.dout))
        n = self.din * self.dout
        choi = as_complex_matrix(self.choi, shape=(n, n))
        choi = MatrixValidator.sanitize_hermitian(choi)
        choi.setflags(write=False)
        object.__setattr__(self, "choi", choi)

    @property
    def choi_tensor(self) -> np.ndarray:
        """Choi como tensor C[i, o, j, p] = ⟨o|E_*(|i⟩⟨j|)|p⟩."""
        return self.choi.reshape(self.din, self.dout, self.din, self.dout)

    def __repr__(self) -> str:
        return f"CpMap(din={self.din}, dout={self.dout})"


@dataclass(frozen=True, eq=False)
class KrausSet:
    """Operadores de Kraus K_α: H_in → H_out (matrizes dout x din), E(a) = Σ K_α* a K_α."""

    din: int
    dout: int
    operators: Tuple[ComplexMatrix, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.operators) == 0:
            raise InvalidMatrixException(detail="Conjunto de Kraus vazio")
        ops = []
        for index, op in enumerate(self.operators):
            matrix = np.array(op, dtype=complex)
            if matrix.shape != (self.dout, self.din):
                raise DimensionMismatchException(detail=f"Operador de Kraus {index} com dimensões incompatíveis",
                                                 expected=(self.dout, self.din), got=matrix.shape)
            ops.append(as_complex_matrix(matrix))
        object.__setattr__(self, "operators", tuple(ops))

    def __len__(self) -> int:
        return len(self.operators)

    def stacked(self) -> np.ndarray:
        """Array (k, dout, din) com os operadores."""
        return np.stack(self.operators)

    def __repr__(self) -> str:
        return f"KrausSet(din={self.din}, dout={self.dout}, k={len(self.operators)})"
