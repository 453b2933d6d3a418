# semiloc/utils/matrix_validation.py

from typing import Optional, Sequence, Tuple

import numpy as np

from semiloc.core.config import settings
from semiloc.core.exceptions import DimensionMismatchException, InvalidMatrixException


class MatrixValidator:
    """
    Classe para validação e saneamento de matrizes de entrada,
    complementando as validações do Pydantic na leitura de arquivos.
    """

    MAX_DIMENSION = 144  # Espaço composto de dois fatores de dimensão ~12

    @classmethod
    def validate_finite(cls, matrix: np.ndarray) -> Tuple[bool, Optional[str]]:
        """
        Verifica se todas as entradas são finitas.

        Args:
            matrix: Matriz a ser validada

        Returns:
            Tupla (válido, mensagem_erro)
        """
        if not np.all(np.isfinite(matrix)):
            return False, "Matriz contém entradas não finitas"
        return True, None

    @classmethod
    def validate_shape(cls, matrix: np.ndarray, shape: Sequence[int]) -> Tuple[bool, Optional[str]]:
        if matrix.ndim != 2:
            return False, f"Esperada matriz 2D, recebido array com {matrix.ndim} dimensões"
        if tuple(matrix.shape) != tuple(shape):
            return False, f"Forma {tuple(matrix.shape)} difere da esperada {tuple(shape)}"
        if max(shape) > cls.MAX_DIMENSION ** 2:
            return False, f"Dimensão acima do limite suportado ({cls.MAX_DIMENSION})"
        return True, None

    @classmethod
    def hermitian_defect(cls, matrix: np.ndarray) -> float:
        """Norma de Frobenius de C − C*."""
        return float(np.linalg.norm(matrix - matrix.conj().T))

    @classmethod
    def sanitize_hermitian(cls, matrix: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
        """
        Simetriza (C + C*)/2 quando a assimetria está abaixo da tolerância.

        Args:
            matrix: Matriz quadrada complexa
            tol: Assimetria aceita, relativa à norma da matriz

        Returns:
            Matriz hermitiana

        Raises:
            InvalidMatrixException: Se a assimetria exceder a tolerância
        """
        tol = settings.HERMITIAN_TOL if tol is None else tol
        scale = max(1.0, float(np.linalg.norm(matrix)))
        defect = cls.hermitian_defect(matrix)
        if defect > tol * scale:
            raise InvalidMatrixException(
                detail=f"Matriz não é hermitiana (defeito {defect:.3e} > {tol * scale:.3e})"
            )
        return (matrix + matrix.conj().T) / 2


def as_complex_matrix(data, shape: Optional[Sequence[int]] = None) -> np.ndarray:
    """
    Converte a entrada em matriz complexa validada (cópia somente leitura).

    Raises:
        InvalidMatrixException: forma errada ou entradas não finitas
    """
    matrix = np.array(data, dtype=complex)
    if shape is not None:
        is_valid, error_msg = MatrixValidator.validate_shape(matrix, shape)
        if not is_valid:
            raise InvalidMatrixException(detail=error_msg)
    elif matrix.ndim != 2:
        raise InvalidMatrixException(detail=f"Esperada matriz 2D, recebido array com {matrix.ndim} dimensões")

    is_valid, error_msg = MatrixValidator.validate_finite(matrix)
    if not is_valid:
        raise InvalidMatrixException(detail=error_msg)

    matrix.setflags(write=False)
    return matrix


def require_shape(matrix: np.ndarray, shape: Sequence[int], what: str = "Operador") -> None:
    if tuple(matrix.shape) != tuple(shape):
        raise DimensionMismatchException(detail=f"{what} com dimensões incompatíveis",
                                         expected=tuple(shape), got=tuple(matrix.shape))
