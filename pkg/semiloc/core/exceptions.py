# semiloc/core/exceptions.py
"""
Exceções personalizadas da biblioteca.

Este módulo define exceções específicas que fornecem mensagens de erro
significativas e os códigos de saída da CLI (1 = propriedade negativa,
2 = erro de uso ou de entrada/saída).
"""

from typing import Any, Optional

EXIT_PROPERTY_NEGATIVE = 1
EXIT_USAGE_ERROR = 2


class SemilocException(Exception):
    """
    Exceção base para todas as exceções do semiloc.
    Carrega um código interno estável e o código de saída da CLI.
    """

    def __init__(
            self,
            detail: Any = None,
            exit_code: int = EXIT_USAGE_ERROR,
            internal_code: Optional[str] = None,
    ):
        super().__init__(detail)
        self.detail = detail
        self.exit_code = exit_code
        self.internal_code = internal_code


class DimensionMismatchException(SemilocException):
    """Dimensões incompatíveis entre operandos."""

    def __init__(self, detail: str = "Dimensões incompatíveis", expected: Any = None, got: Any = None):
        shape_info = f" (esperado: {expected}, recebido: {got})" if expected is not None else ""
        super().__init__(
            detail=f"{detail}{shape_info}",
            internal_code="DIMENSION_MISMATCH"
        )


class InvalidMatrixException(SemilocException):
    """Matriz malformada: forma errada, entradas não finitas ou não hermitiana."""

    def __init__(self, detail: str = "Matriz inválida"):
        super().__init__(detail=detail, internal_code="INVALID_MATRIX")


class NotCompletelyPositiveException(SemilocException):
    """A matriz de Choi possui autovalor negativo além da tolerância."""

    def __init__(self, detail: str = "Mapa não é completamente positivo", min_eigenvalue: Optional[float] = None):
        eig_info = f" (menor autovalor: {min_eigenvalue:.3e})" if min_eigenvalue is not None else ""
        super().__init__(detail=f"{detail}{eig_info}", internal_code="NOT_CP")
        self.min_eigenvalue = min_eigenvalue


class NotMinimalException(SemilocException):
    """A dilatação não satisfaz o critério de minimalidade."""

    def __init__(self, detail: str = "Dilatação de Stinespring não é minimal"):
        super().__init__(detail=detail, internal_code="NOT_MINIMAL")


class DilationMismatchException(SemilocException):
    """Duas dilatações não realizam o mesmo mapa."""

    def __init__(self, detail: str = "Dilatações realizam mapas diferentes", distance: Optional[float] = None):
        distance_info = f" (distância de Choi: {distance:.3e})" if distance is not None else ""
        super().__init__(detail=f"{detail}{distance_info}", internal_code="DILATION_MISMATCH")
        self.distance = distance


class IntertwiningException(SemilocException):
    """O operador não comuta com a ⊗ 1, logo não se decompõe como 1 ⊗ U."""

    def __init__(self, detail: str = "Operador não entrelaça a ação da álgebra", residual: Optional[float] = None):
        residual_info = f" (resíduo: {residual:.3e})" if residual is not None else ""
        super().__init__(detail=f"{detail}{residual_info}", internal_code="INTERTWINING_ERROR")
        self.residual = residual


class NotSemicausalException(SemilocException):
    """O mapa permite sinalização de Bob para Alice; a fatoração não se aplica."""

    def __init__(self, detail: str = "Mapa não é semicausal", residual: Optional[float] = None):
        residual_info = f" (resíduo: {residual:.8f})" if residual is not None else ""
        super().__init__(
            detail=f"{detail}{residual_info}",
            exit_code=EXIT_PROPERTY_NEGATIVE,
            internal_code="NOT_SEMICAUSAL"
        )
        self.residual = residual


class VerificationFailedException(SemilocException):
    """A recomposição não reproduz o mapa original dentro da tolerância."""

    def __init__(self, detail: str = "Verificação da decomposição falhou"):
        super().__init__(
            detail=detail,
            exit_code=EXIT_PROPERTY_NEGATIVE,
            internal_code="VERIFICATION_FAILED"
        )


class InvalidChannelFileException(SemilocException):
    """Arquivo de canal ilegível ou fora do esquema."""

    def __init__(
            self,
            detail: str = "Arquivo de canal inválido",
            field: Optional[str] = None,
            line: Optional[int] = None,
    ):
        location = []
        if line is not None:
            location.append(f"linha {line}")
        if field:
            location.append(f"campo {field}")
        location_info = f" ({', '.join(location)})" if location else ""
        super().__init__(detail=f"{detail}{location_info}", internal_code="INVALID_CHANNEL_FILE")
        self.field = field
        self.line = line


class UnknownExampleException(SemilocException):
    """Exemplo nomeado inexistente no corpus."""

    def __init__(self, name: str, available: Optional[list] = None):
        options = f" (disponíveis: {', '.join(available)})" if available else ""
        super().__init__(detail=f"Exemplo desconhecido: '{name}'{options}", internal_code="UNKNOWN_EXAMPLE")


class InvalidParameterException(SemilocException):
    """Parâmetros de geração fora do intervalo permitido."""

    def __init__(self, detail: str = "Parâmetros inválidos", fields: Optional[dict] = None):
        field_errors = ""
        if fields:
            field_errors = ": " + ", ".join([f"{field}: {error}" for field, error in fields.items()])
        super().__init__(detail=f"{detail}{field_errors}", internal_code="INVALID_PARAMETER")
