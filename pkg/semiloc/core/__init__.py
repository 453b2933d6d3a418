# semiloc/core/__init__.py
"""
Módulo principal para componentes do core da biblioteca.

Este módulo exporta exceções e configurações.
"""

# Exportar todas as exceções para facilitar a importação
from semiloc.core.exceptions import (
    SemilocException,
    DimensionMismatchException,
    InvalidMatrixException,
    NotCompletelyPositiveException,
    NotMinimalException,
    DilationMismatchException,
    IntertwiningException,
    NotSemicausalException,
    VerificationFailedException,
    InvalidChannelFileException,
    UnknownExampleException,
    InvalidParameterException,
)

# Exportar configurações
from semiloc.core.config import settings
