# semiloc/core/middleware/__init__.py
from semiloc.core.middleware.exception_middleware import ExceptionMiddleware
from semiloc.core.middleware.logging_middleware import CommandLoggingMiddleware

# Exportar todos para facilitar importações
__all__ = [
    "CommandLoggingMiddleware",
    "ExceptionMiddleware",
]
