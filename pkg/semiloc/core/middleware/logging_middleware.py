# semiloc/core/middleware/logging_middleware.py
"""
Middleware para logging de comandos.

Este módulo implementa um middleware que registra informações
sobre cada comando executado e seu código de saída.
"""

import functools
import logging
import time
from typing import Callable

import typer

from semiloc.core.config import settings

# Configurar logger
logger = logging.getLogger(__name__)


class CommandLoggingMiddleware:
    """
    Middleware para logging de comandos.
    Registra o comando recebido, os argumentos e a duração.
    """

    def __call__(self, command: Callable) -> Callable:
        @functools.wraps(command)
        def dispatch(*args, **kwargs):
            # Log do comando - com informações limitadas em produção
            if settings.ENVIRONMENT == "production":
                logger.info(f"Comando: {command.__name__}")
            else:
                logger.info(f"Comando: {command.__name__} | Argumentos: {kwargs if kwargs else 'N/A'}")

            start_time = time.perf_counter()
            exit_code = 0
            try:
                return command(*args, **kwargs)
            except typer.Exit as exc:
                exit_code = exc.exit_code
                raise
            finally:
                process_time = time.perf_counter() - start_time
                if settings.ENVIRONMENT == "production":
                    logger.info(f"Saída: {exit_code} para {command.__name__}")
                else:
                    logger.info(f"Saída: {exit_code} para {command.__name__} | Tempo: {process_time:.4f}s")

        return dispatch
