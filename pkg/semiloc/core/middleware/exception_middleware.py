# semiloc/core/middleware/exception_middleware.py
"""
Middleware para tratamento centralizado de exceções dos comandos.

Este módulo define um middleware que intercepta exceções levantadas pelos
comandos da CLI, escreve o diagnóstico em stderr e converte a falha no código
de saída do contrato (1 = propriedade negativa, 2 = uso ou entrada/saída).
"""

import functools
import json
import logging
import traceback
from typing import Callable

import typer
from pydantic import ValidationError

from semiloc.core.config import settings
from semiloc.core.exceptions import EXIT_USAGE_ERROR, SemilocException

# Configurar logger
logger = logging.getLogger(__name__)


def _format_validation_error(exc: ValidationError) -> str:
    # Um diagnóstico por campo: caminho.do.campo: mensagem
    parts = []
    for error in exc.errors():
        location = ".".join(str(item) for item in error.get("loc", ())) or "arquivo"
        parts.append(f"campo {location}: {error.get('msg')}")
    return "; ".join(parts)


class ExceptionMiddleware:
    """
    Middleware para tratamento centralizado de exceções.
    Envolve cada comando e mapeia as exceções para códigos de saída.
    """

    def __call__(self, command: Callable) -> Callable:
        @functools.wraps(command)
        def dispatch(*args, **kwargs):
            try:
                return command(*args, **kwargs)

            except typer.Exit:
                raise

            except SemilocException as exc:
                # Exceções da biblioteca - já carregam código interno e de saída
                logger.warning(
                    f"Exceção da aplicação: {exc.detail} | Código: {exc.internal_code} | "
                    f"Saída: {exc.exit_code} | Comando: {command.__name__}"
                )
                typer.echo(f"erro: {exc.detail} [{exc.internal_code}]", err=True)
                raise typer.Exit(code=exc.exit_code)

            except ValidationError as exc:
                # Arquivo fora do esquema
                message = _format_validation_error(exc)
                logger.warning(f"Erro de validação: {message} | Comando: {command.__name__}")
                typer.echo(f"erro: arquivo de canal inválido ({message}) [INVALID_CHANNEL_FILE]", err=True)
                raise typer.Exit(code=EXIT_USAGE_ERROR)

            except json.JSONDecodeError as exc:
                logger.warning(f"JSON malformado: {exc.msg} | linha {exc.lineno}, coluna {exc.colno}")
                typer.echo(
                    f"erro: JSON malformado na linha {exc.lineno}, coluna {exc.colno}: {exc.msg} "
                    f"[INVALID_CHANNEL_FILE]",
                    err=True,
                )
                raise typer.Exit(code=EXIT_USAGE_ERROR)

            except OSError as exc:
                logger.warning(f"Erro de entrada/saída: {exc} | Comando: {command.__name__}")
                typer.echo(f"erro: {exc} [IO_ERROR]", err=True)
                raise typer.Exit(code=EXIT_USAGE_ERROR)

            except Exception as exc:
                # Exceções não tratadas
                # Em produção, não expor os detalhes completos do erro
                if settings.ENVIRONMENT == "production":
                    error_message = "Erro interno"
                    logger.error(f"Exceção não tratada: Tipo={type(exc).__name__} | Comando: {command.__name__}")
                else:
                    error_message = str(exc)
                    logger.error(
                        f"Exceção não tratada: {exc} | Comando: {command.__name__}\n"
                        f"Traceback: {traceback.format_exc()}"
                    )
                typer.echo(f"erro: {error_message} [INTERNAL_ERROR]", err=True)
                raise typer.Exit(code=EXIT_USAGE_ERROR)

        return dispatch
