# semiloc/cli/router.py

import typer

from semiloc.cli.commands import check, decompose, gen, verify
from semiloc.core.middleware import CommandLoggingMiddleware, ExceptionMiddleware

cli_router = typer.Typer(
    name="semiloc",
    help="Causalidade e fatoração semilocal de operações quânticas bipartidas.",
    no_args_is_help=True,
    add_completion=False,
)

# Middlewares - na ordem correta
_middlewares = (
    ExceptionMiddleware(),  # Primeiro (mais interno): exceções viram códigos de saída
    CommandLoggingMiddleware(),  # Segundo: logging do comando e da saída
)


def _wrap(command):
    for middleware in _middlewares:
        command = middleware(command)
    return command


# Registrar os comandos
cli_router.command("check")(_wrap(check.check))
cli_router.command("decompose")(_wrap(decompose.decompose))
cli_router.command("verify")(_wrap(verify.verify))
cli_router.command("gen")(_wrap(gen.gen))
