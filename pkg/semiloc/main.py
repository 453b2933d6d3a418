# semiloc/main.py
"""
Módulo principal da CLI semiloc.

Este módulo configura o logging e expõe a aplicação Typer com os comandos
check, decompose, verify e gen.
"""

import logging

from semiloc.cli.router import cli_router
from semiloc.core.config import settings


def configure_logging() -> None:
    # Logs vão para stderr; stdout fica reservado aos relatórios
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


app = cli_router


def main() -> None:
    configure_logging()
    app()


if __name__ == "__main__":
    main()
