# semiloc/cli/deps.py
"""
Dependências compartilhadas pelos comandos: leitura e escrita de arquivos de
canal e emissão de relatórios.
"""

import json
import logging
from pathlib import Path

import typer
from jinja2 import Environment, FileSystemLoader, StrictUndefined

from semiloc.core.config import settings
from semiloc.core.exceptions import InvalidParameterException
from semiloc.schemas.channel_schemas import ChannelFileSchema
from semiloc.schemas.report_schemas import ReportSchema

# Configurar logger
logger = logging.getLogger(__name__)

TEMPLATES_DIR = Path(__file__).resolve().parent.parent / "templates"
REPORT_FORMATS = ("human", "machine")

_environment = Environment(
    loader=FileSystemLoader(str(TEMPLATES_DIR)),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=False,
)


def load_channel_file(path: Path) -> ChannelFileSchema:
    """
    Lê e valida um arquivo de canal.

    Args:
        path: Caminho do arquivo

    Returns:
        Schema validado

    Raises:
        OSError: Arquivo inexistente ou ilegível
        json.JSONDecodeError: JSON malformado (com linha e coluna)
        pydantic.ValidationError: Conteúdo fora do esquema (com o campo)
    """
    text = Path(path).read_text(encoding="utf-8")
    payload = json.loads(text)
    schema = ChannelFileSchema.model_validate(payload)
    logger.info(f"Arquivo de canal lido: {path} ({schema.repr}, dims {schema.dims.map_dims()})")
    return schema


def write_channel_file(schema: ChannelFileSchema, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(schema.dump_line(), encoding="utf-8")
    logger.info(f"Arquivo de canal gravado: {path}")
    return path


def resolve_format(fmt: str) -> str:
    if fmt not in REPORT_FORMATS:
        raise InvalidParameterException(fields={"format": f"deve ser um de {', '.join(REPORT_FORMATS)}"})
    return fmt


def render_report(report: ReportSchema, fmt: str = None) -> str:
    """Relatório em texto (template Jinja2) ou JSON de uma linha."""
    fmt = resolve_format(fmt or settings.REPORT_FORMAT)
    if fmt == "machine":
        return report.model_dump_json()
    return _environment.get_template("report.txt.j2").render(report=report)


def emit_report(report: ReportSchema, fmt: str = None) -> None:
    typer.echo(render_report(report, fmt))
