# semiloc/cli/commands/decompose.py
"""
Comando decompose: fatora uma operação semicausal e grava G e F.
"""

import logging
import time
from pathlib import Path

import typer

from semiloc.cli.deps import emit_report, load_channel_file, resolve_format, write_channel_file
from semiloc.core.config import settings
from semiloc.schemas.channel_schemas import ChannelFileSchema
from semiloc.schemas.report_schemas import DecompositionSummarySchema, ReportSchema
from semiloc.services.factorize_service import DIRECTIONS, FactorizationService
from semiloc.core.exceptions import InvalidParameterException

# Configurar logger
logger = logging.getLogger(__name__)


def decompose(
        input_path: Path = typer.Argument(..., help="Arquivo de canal da operação bipartida"),
        out: Path = typer.Option(..., "--out", help="Diretório de saída para G.json, F.json e report.json"),
        direction: str = typer.Option("A_to_B", "--direction", help="A_to_B | B_to_A"),
        tol: float = typer.Option(settings.TOL, "--tol", help="Tolerância de todas as etapas"),
        fmt: str = typer.Option(settings.REPORT_FORMAT, "--format", help="human | machine"),
):
    """
    Decompõe E = (G ⊗ id_B) ∘ (id_A ⊗ F). Sai com 1 se o mapa não for
    semicausal, imprimindo o resíduo.
    """
    fmt = resolve_format(fmt)
    if direction not in DIRECTIONS:
        raise InvalidParameterException(fields={"direction": f"deve ser um de {', '.join(DIRECTIONS)}"})

    start_time = time.perf_counter()
    schema = load_channel_file(input_path)
    m = schema.to_bipartite_map()

    service = FactorizationService(tol)
    decomposition = service.semilocalize(m, direction)
    verification = service.verify_decomposition(m, decomposition)

    name = schema.metadata.name or Path(input_path).stem
    g_path = write_channel_file(
        ChannelFileSchema.from_cp_map(decomposition.G, representation="kraus", name=f"{name}:G"),
        out / "G.json",
    )
    f_path = write_channel_file(
        ChannelFileSchema.from_cp_map(decomposition.F, representation="kraus", name=f"{name}:F"),
        out / "F.json",
    )

    report = ReportSchema(
        command="decompose",
        input=str(input_path),
        dims=schema.dims.model_dump(exclude_none=True),
        tol=tol,
        decomposition=DecompositionSummarySchema.from_decomposition(
            decomposition, verification, files={"G": str(g_path), "F": str(f_path)}
        ),
        duration_s=time.perf_counter() - start_time,
    )
    (out / "report.json").write_text(report.model_dump_json() + "\n", encoding="utf-8")
    emit_report(report, fmt)
