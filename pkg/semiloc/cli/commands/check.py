# semiloc/cli/commands/check.py
"""
Comando check: classifica operações bipartidas no diagrama de implicações.
"""

import logging
import time
from pathlib import Path
from typing import List

import typer

from semiloc.cli.deps import emit_report, load_channel_file, resolve_format
from semiloc.core.config import settings
from semiloc.schemas.report_schemas import ReportSchema, VerdictSchema
from semiloc.services.causality_service import CausalityService

# Configurar logger
logger = logging.getLogger(__name__)


def check(
        inputs: List[Path] = typer.Argument(..., help="Arquivos de canal (um relatório por arquivo)"),
        tol: float = typer.Option(settings.TOL, "--tol", help="Tolerância de todas as etapas"),
        fmt: str = typer.Option(settings.REPORT_FORMAT, "--format", help="human | machine"),
):
    """
    Testa semicausalidade nos dois sentidos, causalidade, forma produto e
    semilocalizabilidade. Sai com 0 sempre que a análise roda, qualquer que
    seja o veredito.
    """
    fmt = resolve_format(fmt)
    service = CausalityService(tol)
    for path in inputs:
        start_time = time.perf_counter()
        schema = load_channel_file(path)
        m = schema.to_bipartite_map()
        classification = service.classify(m)
        report = ReportSchema(
            command="check",
            input=str(path),
            dims=schema.dims.model_dump(exclude_none=True),
            tol=tol,
            verdict=VerdictSchema.from_verdict(
                classification.verdict,
                semilocalizable=classification.semilocalizable,
                lattice_consistent=classification.lattice_consistent,
            ),
            duration_s=time.perf_counter() - start_time,
        )
        emit_report(report, fmt)
