# semiloc/cli/commands/verify.py
"""
Comando verify: recompõe (G, F) e compara com a operação original.
"""

import logging
import time
from pathlib import Path

import typer

from semiloc.cli.deps import emit_report, load_channel_file, resolve_format
from semiloc.core.config import settings
from semiloc.core.exceptions import VerificationFailedException
from semiloc.schemas.report_schemas import ReportSchema, VerificationSchema
from semiloc.services.factorize_service import FactorizationService

# Configurar logger
logger = logging.getLogger(__name__)


def verify(
        original: Path = typer.Argument(..., help="Operação bipartida original"),
        g_path: Path = typer.Argument(..., help="Fator G"),
        f_path: Path = typer.Argument(..., help="Fator F"),
        direction: str = typer.Option("A_to_B", "--direction", help="A_to_B | B_to_A"),
        tol: float = typer.Option(settings.TOL, "--tol", help="Tolerância de todas as etapas"),
        fmt: str = typer.Option(settings.REPORT_FORMAT, "--format", help="human | machine"),
):
    """
    Imprime a distância de Choi e o defeito de unitalidade de F; sai com 0
    somente se ambos ficarem abaixo de --tol.
    """
    fmt = resolve_format(fmt)
    start_time = time.perf_counter()
    schema = load_channel_file(original)
    m = schema.to_bipartite_map()
    G = load_channel_file(g_path).to_cp_map()
    F = load_channel_file(f_path).to_cp_map()

    verification = FactorizationService(tol).verify_factors(m, G, F, direction=direction)
    report = ReportSchema(
        command="verify",
        input=str(original),
        dims=schema.dims.model_dump(exclude_none=True),
        tol=tol,
        verification=VerificationSchema.from_report(verification),
        duration_s=time.perf_counter() - start_time,
    )
    emit_report(report, fmt)

    if not verification.passed:
        raise VerificationFailedException(
            detail=f"Recomposição fora da tolerância (distância {verification.choi_distance:.3e}, "
                   f"unitalidade de F {verification.f_unitality_defect:.3e})"
        )
