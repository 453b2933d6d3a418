# semiloc/schemas/report_schemas.py

from typing import Optional

from pydantic import Field, NonNegativeFloat, PositiveInt

from semiloc.models.causality_model import CausalityVerdict
from semiloc.models.decomposition_model import Decomposition, VerificationReport
from semiloc.schemas.base import CustomBaseModel


# Veredito de causalidade (booleanos e resíduos)
class VerdictSchema(CustomBaseModel):
    semicausal_BtoA_blocked: bool
    semicausal_AtoB_blocked: bool
    causal: bool
    product_localizable: bool
    residual_A: NonNegativeFloat
    residual_B: NonNegativeFloat
    semilocalizable: Optional[bool] = None
    lattice_consistent: Optional[bool] = None

    @classmethod
    def from_verdict(cls, verdict: CausalityVerdict, **extra) -> "VerdictSchema":
        return cls(
            semicausal_BtoA_blocked=verdict.semicausal_BtoA_blocked,
            semicausal_AtoB_blocked=verdict.semicausal_AtoB_blocked,
            causal=verdict.causal,
            product_localizable=verdict.product_localizable,
            residual_A=verdict.residual_A,
            residual_B=verdict.residual_B,
            **extra,
        )


# Resumo da decomposição semilocal
class DecompositionSummarySchema(CustomBaseModel):
    direction: str
    dC: PositiveInt
    dD: PositiveInt
    reconstruction_residual: NonNegativeFloat
    F_unitality: NonNegativeFloat
    g_cp_margin: float
    passed: bool
    files: Optional[dict] = Field(default=None, description="Arquivos G e F gravados")

    @classmethod
    def from_decomposition(cls, d: Decomposition, report: VerificationReport, files: Optional[dict] = None):
        return cls(
            direction=d.direction,
            dC=d.dC,
            dD=d.dD,
            reconstruction_residual=d.reconstruction_residual,
            F_unitality=d.F_unitality,
            g_cp_margin=report.g_cp_margin,
            passed=report.passed,
            files=files,
        )


# Resultado da verificação de fatores
class VerificationSchema(CustomBaseModel):
    choi_distance: NonNegativeFloat
    f_unitality_defect: NonNegativeFloat
    g_cp_margin: float
    dC: PositiveInt
    dD: PositiveInt
    passed: bool

    @classmethod
    def from_report(cls, report: VerificationReport) -> "VerificationSchema":
        return cls(
            choi_distance=report.choi_distance,
            f_unitality_defect=report.f_unitality_defect,
            g_cp_margin=report.g_cp_margin,
            dC=report.dC,
            dD=report.dD,
            passed=report.passed,
        )


# Relatório de um comando sobre um arquivo
class ReportSchema(CustomBaseModel):
    command: str
    input: str
    dims: dict
    tol: float = Field(..., gt=0)
    verdict: Optional[VerdictSchema] = None
    decomposition: Optional[DecompositionSummarySchema] = None
    verification: Optional[VerificationSchema] = None
    duration_s: NonNegativeFloat = 0.0
