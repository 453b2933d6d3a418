# semiloc/core/config.py

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Ambiente da aplicação
    ENVIRONMENT: str = "development"  # Valores possíveis: "development", "production", "testing"
    LOG_LEVEL: str = "WARNING"

    # Tolerâncias numéricas
    TOL: float = 1e-8  # Valor padrão da flag --tol, alimenta todas as etapas
    RANK_TOL: float = 1e-10  # Corte relativo ao maior autovalor para decisões de posto
    HERMITIAN_TOL: float = 1e-10  # Assimetria aceita (e simetrizada) na ingestão
    SAME_MAP_TOL: float = 1e-8  # Escala por entrada da checagem "mesmo mapa" (x din*dout)
    INTERTWINING_TOL: float = 1e-8  # Resíduo máximo de entrelaçamento ao extrair o fator tensorial

    # Saída
    REPORT_FORMAT: str = "human"  # Valores possíveis: "human", "machine"
    FORMAT_VERSION: int = 1

    @field_validator("LOG_LEVEL", mode="before")
    def normalize_log_level(cls, value):
        level = str(value).upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Nível de log inválido: {value}")
        return level

    @field_validator("REPORT_FORMAT")
    def validate_report_format(cls, value):
        if value not in {"human", "machine"}:
            raise ValueError(f"Formato de relatório inválido: {value}")
        return value

    @field_validator("TOL", "RANK_TOL", "HERMITIAN_TOL", "SAME_MAP_TOL", "INTERTWINING_TOL")
    def validate_positive_tolerance(cls, value, info):
        if not value > 0:
            raise ValueError(f"{info.field_name} deve ser estritamente positivo")
        return value

    model_config = SettingsConfigDict(env_file=".env", env_prefix="SEMILOC_", extra="ignore")


settings = Settings()
