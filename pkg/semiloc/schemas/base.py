# semiloc/schemas/base.py

from pydantic import BaseModel, ConfigDict


class CustomBaseModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    def compact_json(self) -> str:
        # JSON compacto em uma linha, sem os campos opcionais ausentes
        return self.model_dump_json(exclude_none=True)
