# semiloc/models/corpus_model.py

from dataclasses import dataclass, field
from typing import Optional

from semiloc.models.causality_model import BipartiteMap, VerdictSkeleton
from semiloc.models.qmap_model import KrausSet


@dataclass(frozen=True, eq=False)
class NamedExample:
    name: str
    map: BipartiteMap
    expected: VerdictSkeleton
    kraus: Optional[KrausSet] = field(default=None, repr=False)  # Operadores que definem o exemplo

    def __post_init__(self):
        if not self.expected.respects_lattice():
            raise ValueError(f"Veredito esperado de '{self.name}' viola o diagrama de implicações")
