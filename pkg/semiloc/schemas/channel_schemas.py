# semiloc/schemas/channel_schemas.py

from typing import Any, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import Field, PositiveInt, conint, field_validator, model_validator

from semiloc.core.config import settings
from semiloc.core.exceptions import InvalidChannelFileException, NotCompletelyPositiveException
from semiloc.models.causality_model import BipartiteMap
from semiloc.models.qmap_model import BipartiteDims, CpMap, KrausSet
from semiloc.schemas.base import CustomBaseModel
from semiloc.services.qmap_service import choi_from_kraus, dual, is_cp, kraus_from_choi, min_choi_eigenvalue

Picture = Literal["heisenberg", "schrodinger"]
Representation = Literal["kraus", "choi"]


def _pairs_to_matrix(raw: Any, shape: Tuple[int, int], where: str) -> np.ndarray:
    """Converte listas aninhadas de pares [re, im] em matriz complexa."""
    try:
        pairs = np.asarray(raw, dtype=float)
    except (TypeError, ValueError):
        raise ValueError(f"{where}: entradas devem ser pares [re, im] numéricos")
    if pairs.shape != tuple(shape) + (2,):
        raise ValueError(f"{where}: forma {pairs.shape} difere da esperada {tuple(shape) + (2,)}")
    if not np.all(np.isfinite(pairs)):
        raise ValueError(f"{where}: entradas não finitas")
    return pairs[..., 0] + 1j * pairs[..., 1]


def _matrix_to_pairs(matrix: np.ndarray) -> List[List[List[float]]]:
    # + 0.0 normaliza zeros negativos
    return [[[float(z.real) + 0.0, float(z.imag) + 0.0] for z in row] for row in np.asarray(matrix)]


# Dimensões: exatamente um dos pares {dA, dB} ou {din, dout}
class DimsSchema(CustomBaseModel):
    dA: Optional[PositiveInt] = None
    dB: Optional[PositiveInt] = None
    din: Optional[PositiveInt] = None
    dout: Optional[PositiveInt] = None

    @model_validator(mode="after")
    def validate_exactly_one_pair(self):
        bipartite = self.dA is not None or self.dB is not None
        plain = self.din is not None or self.dout is not None
        if bipartite == plain:
            raise ValueError("Informe exatamente um dos pares {dA, dB} ou {din, dout}")
        if bipartite and (self.dA is None or self.dB is None):
            raise ValueError("Par bipartido incompleto: dA e dB são obrigatórios")
        if plain and (self.din is None or self.dout is None):
            raise ValueError("Par incompleto: din e dout são obrigatórios")
        return self

    @property
    def is_bipartite(self) -> bool:
        return self.dA is not None

    def map_dims(self) -> Tuple[int, int]:
        """(din, dout) do mapa descrito."""
        if self.is_bipartite:
            return self.dA * self.dB, self.dA * self.dB
        return self.din, self.dout


class MetadataSchema(CustomBaseModel):
    name: Optional[str] = None
    seed: Optional[conint(ge=0, le=2 ** 64 - 1)] = None
    picture: Picture = "heisenberg"


# Schema do arquivo de canal (ChannelFile)
class ChannelFileSchema(CustomBaseModel):
    format_version: int
    dims: DimsSchema
    repr: Representation
    data: List[Any] = Field(..., description="Matrizes de pares [re, im] em ordem row-major")
    metadata: MetadataSchema = Field(default_factory=MetadataSchema)

    @field_validator("format_version")
    def validate_format_version(cls, value):
        if value != settings.FORMAT_VERSION:
            raise ValueError(f"Versão de formato não suportada: {value} (esperada {settings.FORMAT_VERSION})")
        return value

    @field_validator("data")
    def validate_data(cls, value, info):
        dims = info.data.get("dims")
        representation = info.data.get("repr")
        if dims is None or representation is None:
            # Erros de dims/repr já foram reportados
            return value
        din, dout = dims.map_dims()
        if representation == "choi":
            _pairs_to_matrix(value, (din * dout, din * dout), "Choi")
        else:
            if not value:
                raise ValueError("Lista de operadores de Kraus vazia")
            for index, operator in enumerate(value):
                _pairs_to_matrix(operator, (dout, din), f"Kraus[{index}]")
        return value

    def to_cp_map(self) -> CpMap:
        """
        Converte o conteúdo em CpMap (din, dout de E).

        Uma Choi gravada na imagem de Heisenberg é a Choi canônica do dual e é
        convertida por dual; operadores de Kraus independem da imagem.

        Raises:
            NotCompletelyPositiveException: Se a Choi não for positiva
        """
        din, dout = self.dims.map_dims()
        if self.repr == "kraus":
            operators = tuple(_pairs_to_matrix(op, (dout, din), f"Kraus[{i}]") for i, op in enumerate(self.data))
            return choi_from_kraus(KrausSet(din=din, dout=dout, operators=operators))

        choi = _pairs_to_matrix(self.data, (din * dout, din * dout), "Choi")
        if self.metadata.picture == "heisenberg":
            e = dual(CpMap(din=dout, dout=din, choi=choi))
        else:
            e = CpMap(din=din, dout=dout, choi=choi)
        if not is_cp(e):
            raise NotCompletelyPositiveException(min_eigenvalue=min_choi_eigenvalue(e))
        return e

    def to_bipartite_map(self) -> BipartiteMap:
        if not self.dims.is_bipartite:
            raise InvalidChannelFileException(detail="Operação bipartida exige dims {dA, dB}", field="dims")
        return BipartiteMap(dims=BipartiteDims(self.dims.dA, self.dims.dB), e=self.to_cp_map())

    @classmethod
    def from_cp_map(
            cls,
            e: Union[CpMap, BipartiteMap],
            representation: Representation = "choi",
            name: Optional[str] = None,
            seed: Optional[int] = None,
            picture: Picture = "heisenberg",
    ) -> "ChannelFileSchema":
        """
        Serializa um mapa (ou operação bipartida) no formato de arquivo.

        Args:
            e: Mapa; BipartiteMap grava dims {dA, dB}
            representation: "choi" ou "kraus" (Kraus minimal da decomposição espectral)
            name: Nome opcional para os metadados
            seed: Semente opcional para os metadados
            picture: Imagem em que a Choi é gravada
        """
        if isinstance(e, BipartiteMap):
            dims = DimsSchema(dA=e.dims.dA, dB=e.dims.dB)
            e = e.e
        else:
            dims = DimsSchema(din=e.din, dout=e.dout)

        if representation == "kraus":
            data = [_matrix_to_pairs(op) for op in kraus_from_choi(e).operators]
        elif picture == "heisenberg":
            data = _matrix_to_pairs(dual(e).choi)
        else:
            data = _matrix_to_pairs(e.choi)

        return cls(
            format_version=settings.FORMAT_VERSION,
            dims=dims,
            repr=representation,
            data=data,
            metadata=MetadataSchema(name=name, seed=seed, picture=picture),
        )

    @classmethod
    def from_kraus(
            cls,
            kraus: KrausSet,
            dims: BipartiteDims,
            name: Optional[str] = None,
            seed: Optional[int] = None,
    ) -> "ChannelFileSchema":
        """Grava os operadores de Kraus exatamente como fornecidos (arquivos de referência)."""
        return cls(
            format_version=settings.FORMAT_VERSION,
            dims=DimsSchema(dA=dims.dA, dB=dims.dB),
            repr="kraus",
            data=[_matrix_to_pairs(op) for op in kraus.operators],
            metadata=MetadataSchema(name=name, seed=seed),
        )

    def dump_line(self) -> str:
        """Texto determinístico do arquivo: JSON compacto de uma linha com quebra final."""
        return self.compact_json() + "\n"
