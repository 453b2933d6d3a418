import json

import numpy as np
import pytest
from numpy.testing import assert_allclose
from pydantic import ValidationError

from semiloc.core.exceptions import InvalidChannelFileException, NotCompletelyPositiveException
from semiloc.schemas.channel_schemas import ChannelFileSchema, DimsSchema
from semiloc.services.corpus_service import random_channel, random_semicausal
from semiloc.services.qmap_service import choi_distance, dual

_IDENTITY_2 = [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]


# Teste para arquivo de canal válido com operadores de Kraus
def test_valid_kraus_channel_file():
    payload = {
        "format_version": 1,
        "dims": {"din": 2, "dout": 2},
        "repr": "kraus",
        "data": [_IDENTITY_2],
    }

    schema = ChannelFileSchema(**payload)
    e = schema.to_cp_map()

    assert schema.metadata.picture == "heisenberg"
    assert schema.metadata.name is None
    assert (e.din, e.dout) == (2, 2)
    assert_allclose(e.choi[0, 0], 1.0)


# Teste para exigir exatamente um par de dimensões
@pytest.mark.parametrize("dims", [
    {"dA": 2, "dB": 2, "din": 4, "dout": 4},
    {"dA": 2},
    {"dout": 3},
    {},
    {"dA": 0, "dB": 2},
])
def test_invalid_dims(dims):
    with pytest.raises(ValidationError):
        DimsSchema(**dims)


# Teste para versão de formato não suportada
def test_invalid_format_version():
    with pytest.raises(ValidationError) as exc_info:
        ChannelFileSchema(format_version=2, dims={"din": 2, "dout": 2}, repr="kraus", data=[_IDENTITY_2])

    assert "format_version" in str(exc_info.value)


# Teste para representação desconhecida
def test_invalid_representation():
    with pytest.raises(ValidationError):
        ChannelFileSchema(format_version=1, dims={"din": 2, "dout": 2}, repr="ptm", data=[_IDENTITY_2])


# Teste para operador de Kraus com forma errada
def test_kraus_with_wrong_shape():
    with pytest.raises(ValidationError) as exc_info:
        ChannelFileSchema(format_version=1, dims={"din": 2, "dout": 3}, repr="kraus", data=[_IDENTITY_2])

    assert "Kraus[0]" in str(exc_info.value)


# Teste para entradas que não são pares [re, im]
def test_entries_must_be_pairs():
    with pytest.raises(ValidationError):
        ChannelFileSchema(format_version=1, dims={"din": 1, "dout": 1}, repr="kraus", data=[[[1.0]]])


# Teste para campos desconhecidos
def test_extra_fields_are_rejected():
    with pytest.raises(ValidationError):
        ChannelFileSchema(
            format_version=1, dims={"din": 2, "dout": 2}, repr="kraus", data=[_IDENTITY_2], comment="x"
        )


# Teste para semente fora do intervalo de 64 bits
def test_metadata_seed_range():
    with pytest.raises(ValidationError):
        ChannelFileSchema(
            format_version=1,
            dims={"din": 2, "dout": 2},
            repr="kraus",
            data=[_IDENTITY_2],
            metadata={"seed": 2 ** 64},
        )


# Teste para a Choi gravada nas duas imagens descrever o mesmo mapa
@pytest.mark.parametrize("picture", ["heisenberg", "schrodinger"])
def test_choi_pictures_describe_same_map(picture):
    e = random_channel(2, 3, 2, seed=401)

    schema = ChannelFileSchema.from_cp_map(e, name="canal", seed=401, picture=picture)
    parsed = ChannelFileSchema.model_validate(json.loads(schema.dump_line())).to_cp_map()

    assert schema.metadata.picture == picture
    assert (parsed.din, parsed.dout) == (2, 3)
    assert choi_distance(parsed, e) < 1e-12


# Teste para a Choi de Heisenberg ser a Choi do dual
def test_heisenberg_choi_is_dual_choi():
    e = random_channel(2, 3, 2, seed=402)

    schema = ChannelFileSchema.from_cp_map(e, picture="heisenberg")
    stored = np.array(schema.data)

    assert stored.shape == (6, 6, 2)
    assert_allclose(stored[..., 0] + 1j * stored[..., 1], dual(e).choi)


# Teste para arquivos de operação bipartida com Kraus minimal
def test_bipartite_kraus_file():
    m = random_semicausal(2, 2, 1, seed=403)

    schema = ChannelFileSchema.from_cp_map(m, representation="kraus")
    parsed = schema.to_bipartite_map()

    assert schema.dims.is_bipartite
    assert schema.dims.map_dims() == (4, 4)
    assert parsed.dims.legs == (2, 2)
    assert choi_distance(parsed.e, m.e) < 1e-10


# Teste para operação bipartida exigir dims {dA, dB}
def test_bipartite_requires_party_dims():
    schema = ChannelFileSchema(format_version=1, dims={"din": 2, "dout": 2}, repr="kraus", data=[_IDENTITY_2])

    with pytest.raises(InvalidChannelFileException):
        schema.to_bipartite_map()


# Teste para Choi não positiva no arquivo
def test_choi_not_cp():
    swap = [[[1.0, 0.0] if (i, j) in {(0, 0), (1, 2), (2, 1), (3, 3)} else [0.0, 0.0] for j in range(4)]
            for i in range(4)]
    schema = ChannelFileSchema(
        format_version=1, dims={"din": 2, "dout": 2}, repr="choi", data=swap,
        metadata={"picture": "schrodinger"},
    )

    with pytest.raises(NotCompletelyPositiveException):
        schema.to_cp_map()


# Teste para a saída determinística de uma linha
def test_dump_line_is_deterministic():
    e = random_channel(2, 2, 2, seed=404)

    first = ChannelFileSchema.from_cp_map(e, seed=404).dump_line()
    second = ChannelFileSchema.from_cp_map(random_channel(2, 2, 2, seed=404), seed=404).dump_line()

    assert first == second
    assert first.endswith("\n")
    assert first.count("\n") == 1
    assert '"name"' not in first
