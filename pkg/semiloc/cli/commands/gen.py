# semiloc/cli/commands/gen.py
"""
Comando gen: gera entradas do corpus como arquivos de canal.
"""

import logging
from pathlib import Path
from typing import Optional

import typer

from semiloc.cli.deps import write_channel_file
from semiloc.core.exceptions import InvalidParameterException
from semiloc.schemas.channel_schemas import ChannelFileSchema
from semiloc.services.corpus_service import named_example, random_channel, random_semicausal

# Configurar logger
logger = logging.getLogger(__name__)

KINDS = "named:<nome> | random_channel | random_semicausal"


def build_channel_file(
        kind: str,
        da: int = 2,
        db: int = 2,
        dc: int = 1,
        din: int = 2,
        dout: int = 2,
        rank: int = 1,
        seed: int = 0,
        selective: bool = False,
        picture: str = "heisenberg",
) -> ChannelFileSchema:
    """
    Monta o arquivo de canal de uma entrada do corpus.

    Exemplos nomeados gravam os operadores de Kraus que os definem; mapas
    aleatórios gravam a matriz de Choi na imagem pedida.

    Raises:
        InvalidParameterException: Tipo desconhecido ou parâmetros fora do intervalo
        UnknownExampleException: Nome de exemplo inexistente
    """
    if kind.startswith("named:"):
        example = named_example(kind.split(":", 1)[1])
        return ChannelFileSchema.from_kraus(example.kraus, example.map.dims, name=example.name)

    if kind == "random_channel":
        e = random_channel(din, dout, rank, seed, picture)
        return ChannelFileSchema.from_cp_map(e, name=kind, seed=seed, picture=picture)

    if kind == "random_semicausal":
        m = random_semicausal(da, db, dc, seed, selective)
        return ChannelFileSchema.from_cp_map(m, name=kind, seed=seed, picture=picture)

    raise InvalidParameterException(fields={"kind": f"deve ser um de {KINDS}"})


def gen(
        kind: str = typer.Argument(..., help=KINDS),
        da: int = typer.Option(2, "--da", help="dA (random_semicausal)"),
        db: int = typer.Option(2, "--db", help="dB (random_semicausal)"),
        dc: int = typer.Option(1, "--dc", help="dC do gerador (random_semicausal)"),
        din: int = typer.Option(2, "--din", help="din (random_channel)"),
        dout: int = typer.Option(2, "--dout", help="dout (random_channel)"),
        rank: int = typer.Option(1, "--rank", help="Posto de Kraus (random_channel)"),
        seed: int = typer.Option(0, "--seed", help="Semente de 64 bits"),
        selective: bool = typer.Option(False, "--selective", help="G estritamente subunital"),
        picture: str = typer.Option("heisenberg", "--picture", help="heisenberg | schrodinger"),
        out: Optional[Path] = typer.Option(None, "--out", help="Arquivo de saída; padrão stdout"),
):
    """
    Gera um arquivo de canal determinístico na semente.
    """
    schema = build_channel_file(kind, da, db, dc, din, dout, rank, seed, selective, picture)
    if out is None:
        typer.echo(schema.dump_line(), nl=False)
    else:
        write_channel_file(schema, out)
