# semiloc/services/corpus_service.py
"""
Corpus de referência: exemplos nomeados e geradores aleatórios com semente.

Receita de sorteio (fixa, ver docs/b_convencoes.txt):
    - gerador numpy.random.PCG64 semeado com o inteiro de 64 bits;
    - cada entrada gaussiana complexa consome um par (u1, u2) de uniformes em
      [0, 1), z = sqrt(-2 ln(1 - u1)) · exp(2πi u2) / sqrt(2) (Box-Muller);
    - matrizes são preenchidas em ordem row-major;
    - isometrias saem da fatoração QR com fase positiva na diagonal de R.
"""

import logging
from typing import Callable, Dict, List

import numpy as np

from semiloc.core.exceptions import InvalidParameterException, UnknownExampleException
from semiloc.models.causality_model import BipartiteMap, VerdictSkeleton
from semiloc.models.corpus_model import NamedExample
from semiloc.models.dilation_model import Dilation
from semiloc.models.qmap_model import BipartiteDims, CpMap, KrausSet
from semiloc.services.dilation_service import map_from_dilation
from semiloc.services.factorize_service import reconstruct
from semiloc.services.qmap_service import choi_from_kraus, dual
from semiloc.utils.tensor_legs import swap_operator

# Configurar logger
logger = logging.getLogger(__name__)

MAX_SEED = 2 ** 64 - 1
PICTURES = ("heisenberg", "schrodinger")


def make_rng(seed: int) -> np.random.Generator:
    """Gerador PCG64 para uma semente de 64 bits sem sinal."""
    if not 0 <= int(seed) <= MAX_SEED:
        raise InvalidParameterException(fields={"seed": f"deve estar em [0, {MAX_SEED}]"})
    return np.random.Generator(np.random.PCG64(int(seed)))


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """
    Amostras gaussianas complexas com E|z|² = 1 pela transformada de Box-Muller.

    Args:
        rng: Gerador
        shape: Forma da matriz (preenchida em ordem row-major)

    Returns:
        Array complexo
    """
    count = int(np.prod(shape))
    uniforms = rng.random((count, 2))
    radius = np.sqrt(-2.0 * np.log1p(-uniforms[:, 0]))
    angle = 2.0 * np.pi * uniforms[:, 1]
    return (radius * np.exp(1j * angle) / np.sqrt(2.0)).reshape(shape)


def random_isometry(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """Isometria rows x cols pela QR de uma matriz gaussiana, com diagonal de R positiva."""
    if rows < cols:
        raise InvalidParameterException(fields={"isometria": f"exige rows >= cols (recebido {rows} < {cols})"})
    q, r = np.linalg.qr(complex_gaussian(rng, (rows, cols)))
    diagonal = np.diag(r)
    phases = np.where(np.abs(diagonal) > 0, diagonal / np.abs(diagonal), 1.0)
    return q * phases


def random_channel(din: int, dout: int, kraus_rank: int, seed: int, picture: str = "heisenberg") -> CpMap:
    """
    Canal aleatório com posto de Kraus fixo.

    Em "heisenberg" o mapa é unital (E(1) = 1); em "schrodinger" devolve o dual
    de um canal unital com dimensões trocadas, cuja ação de Schrödinger é unital.

    Args:
        din: Dimensão de H_in
        dout: Dimensão de H_out
        kraus_rank: Número de operadores de Kraus, 1 <= kraus_rank <= din·dout
        seed: Semente de 64 bits
        picture: "heisenberg" ou "schrodinger"

    Returns:
        CpMap determinístico na semente

    Raises:
        InvalidParameterException: Parâmetros fora do intervalo
    """
    errors = {}
    if din < 1 or dout < 1:
        errors["dims"] = f"devem ser >= 1 (recebido {din}, {dout})"
    elif not 1 <= kraus_rank <= din * dout:
        errors["kraus_rank"] = f"deve estar em [1, {din * dout}] (recebido {kraus_rank})"
    if picture not in PICTURES:
        errors["picture"] = f"deve ser um de {', '.join(PICTURES)}"
    if errors:
        raise InvalidParameterException(fields=errors)

    if picture == "schrodinger":
        return dual(random_channel(dout, din, kraus_rank, seed))

    if dout * kraus_rank < din:
        raise InvalidParameterException(
            fields={"kraus_rank": f"dout·kraus_rank >= din é necessário para um canal unital ({dout}·{kraus_rank} < {din})"}
        )
    rng = make_rng(seed)
    V = random_isometry(rng, dout * kraus_rank, din)
    channel = map_from_dilation(Dilation(din=din, dout=dout, k=kraus_rank, V=V))
    logger.info(f"Canal aleatório: din={din}, dout={dout}, posto={kraus_rank}, semente={seed}")
    return channel


def random_semicausal(dA: int, dB: int, dC: int, seed: int, selective: bool = False) -> BipartiteMap:
    """
    Operação semicausal aleatória E = (G ⊗ id_B) ∘ (id_A ⊗ F).

    Ordem de sorteio: W (isometria (dA·dC) x dA), depois a isometria de F
    ((dB·dC·dB) x (dC·dB)), depois, se selective, os fatores de escala
    s = 0.5 + 0.45·u das colunas de W.

    Args:
        dA, dB: Dimensões de Alice e Bob
        dC: Dimensão do sistema transmitido
        seed: Semente de 64 bits
        selective: Torna G estritamente subunital (‖W‖ <= 0.95)

    Returns:
        Operação bipartida semicausal por construção
    """
    errors = {name: "deve ser >= 1" for name, value in (("dA", dA), ("dB", dB), ("dC", dC)) if value < 1}
    if errors:
        raise InvalidParameterException(fields=errors)

    rng = make_rng(seed)
    W = random_isometry(rng, dA * dC, dA)
    U = random_isometry(rng, dB * dC * dB, dC * dB)
    if selective:
        W = W * (0.5 + 0.45 * rng.random(dA))

    G = choi_from_kraus(KrausSet(din=dA, dout=dA * dC, operators=(W,)))
    F = map_from_dilation(Dilation(din=dC * dB, dout=dB, k=dC * dB, V=U))
    m = reconstruct(G, F, BipartiteDims(dA, dB), dC)
    logger.info(f"Mapa semicausal aleatório: dA={dA}, dB={dB}, dC={dC}, semente={seed}, seletivo={selective}")
    return m


_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_PROJECTORS = (np.diag([1.0, 0.0]).astype(complex), np.diag([0.0, 1.0]).astype(complex))


def _qubit_pair(name: str, operators: List[np.ndarray], expected: VerdictSkeleton) -> NamedExample:
    kraus = KrausSet(din=4, dout=4, operators=tuple(operators))
    m = BipartiteMap(dims=BipartiteDims(2, 2), e=choi_from_kraus(kraus))
    return NamedExample(name=name, map=m, expected=expected, kraus=kraus)


def _verdict(b_to_a: bool, a_to_b: bool, localizable: bool) -> VerdictSkeleton:
    return VerdictSkeleton(
        semicausal_BtoA_blocked=b_to_a,
        semicausal_AtoB_blocked=a_to_b,
        causal=b_to_a and a_to_b,
        product_localizable=localizable,
    )


def _identity() -> NamedExample:
    return _qubit_pair("identity", [np.eye(4)], _verdict(True, True, True))


def _swap() -> NamedExample:
    return _qubit_pair("swap", [swap_operator(2, 2)], _verdict(False, False, False))


def _measure_and_correct() -> NamedExample:
    # Alice mede na base computacional; Bob aplica X no resultado 1
    operators = [np.kron(_PROJECTORS[0], _PAULI["I"]), np.kron(_PROJECTORS[1], _PAULI["X"])]
    return _qubit_pair("measure_and_correct", operators, _verdict(True, False, False))


def _product_depolarizing() -> NamedExample:
    # Desfase em A, despolarização total em B
    operators = [np.kron(projector, pauli) / 2 for projector in _PROJECTORS for pauli in _PAULI.values()]
    return _qubit_pair("product_depolarizing", operators, _verdict(True, True, True))


def _cz_unitary() -> NamedExample:
    cz = np.diag([1.0, 1.0, 1.0, -1.0]).astype(complex)
    return _qubit_pair("cz_unitary", [cz], _verdict(False, False, False))


def _selective_projective() -> NamedExample:
    operators = [np.kron(_PROJECTORS[0], _PAULI["I"])]
    return _qubit_pair("selective_projective", operators, _verdict(True, True, True))


NAMED_EXAMPLES: Dict[str, Callable[[], NamedExample]] = {
    "identity": _identity,
    "swap": _swap,
    "measure_and_correct": _measure_and_correct,
    "product_depolarizing": _product_depolarizing,
    "cz_unitary": _cz_unitary,
    "selective_projective": _selective_projective,
}


def named_example(name: str) -> NamedExample:
    """
    Exemplo de referência pelo nome.

    Raises:
        UnknownExampleException: Se o nome não existir no corpus
    """
    builder = NAMED_EXAMPLES.get(name)
    if builder is None:
        raise UnknownExampleException(name, available=list(NAMED_EXAMPLES))
    return builder()
