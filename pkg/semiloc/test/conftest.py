import shutil
from pathlib import Path

import numpy as np
import pytest

from semiloc.services.causality_service import CausalityService
from semiloc.services.corpus_service import NAMED_EXAMPLES, named_example, random_semicausal
from semiloc.services.factorize_service import FactorizationService

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "data" / "golden"


@pytest.fixture(scope='session')
def golden_dir():
    """Diretório dos arquivos de referência distribuídos com o pacote."""
    return GOLDEN_DIR


@pytest.fixture()
def corpus_dir(tmp_path, golden_dir):
    """Cópia do corpus de referência em um diretório temporário."""
    target = tmp_path / "corpus"
    shutil.copytree(golden_dir, target)
    yield target


@pytest.fixture(scope='session')
def named_examples():
    """Todos os exemplos nomeados, indexados pelo nome."""
    return {name: named_example(name) for name in NAMED_EXAMPLES}


@pytest.fixture()
def identity_pair(named_examples):
    return named_examples["identity"].map


@pytest.fixture()
def swap_pair(named_examples):
    return named_examples["swap"].map


@pytest.fixture()
def measure_and_correct(named_examples):
    return named_examples["measure_and_correct"].map


@pytest.fixture()
def causality_service():
    return CausalityService(1e-8)


@pytest.fixture()
def factorization_service():
    return FactorizationService(1e-8)


@pytest.fixture()
def semicausal_map():
    """Mapa semicausal aleatório com dA = 3, dB = 2 e C de dimensão 2."""
    return random_semicausal(3, 2, 2, seed=7)


@pytest.fixture()
def rng():
    """Gerador de teste independente do gerador do corpus."""
    return np.random.default_rng(20240611)


def random_unitary(rng, d):
    """Unitário aleatório pela QR de uma matriz gaussiana complexa."""
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))
