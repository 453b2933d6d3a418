import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st
from numpy.testing import assert_allclose

from semiloc.core.exceptions import DimensionMismatchException, InvalidParameterException, NotSemicausalException
from semiloc.models.causality_model import BipartiteMap
from semiloc.models.qmap_model import BipartiteDims, CpMap, KrausSet
from semiloc.services.causality_service import CausalityService, marginal_map_A
from semiloc.services.corpus_service import random_channel, random_semicausal
from semiloc.services.dilation_service import minimal_stinespring
from semiloc.services.factorize_service import FactorizationService, decompose_both_ways, reconstruct
from semiloc.services.qmap_service import (
    choi_distance,
    choi_from_kraus,
    heisenberg_unit,
    identity_map,
    is_cp,
    numerical_rank,
    tensor,
)


# Teste para a ida e volta da fatoração em mapas semicausais aleatórios
@hyp_settings(max_examples=200, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2 ** 64 - 1),
    dA=st.sampled_from([2, 3]),
    dB=st.sampled_from([2, 3]),
    dC=st.sampled_from([1, 2]),
)
def test_semilocalize_round_trip(seed, dA, dB, dC):
    m = random_semicausal(dA, dB, dC, seed)
    service = FactorizationService(1e-8)

    d = service.semilocalize(m)

    assert choi_distance(m.e, reconstruct(d.G, d.F, m.dims, d.dC).e) < 1e-8
    assert d.reconstruction_residual < 1e-8
    assert d.U.defect() < 1e-10
    assert d.F_unitality < 1e-10
    assert d.dC == dC
    assert (d.F.din, d.F.dout) == (d.dC * dB, dB)
    assert (d.G.din, d.G.dout) == (dA, dA * d.dC)


# Teste para o sentido trivial: toda recomposição é semicausal
@hyp_settings(max_examples=200, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2 ** 32),
    dA=st.sampled_from([1, 2, 3]),
    dB=st.sampled_from([1, 2, 3]),
    dC=st.sampled_from([1, 2, 3]),
)
def test_reconstruct_is_always_semicausal(seed, dA, dB, dC):
    G = random_channel(dA, dA * dC, 1, seed)
    F = random_channel(dC * dB, dB, dC, seed + 1)

    m = reconstruct(G, F, BipartiteDims(dA, dB))

    _, residual = marginal_map_A(m)
    assert residual < 1e-10


# Teste para a troca ser rejeitada pela fatoração
def test_swap_is_not_semilocalizable(swap_pair, factorization_service):
    with pytest.raises(NotSemicausalException) as exc_info:
        factorization_service.semilocalize(swap_pair)

    assert abs(exc_info.value.residual - np.sqrt(2)) < 1e-10
    assert exc_info.value.exit_code == 1
    assert not factorization_service.is_semilocalizable(swap_pair)


# Teste para os certificados de dimensão minimal da identidade
def test_identity_minimal_dimensions(identity_pair, factorization_service):
    d = factorization_service.semilocalize(identity_pair)

    assert d.dC == 1
    assert d.dD == 1
    assert d.U.is_unitary


# Teste para medir-e-corrigir usar um sistema C de dimensão 2
def test_measure_and_correct_dimensions(measure_and_correct, factorization_service):
    d = factorization_service.semilocalize(measure_and_correct)
    T, _ = marginal_map_A(measure_and_correct)

    assert d.dC == 2
    assert d.dC == numerical_rank(T.choi) <= 4
    assert factorization_service.verify_decomposition(measure_and_correct, d).passed


# Teste para dC ser sempre o posto da Choi do mapa marginal
def test_dc_matches_marginal_rank(factorization_service):
    for seed in range(10):
        m = random_semicausal(3, 2, 2, seed)
        T, _ = marginal_map_A(m)

        d = factorization_service.semilocalize(m)

        assert d.dC == numerical_rank(T.choi, 1e-10) <= 9


# Teste para operações seletivas: F unital e G estritamente subunital
@hyp_settings(max_examples=50, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2 ** 32),
    dA=st.sampled_from([2, 3]),
    dB=st.sampled_from([2, 3]),
    dC=st.sampled_from([1, 2]),
)
def test_selective_operations(seed, dA, dB, dC):
    m = random_semicausal(dA, dB, dC, seed, selective=True)
    assert np.linalg.norm(heisenberg_unit(m.e), 2) < 1

    d = FactorizationService(1e-8).semilocalize(m)

    assert d.reconstruction_residual < 1e-8
    assert d.F_unitality < 1e-10
    assert np.linalg.eigvalsh(heisenberg_unit(d.G))[-1] < 1
    assert is_cp(d.G)


# Teste para a decomposição no sentido B → A
def test_b_to_a_decomposition(measure_and_correct, factorization_service):
    with pytest.raises(NotSemicausalException):
        factorization_service.semilocalize(measure_and_correct, "B_to_A")

    product = BipartiteMap(
        dims=BipartiteDims(2, 3),
        e=tensor(random_channel(2, 2, 2, seed=301), random_channel(3, 3, 2, seed=302)),
    )
    forward, backward = decompose_both_ways(product)

    assert forward.direction == "A_to_B"
    assert backward.direction == "B_to_A"
    assert backward.reconstruction_residual < 1e-8
    assert (backward.G.din, backward.G.dout) == (3, 3 * backward.dC)
    assert factorization_service.verify_decomposition(product, backward).passed


# Teste para sentido inválido
def test_invalid_direction(identity_pair, factorization_service):
    with pytest.raises(InvalidParameterException):
        factorization_service.semilocalize(identity_pair, "sideways")


# Teste para o mapa nulo
def test_zero_map_decomposition(factorization_service):
    m = BipartiteMap(dims=BipartiteDims(2, 3), e=CpMap(din=6, dout=6, choi=np.zeros((36, 36))))

    d = factorization_service.semilocalize(m)

    assert (d.dC, d.dD) == (1, 1)
    assert d.reconstruction_residual == 0.0
    assert factorization_service.verify_decomposition(m, d).passed


# Teste para a verificação de fatores trocados
def test_verify_factors_rejects_wrong_g(measure_and_correct, factorization_service):
    d = factorization_service.semilocalize(measure_and_correct)
    wrong_G = random_channel(2, 4, 1, seed=311)

    report = factorization_service.verify_factors(measure_and_correct, wrong_G, d.F)

    assert report.choi_distance > 1e-3
    assert not report.passed


# Teste para fatores de dimensões incompatíveis
def test_reconstruct_dimension_mismatch():
    G = identity_map(2)
    F = random_channel(2, 3, 2, seed=321)

    with pytest.raises(DimensionMismatchException):
        reconstruct(G, F, BipartiteDims(2, 2))


# Teste para a verificação com tolerância apertada
def test_verify_with_tight_tolerance():
    m = random_semicausal(3, 3, 2, seed=331)
    d = FactorizationService(1e-8).semilocalize(m)

    report = FactorizationService(1e-16).verify_decomposition(m, d)

    assert report.choi_distance < 1e-8
    assert not report.passed


# Teste para F ser unital em toda decomposição
def test_f_is_channel(semicausal_map, factorization_service):
    d = factorization_service.semilocalize(semicausal_map)

    assert_allclose(heisenberg_unit(d.F), np.eye(d.F.din), atol=1e-10)
    assert is_cp(d.F)


def _entangling_rotation(angle: float) -> BipartiteMap:
    # u = cos θ·1 − i sen θ·X⊗X: sinaliza nos dois sentidos com resíduo 2·sen θ·cos θ
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    u = np.cos(angle) * np.eye(4) - 1j * np.sin(angle) * np.kron(x, x)
    return BipartiteMap(dims=BipartiteDims(2, 2), e=choi_from_kraus(KrausSet(din=4, dout=4, operators=(u,))))


# Teste para a tolerância da flag valer em todas as etapas da fatoração
def test_semilocalize_near_semicausal_map_with_loose_tol():
    m = _entangling_rotation(3e-6)
    service = FactorizationService(1e-4)

    semicausal, _, residual = CausalityService(1e-4).is_semicausal(m)
    d = service.semilocalize(m)

    assert semicausal
    assert 1e-6 < residual < 1e-4
    assert (d.dC, d.dD) == (1, 1)
    assert d.reconstruction_residual < 1e-4
    assert service.verify_decomposition(m, d).passed
    assert not FactorizationService(1e-8).is_semilocalizable(m)


# Teste para o diagrama continuar consistente com tolerância frouxa
def test_classify_near_semicausal_map_with_loose_tol():
    classification = CausalityService(1e-4).classify(_entangling_rotation(3e-6))

    assert classification.verdict.semicausal_BtoA_blocked
    assert classification.semilocalizable
    assert classification.lattice_consistent


# Teste para a cadeia de isometrias V = (1_A ⊗ U)(W ⊗ 1_B)
@hyp_settings(max_examples=50, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2 ** 32),
    dA=st.sampled_from([2, 3]),
    dB=st.sampled_from([2, 3]),
    dC=st.sampled_from([1, 2]),
)
def test_isometry_chain(seed, dA, dB, dC):
    m = random_semicausal(dA, dB, dC, seed)

    d = FactorizationService(1e-8).semilocalize(m)
    V = minimal_stinespring(m.e).V

    chain = np.kron(np.eye(dA), d.U.U) @ np.kron(d.W, np.eye(dB))
    assert chain.shape == V.shape
    assert np.linalg.norm(chain - V) < 1e-9
