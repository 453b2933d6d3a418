# semiloc/services/causality_service.py
"""
Serviço de causalidade.

Testa as propriedades do diagrama de implicações para uma operação bipartida:
semicausalidade nos dois sentidos, causalidade e localizabilidade em forma
produto, além de extrair o mapa marginal T de Alice.
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from semiloc.core.config import settings
from semiloc.models.causality_model import BipartiteMap, CausalityVerdict, Classification
from semiloc.models.qmap_model import CpMap
from semiloc.services.base_service import BaseService
from semiloc.services.qmap_service import (
    apply_heisenberg,
    choi_from_heisenberg_action,
    heisenberg_unit,
    identity_map,
    is_cp,
    is_unital,
    matrix_unit_basis,
    partial_trace,
    swap_parties,
)
from semiloc.utils.tensor_legs import permute_operator_legs, realign

# Configurar logger
logger = logging.getLogger(__name__)


def _bob_reference_state(m: BipartiteMap) -> np.ndarray:
    """
    Fator R de Bob no teste condicional E(a ⊗ 1) = T(a) ⊗ R.

    R = dB · Tr_A E(1) / tr E(1), normalizado para tr R = dB; vale 1_B quando E
    é unital e também para o mapa nulo.
    """
    dA, dB = m.dims.legs
    unit = heisenberg_unit(m.e)
    total = float(np.real(np.trace(unit)))
    if total <= settings.RANK_TOL:
        return np.eye(dB, dtype=complex)
    return dB * partial_trace(unit, [dA, dB], 0) / total


def marginal_map_A(
        m: BipartiteMap,
        conditional: bool = False,
        observables: Optional[Sequence[np.ndarray]] = None,
) -> Tuple[CpMap, float]:
    """
    Mapa marginal de Alice e o resíduo de sinalização de Bob para Alice.

    T(a) := Tr_B[E(a ⊗ 1_B)] / dB, montado como matriz de Choi a partir das
    unidades matriciais de B(H_A). O resíduo é max_a ‖E(a ⊗ 1_B) − T(a) ⊗ R‖_F
    sobre os observáveis a; resíduo nulo equivale a E(a ⊗ 1) = T(a) ⊗ 1.

    Args:
        m: Operação bipartida
        conditional: Usa R = dB·Tr_A E(1)/tr E(1) no lugar de 1_B
        observables: Operadores de B(H_A) usados no resíduo; padrão as unidades matriciais

    Returns:
        Tupla (T, resíduo)
    """
    dA, dB = m.dims.legs
    identity_b = np.eye(dB, dtype=complex)
    reference = _bob_reference_state(m) if conditional else identity_b
    scale = float(np.real(np.trace(reference)))

    def restrict(a: np.ndarray) -> np.ndarray:
        return apply_heisenberg(m.e, np.kron(a, identity_b))

    T = choi_from_heisenberg_action(lambda a: partial_trace(restrict(a), [dA, dB], 1) / scale, dA, dA)

    observables = matrix_unit_basis(dA) if observables is None else observables
    residual = max(
        float(np.linalg.norm(restrict(a) - np.kron(apply_heisenberg(T, a), reference)))
        for a in observables
    )
    return T, residual


class CausalityService(BaseService):
    """
    Serviço para os testes de causalidade do diagrama de implicações.

    O sentido B → A usa sempre a equação literal E(a ⊗ 1) = T(a) ⊗ 1. O sentido
    A → B roda o teste condicional sobre o mapa conjugado pela troca, que coincide
    com o literal para operações unitais e mantém "localizável ⟹ causal" para
    fatores seletivos.
    """

    def is_semicausal(self, m: BipartiteMap) -> Tuple[bool, CpMap, float]:
        """
        Verifica se Bob não sinaliza para Alice.

        Args:
            m: Operação bipartida

        Returns:
            Tupla (semicausal, T, resíduo)

        Raises:
            NotCompletelyPositiveException: Se o mapa não for CP
        """
        self._require_operation(m)
        T, residual = marginal_map_A(m)
        semicausal = residual < self.tol
        if semicausal and not is_cp(T):
            logger.error("Mapa marginal de um mapa semicausal não é CP")
        logger.info(f"Semicausalidade B→A: resíduo {residual:.3e} (tol {self.tol:.1e})")
        return semicausal, T, residual

    def mirror_semicausal(self, m: BipartiteMap) -> Tuple[bool, CpMap, float]:
        """Verifica se Alice não sinaliza para Bob (teste condicional sobre o mapa trocado)."""
        self._require_operation(m)
        Tprime, residual = marginal_map_A(swap_parties(m), conditional=True)
        logger.info(f"Semicausalidade A→B: resíduo {residual:.3e} (tol {self.tol:.1e})")
        return residual < self.tol, Tprime, residual

    def is_product_localizable(self, m: BipartiteMap) -> Tuple[bool, Optional[Tuple[CpMap, CpMap]]]:
        """
        Testa a forma produto E = G ⊗ F com F canal.

        A Choi é reordenada para (A_in, A_out, B_in, B_out) e realinhada na
        bipartição A|B; posto de Schmidt de operador 1 equivale à forma produto.
        O termo de posto um é dividido de forma que F seja unital.

        Args:
            m: Operação bipartida

        Returns:
            Tupla (localizável, (G, F) ou None)
        """
        self._require_operation(m)
        dA, dB = m.dims.legs
        choi = permute_operator_legs(m.e.choi, [dA, dB, dA, dB], [0, 2, 1, 3])
        realigned = realign(choi, [dA, dA], [dB, dB])
        left, singular_values, right = np.linalg.svd(realigned)

        if singular_values[0] == 0.0:
            zero = CpMap(din=dA, dout=dA, choi=np.zeros((dA * dA, dA * dA)))
            return True, (zero, identity_map(dB))

        schmidt_rank = int(np.sum(singular_values > self.tol * singular_values[0]))
        logger.info(f"Posto de Schmidt de operador: {schmidt_rank}")
        if schmidt_rank != 1:
            return False, None

        weight = np.sqrt(singular_values[0])
        g = weight * left[:, 0].reshape(dA * dA, dA * dA)
        f = weight * right[0, :].reshape(dB * dB, dB * dB)
        # Fase global: tr g real positivo
        phase = np.trace(g) / abs(np.trace(g))
        g, f = g / phase, f * phase

        F_raw = CpMap(din=dB, dout=dB, choi=f)
        unit = heisenberg_unit(F_raw)
        scale = float(np.real(np.trace(unit))) / dB
        if scale <= 0:
            return False, None
        G = CpMap(din=dA, dout=dA, choi=g * scale)
        F = CpMap(din=dB, dout=dB, choi=f / scale)
        if not is_unital(F, self.tol):
            logger.info("Posto um, mas F(1) não é proporcional à identidade")
            return False, None
        if not (is_cp(G, self.tol) and is_cp(F, self.tol)):
            return False, None
        return True, (G, F)

    def is_causal(self, m: BipartiteMap) -> CausalityVerdict:
        """
        Veredito completo: semicausal nos dois sentidos, causal e localizável.

        Args:
            m: Operação bipartida

        Returns:
            CausalityVerdict com T e T' preenchidos
        """
        blocked_b_to_a, T, residual_a = self.is_semicausal(m)
        blocked_a_to_b, Tprime, residual_b = self.mirror_semicausal(m)
        causal = blocked_b_to_a and blocked_a_to_b
        localizable, _ = self.is_product_localizable(m)
        if localizable and not causal:
            logger.warning("Forma produto detectada em mapa não causal; localizabilidade descartada")
            localizable = False

        return CausalityVerdict(
            semicausal_BtoA_blocked=blocked_b_to_a,
            semicausal_AtoB_blocked=blocked_a_to_b,
            causal=causal,
            product_localizable=localizable,
            residual_A=residual_a,
            residual_B=residual_b,
            T=T,
            Tprime=Tprime,
        )

    def classify(self, m: BipartiteMap) -> Classification:
        """
        Veredito do diagrama com a semilocalizabilidade construtiva.

        lattice_consistent exige as implicações localizável ⟹ causal ⟹
        semicausal nos dois sentidos e a equivalência semicausal ⟺ semilocalizável.
        """
        # Importação local: o serviço de fatoração depende deste módulo
        from semiloc.services.factorize_service import FactorizationService

        verdict = self.is_causal(m)
        semilocalizable = FactorizationService(self.tol).is_semilocalizable(m)
        consistent = (verdict.skeleton().respects_lattice()
                      and semilocalizable == verdict.semicausal_BtoA_blocked)
        if not consistent:
            logger.warning("Veredito viola o diagrama de implicações")
        return Classification(verdict=verdict, semilocalizable=semilocalizable, lattice_consistent=consistent)
