# semiloc/services/factorize_service.py
"""
Serviço de fatoração semilocal.

Constrói, para uma operação semicausal E, os fatores da forma
E = (G ⊗ id_B) ∘ (id_A ⊗ F): Alice aplica G depois de receber o sistema C que
Bob produz com o canal F. A construção segue o argumento de unicidade das
dilatações de Stinespring:

    1. T := mapa marginal de Alice, W := dilatação minimal de T;
    2. V := dilatação minimal de E, pernas de saída (A, B, D);
    3. W ⊗ 1_B é dilatação minimal de a ↦ E(a ⊗ 1) com pernas (A, C, B);
    4. a isometria de ligação U: H_C ⊗ H_B → H_B ⊗ H_D satisfaz
       V = (1_A ⊗ U)(W ⊗ 1_B);
    5. F(b) := U*(b ⊗ 1_D)U e G(x) := W* x W.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from semiloc.core.config import settings
from semiloc.core.exceptions import (
    DimensionMismatchException,
    InvalidParameterException,
    NotMinimalException,
    NotSemicausalException,
    SemilocException,
    VerificationFailedException,
)
from semiloc.models.causality_model import BipartiteMap
from semiloc.models.decomposition_model import Decomposition, VerificationReport
from semiloc.models.dilation_model import Dilation, Isometry
from semiloc.models.qmap_model import BipartiteDims, CpMap, KrausSet
from semiloc.services.base_service import BaseService
from semiloc.services.causality_service import marginal_map_A
from semiloc.services.dilation_service import (
    connecting_isometry,
    is_minimal,
    map_from_dilation,
    minimal_stinespring,
)
from semiloc.services.qmap_service import (
    choi_distance,
    choi_from_kraus,
    compose,
    heisenberg_unit,
    identity_map,
    min_choi_eigenvalue,
    numerical_rank,
    swap_parties,
    tensor,
)

# Configurar logger
logger = logging.getLogger(__name__)

DIRECTIONS = ("A_to_B", "B_to_A")


def reconstruct(G: CpMap, F: CpMap, dims: BipartiteDims, dC: Optional[int] = None) -> BipartiteMap:
    """
    Recompõe E = (G ⊗ id_B) ∘ (id_A ⊗ F).

    Na imagem de Heisenberg a ⊗ b ↦ (G ⊗ id_B)(a ⊗ F(b)), com as pernas
    intermediárias na ordem (A, C, B).

    Args:
        G: Mapa B(H_A ⊗ H_C) → B(H_A), din = dA, dout = dA·dC
        F: Mapa B(H_B) → B(H_C ⊗ H_B), din = dC·dB, dout = dB
        dims: Dimensões (dA, dB)
        dC: Dimensão de H_C; inferida de G quando omitida

    Returns:
        Operação bipartida recomposta

    Raises:
        DimensionMismatchException: Se os fatores não se encaixarem
    """
    dA, dB = dims.legs
    if dC is None:
        if G.dout % dA:
            raise DimensionMismatchException(detail="Saída de G não contém H_A como fator",
                                             expected=f"múltiplo de {dA}", got=G.dout)
        dC = G.dout // dA
    if (G.din, G.dout) != (dA, dA * dC):
        raise DimensionMismatchException(detail="Fator G com dimensões incompatíveis",
                                         expected=(dA, dA * dC), got=(G.din, G.dout))
    if (F.din, F.dout) != (dC * dB, dB):
        raise DimensionMismatchException(detail="Fator F com dimensões incompatíveis",
                                         expected=(dC * dB, dB), got=(F.din, F.dout))

    bob_side = tensor(identity_map(dA), F)
    alice_side = tensor(G, identity_map(dB))
    return BipartiteMap(dims=dims, e=compose(bob_side, alice_side))


def _recompose(G: CpMap, F: CpMap, dims: BipartiteDims, direction: str) -> BipartiteMap:
    if direction == "B_to_A":
        return swap_parties(reconstruct(G, F, dims.swapped()))
    return reconstruct(G, F, dims)


class FactorizationService(BaseService):
    """
    Serviço para a decomposição semilocal e sua verificação numérica.
    """

    def semilocalize(self, m: BipartiteMap, direction: str = "A_to_B") -> Decomposition:
        """
        Decompõe uma operação semicausal na forma semilocal.

        Com direction="B_to_A" os papéis são trocados: o mapa é conjugado pela
        troca, fatorado, e os fatores descrevem comunicação de Alice para Bob
        (G age do lado de Bob, F do lado de Alice).

        Args:
            m: Operação bipartida
            direction: "A_to_B" (C vai de Alice para Bob) ou "B_to_A"

        Returns:
            Decomposition com W, U, G, F e os resíduos

        Raises:
            NotSemicausalException: Se o resíduo de semicausalidade for >= tol
            IntertwiningException: Se a extração da isometria falhar
        """
        if direction not in DIRECTIONS:
            raise InvalidParameterException(fields={"direction": f"deve ser um de {', '.join(DIRECTIONS)}"})
        self._require_operation(m)

        target = swap_parties(m) if direction == "B_to_A" else m
        decomposition = self._factorize(target, direction)

        # Resíduo sempre medido contra o mapa original
        residual = decomposition.reconstruction_residual
        if direction == "B_to_A":
            residual = choi_distance(m.e, _recompose(decomposition.G, decomposition.F, m.dims, direction).e)
        if residual >= 10 * self.tol:
            logger.error(f"Recomposição difere do mapa original: {residual:.3e}")
            raise VerificationFailedException(detail=f"Recomposição difere do mapa (distância {residual:.3e})")

        logger.info(
            f"Decomposição {direction}: dC={decomposition.dC}, dD={decomposition.dD}, "
            f"resíduo {residual:.3e}, unitalidade de F {decomposition.F_unitality:.3e}"
        )
        return Decomposition(
            dC=decomposition.dC,
            dD=decomposition.dD,
            W=decomposition.W,
            U=decomposition.U,
            G=decomposition.G,
            F=decomposition.F,
            reconstruction_residual=residual,
            F_unitality=decomposition.F_unitality,
            direction=direction,
        )

    def _factorize(self, m: BipartiteMap, direction: str) -> Decomposition:
        dA, dB = m.dims.legs

        T, residual = marginal_map_A(m)
        if residual >= self.tol:
            logger.warning(f"Fatoração recusada: mapa não é semicausal (resíduo {residual:.3e})")
            raise NotSemicausalException(residual=residual)
        if not np.any(m.e.choi):
            return self._zero_decomposition(m, direction)

        w_dilation = minimal_stinespring(T, self._rank_cut(T))
        W, dC = w_dilation.V, w_dilation.k
        v_dilation = minimal_stinespring(m.e, self._rank_cut(m.e))
        dD = v_dilation.k

        # W ⊗ 1_B: H_A ⊗ H_B → H_A ⊗ H_C ⊗ H_B, dilatação de a ↦ E(a ⊗ 1) com K = C ⊗ B
        alice_candidate = Dilation(din=dA * dB, dout=dA, k=dC * dB, V=np.kron(W, np.eye(dB)))
        if not is_minimal(alice_candidate):
            logger.error(f"W ⊗ 1_B não é minimal (dC={dC}, dB={dB})")
            raise NotMinimalException(detail="Dilatação W ⊗ 1_B não é minimal")
        alice_side = Dilation(din=dA * dB, dout=dA, k=dC * dB, V=alice_candidate.V, minimal=True)
        # V com pernas (A, B, D) visto como dilatação de a ↦ E(a ⊗ 1) com K = B ⊗ D
        full_side = Dilation(din=dA * dB, dout=dA, k=dB * dD, V=v_dilation.V)

        # Mapas de W ⊗ 1 e V diferem pelo resíduo de semicausalidade (< tol) em cada unidade matricial
        same_map_tol = max(settings.SAME_MAP_TOL * alice_side.din * alice_side.dout, self.tol * dA)
        U = connecting_isometry(alice_side, full_side, self.tol, same_map_tol)

        F = map_from_dilation(Dilation(din=dC * dB, dout=dB, k=dD, V=U.U))
        G = choi_from_kraus(KrausSet(din=dA, dout=dA * dC, operators=(W,)))
        unitality = float(np.linalg.norm(heisenberg_unit(F) - np.eye(dC * dB)))

        return Decomposition(
            dC=dC,
            dD=dD,
            W=W,
            U=U,
            G=G,
            F=F,
            reconstruction_residual=choi_distance(m.e, reconstruct(G, F, m.dims, dC).e),
            F_unitality=unitality,
            direction=direction,
        )

    def _rank_cut(self, e: CpMap) -> float:
        """
        Corte relativo de posto da fatoração.

        Autovalores da Choi abaixo de tol/10 (absoluto) ou de RANK_TOL vezes o
        maior são descartados; a recomposição continua certificada na tolerância.
        """
        top = float(np.linalg.eigvalsh(e.choi)[-1])
        if top <= 0:
            return settings.RANK_TOL
        return max(settings.RANK_TOL, 0.1 * self.tol / top)

    @staticmethod
    def _zero_decomposition(m: BipartiteMap, direction: str) -> Decomposition:
        # Mapa nulo: G = 0 com C trivial e F = id_B
        dA, dB = m.dims.legs
        W = np.zeros((dA, dA), dtype=complex)
        return Decomposition(
            dC=1,
            dD=1,
            W=W,
            U=Isometry(dsrc=dB, ddst=dB, U=np.eye(dB)),
            G=CpMap(din=dA, dout=dA, choi=np.zeros((dA * dA, dA * dA))),
            F=identity_map(dB),
            reconstruction_residual=0.0,
            F_unitality=0.0,
            direction=direction,
        )

    def verify_factors(
            self,
            m: BipartiteMap,
            G: CpMap,
            F: CpMap,
            direction: str = "A_to_B",
            dD: Optional[int] = None,
    ) -> VerificationReport:
        """
        Certifica numericamente um par de fatores (G, F) para a operação m.

        Args:
            m: Operação original
            G: Fator de Alice (ou de Bob em "B_to_A")
            F: Canal do lado que envia C
            direction: Sentido da comunicação
            dD: Dimensão do ambiente; padrão o posto da Choi de F

        Returns:
            VerificationReport com distância de Choi, defeito de unitalidade de F,
            margem CP de G, dC, dD e o veredito na tolerância do serviço

        Raises:
            DimensionMismatchException: Se os fatores não se encaixarem em m
        """
        if direction not in DIRECTIONS:
            raise InvalidParameterException(fields={"direction": f"deve ser um de {', '.join(DIRECTIONS)}"})
        receiver = m.dims.dA if direction == "A_to_B" else m.dims.dB
        recomposed = _recompose(G, F, m.dims, direction)
        report = VerificationReport(
            choi_distance=choi_distance(m.e, recomposed.e),
            f_unitality_defect=float(np.linalg.norm(heisenberg_unit(F) - np.eye(F.din))),
            g_cp_margin=min_choi_eigenvalue(G),
            dC=G.dout // receiver,
            dD=numerical_rank(F.choi) if dD is None else dD,
            tol=self.tol,
        )
        logger.info(f"Verificação: distância {report.choi_distance:.3e}, aprovado={report.passed}")
        return report

    def verify_decomposition(self, m: BipartiteMap, d: Decomposition) -> VerificationReport:
        """Relatório de verificação de uma decomposição produzida por semilocalize."""
        return self.verify_factors(m, d.G, d.F, direction=d.direction, dD=d.dD)

    def is_semilocalizable(self, m: BipartiteMap, direction: str = "A_to_B") -> bool:
        """
        True se a decomposição é construída e passa na verificação.

        Falhas numéricas da construção contam como negativo e são registradas.
        """
        try:
            decomposition = self.semilocalize(m, direction)
        except NotSemicausalException:
            return False
        except SemilocException as exc:
            logger.warning(f"Semilocalização falhou: {exc.detail}")
            return False
        return self.verify_decomposition(m, decomposition).passed


def decompose_both_ways(m: BipartiteMap, tol: Optional[float] = None) -> Tuple[Decomposition, Decomposition]:
    """As duas decomposições de um mapa causal ("usar a prova duas vezes")."""
    service = FactorizationService(tol)
    return service.semilocalize(m, "A_to_B"), service.semilocalize(m, "B_to_A")
