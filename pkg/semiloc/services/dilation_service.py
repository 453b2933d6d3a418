# semiloc/services/dilation_service.py
"""
Maquinário de Stinespring.

Constrói dilatações minimais, testa minimalidade, extrai operadores de Kraus
e implementa o argumento de unicidade: duas dilatações do mesmo mapa, sendo a
primeira minimal, estão ligadas por Ũ = 1 ⊗ U com U isometria.
"""

import logging
from typing import Optional

import numpy as np
from scipy.linalg import pinv, polar

from semiloc.core.config import settings
from semiloc.core.exceptions import (
    DilationMismatchException,
    DimensionMismatchException,
    IntertwiningException,
    InvalidMatrixException,
    NotMinimalException,
)
from semiloc.models.dilation_model import Dilation, Isometry
from semiloc.models.qmap_model import CpMap, KrausSet
from semiloc.services.qmap_service import (
    apply_heisenberg,
    choi_distance,
    choi_from_kraus,
    kraus_from_choi,
    matrix_unit_basis,
    numerical_rank,
)

# Configurar logger
logger = logging.getLogger(__name__)


def kraus_from_dilation(d: Dilation) -> KrausSet:
    """Componentes de V na base canônica de K."""
    return KrausSet(din=d.din, dout=d.dout, operators=tuple(d.kraus_tensor))


def map_from_dilation(d: Dilation) -> CpMap:
    """O mapa a ↦ V*(a ⊗ 1_K)V realizado pela dilatação."""
    return choi_from_kraus(kraus_from_dilation(d))


def is_minimal(d: Dilation, tol: Optional[float] = None) -> bool:
    """
    Critério de minimalidade: os vetores (a ⊗ 1_K)Vφ geram H_out ⊗ K.

    O conjunto {(E_ij ⊗ 1_K)V e_m} é {e_i ⊗ w_jm} com w_jm[α] = K_α[j, m],
    logo seu posto é dout · posto{K_α}; a dilatação é minimal exatamente
    quando os operadores de Kraus são linearmente independentes.

    Args:
        d: Dilatação
        tol: Corte relativo de posto; padrão settings.RANK_TOL

    Returns:
        True se o posto do conjunto gerador é dout · k
    """
    tol = settings.RANK_TOL if tol is None else tol
    coefficients = d.kraus_tensor.reshape(d.k, d.dout * d.din)
    return d.dout * numerical_rank(coefficients, tol, hermitian=False) == d.dout * d.k


def dilation_from_kraus(k: KrausSet, tol: Optional[float] = None) -> Dilation:
    """
    Vψ = Σ_α (K_α ψ) ⊗ ε_α com ε_α a base canônica de K.

    A flag minimal é decidida pelo teste de geração.
    """
    V = k.stacked().transpose(1, 0, 2).reshape(k.dout * len(k), k.din)
    dilation = Dilation(din=k.din, dout=k.dout, k=len(k), V=V)
    return Dilation(din=k.din, dout=k.dout, k=len(k), V=dilation.V, minimal=is_minimal(dilation, tol))


def minimal_stinespring(e: CpMap, tol: Optional[float] = None) -> Dilation:
    """
    Dilatação minimal a partir da decomposição espectral da Choi.

    k é o posto numérico da Choi; autovalores em ordem decrescente, subespaços
    degenerados na ordem do solver.

    Raises:
        NotCompletelyPositiveException: Se e não for CP
    """
    dilation = dilation_from_kraus(kraus_from_choi(e, tol), tol)
    logger.info(f"Dilatação minimal: din={e.din}, dout={e.dout}, k={dilation.k}")
    return dilation


def dilation_residual(d: Dilation, e: CpMap) -> float:
    """max_ij ‖V*(E_ij ⊗ 1_K)V − E(E_ij)‖_F."""
    if (d.din, d.dout) != (e.din, e.dout):
        raise DimensionMismatchException(detail="Dilatação e mapa com dimensões diferentes",
                                         expected=(e.din, e.dout), got=(d.din, d.dout))
    identity_k = np.eye(d.k)
    return max(
        float(np.linalg.norm(d.V.conj().T @ np.kron(unit, identity_k) @ d.V - apply_heisenberg(e, unit)))
        for unit in matrix_unit_basis(d.dout)
    )


def _spanning_vectors(d: Dilation) -> np.ndarray:
    # Colunas (i, j, m) = (E_ij ⊗ 1_K) V e_m = e_i ⊗ V[j, :, m]
    V3 = d.V.reshape(d.dout, d.k, d.din)
    vectors = np.einsum("oi,jam->oaijm", np.eye(d.dout), V3)
    return vectors.reshape(d.dout * d.k, d.dout * d.dout * d.din)


def extract_tensor_factor(Utilde: np.ndarray, dcommon: int, tol: Optional[float] = None) -> Isometry:
    """
    Decompõe Ũ = 1 ⊗ U para um Ũ que comuta com a ⊗ 1.

    U = (1/dcommon) Σ_m (⟨m| ⊗ 1) Ũ (|m⟩ ⊗ 1).

    Args:
        Utilde: Operador (dcommon·k1) x (dcommon·k)
        dcommon: Dimensão do fator comum (perna lenta)
        tol: Resíduo de entrelaçamento aceito; padrão settings.INTERTWINING_TOL

    Returns:
        Isometria U: K → K1

    Raises:
        IntertwiningException: Se max ‖Ũ(a ⊗ 1) − (a ⊗ 1)Ũ‖ exceder tol
        InvalidMatrixException: Se o fator extraído não for isométrico
    """
    tol = settings.INTERTWINING_TOL if tol is None else tol
    Utilde = np.asarray(Utilde, dtype=complex)
    rows, cols = Utilde.shape
    if rows % dcommon or cols % dcommon:
        raise DimensionMismatchException(detail="Ũ não tem o fator comum indicado",
                                         expected=f"múltiplos de {dcommon}", got=Utilde.shape)
    k1, k = rows // dcommon, cols // dcommon

    residual = max(
        float(np.linalg.norm(Utilde @ np.kron(unit, np.eye(k)) - np.kron(unit, np.eye(k1)) @ Utilde))
        for unit in matrix_unit_basis(dcommon)
    )
    if residual > tol:
        logger.error(f"Resíduo de entrelaçamento acima da tolerância: {residual:.3e}")
        raise IntertwiningException(residual=residual)

    blocks = Utilde.reshape(dcommon, k1, dcommon, k)
    U = np.einsum("mamb->ab", blocks) / dcommon

    reconstruction = float(np.linalg.norm(Utilde - np.kron(np.eye(dcommon), U)))
    if reconstruction > tol:
        logger.error(f"Ũ difere de 1 ⊗ U: {reconstruction:.3e}")
        raise IntertwiningException(detail="Ũ não se decompõe como 1 ⊗ U", residual=reconstruction)

    isometry = Isometry(dsrc=k, ddst=k1, U=U)
    if isometry.defect() > tol * np.sqrt(k):
        raise InvalidMatrixException(detail=f"Fator extraído não é isometria (defeito {isometry.defect():.3e})")
    return isometry


def connecting_isometry(
        minimal: Dilation,
        other: Dilation,
        tol: Optional[float] = None,
        same_map_tol: Optional[float] = None,
) -> Isometry:
    """
    Isometria U: K → K1 com (1 ⊗ U)V_min = V_other.

    Resolve Ũ X = Y por mínimos quadrados sobre os vetores geradores
    x_ijm = (E_ij ⊗ 1)V_min e_m e y_ijm = (E_ij ⊗ 1)V_other e_m, extrai
    Ũ = 1 ⊗ U e projeta U na isometria mais próxima (decomposição polar).

    Args:
        minimal: Dilatação minimal
        other: Outra dilatação do mesmo mapa
        tol: Tolerância de entrelaçamento; padrão settings.INTERTWINING_TOL
        same_map_tol: Distância de Choi máxima entre os mapas realizados;
            padrão settings.SAME_MAP_TOL · din · dout

    Returns:
        Isometria (unitária quando other também é minimal), com
        ‖(1 ⊗ U)V_min − V_other‖_F <= tol · √din

    Raises:
        NotMinimalException: Se a primeira dilatação não for minimal
        DilationMismatchException: Se as dilatações realizarem mapas diferentes
    """
    tol = settings.INTERTWINING_TOL if tol is None else tol
    if (minimal.din, minimal.dout) != (other.din, other.dout):
        raise DimensionMismatchException(detail="Dilatações com dimensões diferentes",
                                         expected=(minimal.din, minimal.dout), got=(other.din, other.dout))
    if not minimal.minimal or not is_minimal(minimal):
        raise NotMinimalException()
    if same_map_tol is None:
        same_map_tol = settings.SAME_MAP_TOL * minimal.din * minimal.dout

    distance = choi_distance(map_from_dilation(minimal), map_from_dilation(other))
    if distance >= same_map_tol:
        logger.warning(f"Dilatações de mapas diferentes: distância {distance:.3e} (limite {same_map_tol:.1e})")
        raise DilationMismatchException(distance=distance)

    X = _spanning_vectors(minimal)
    Y = _spanning_vectors(other)
    Utilde = Y @ pinv(X)

    isometry = extract_tensor_factor(Utilde, minimal.dout, tol)
    # Projeta na isometria mais próxima
    snapped, _ = polar(isometry.U, side="right")
    isometry = Isometry(dsrc=minimal.k, ddst=other.k, U=snapped)

    residual = float(np.linalg.norm(np.kron(np.eye(minimal.dout), isometry.U) @ minimal.V - other.V))
    if residual > tol * np.sqrt(minimal.din):
        logger.error(f"Isometria não reproduz a dilatação: {residual:.3e}")
        raise IntertwiningException(detail="(1 ⊗ U)V_min difere de V_other", residual=residual)

    logger.info(f"Isometria de ligação: k={minimal.k} → k1={other.k}, resíduo {residual:.3e}")
    return isometry
