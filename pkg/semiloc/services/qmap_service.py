# semiloc/services/qmap_service.py
"""
Representações de mapas completamente positivos.

Este módulo implementa as conversões entre Kraus e Choi, a aplicação do mapa
nas imagens de Heisenberg e de Schrödinger, o dual, composição, produto
tensorial e os predicados estruturais (CP, subunital, unital).

Convenções (ver docs/b_convencoes.txt):
    - Choi: C = Σ_ij |i⟩⟨j| ⊗ E_*(|i⟩⟨j|) sobre H_in ⊗ H_out, sem normalização.
    - Kraus: K_α: H_in → H_out, E(a) = Σ K_α* a K_α, E_*(ρ) = Σ K_α ρ K_α*.
    - compose(e2, e1): e1 acontece primeiro na imagem de Schrödinger,
      ação de Heisenberg a ↦ e1(e2(a)).
"""

import logging
from typing import Callable, List, Optional

import numpy as np

from semiloc.core.config import settings
from semiloc.core.exceptions import DimensionMismatchException, NotCompletelyPositiveException
from semiloc.models.causality_model import BipartiteMap
from semiloc.models.qmap_model import CpMap, KrausSet
from semiloc.utils.matrix_validation import require_shape
from semiloc.utils.tensor_legs import partial_trace, permute_operator_legs

# Configurar logger
logger = logging.getLogger(__name__)

__all__ = [
    "apply_heisenberg",
    "apply_schrodinger",
    "choi_distance",
    "choi_from_heisenberg_action",
    "choi_from_kraus",
    "choi_from_schrodinger_action",
    "compose",
    "dual",
    "heisenberg_unit",
    "identity_map",
    "is_cp",
    "is_subunital",
    "is_unital",
    "kraus_from_choi",
    "matrix_unit",
    "matrix_unit_basis",
    "min_choi_eigenvalue",
    "numerical_rank",
    "partial_trace",
    "swap_parties",
    "tensor",
]


def matrix_unit(d: int, i: int, j: int) -> np.ndarray:
    unit = np.zeros((d, d), dtype=complex)
    unit[i, j] = 1.0
    return unit


def matrix_unit_basis(d: int) -> List[np.ndarray]:
    """Unidades matriciais E_ij em ordem row-major; E_ij E_kl = δ_jk E_il."""
    return [matrix_unit(d, i, j) for i in range(d) for j in range(d)]


def numerical_rank(matrix: np.ndarray, tol: Optional[float] = None, hermitian: bool = True) -> int:
    """
    Posto numérico com corte relativo ao maior autovalor (valor singular).

    Args:
        matrix: Matriz a ser analisada
        tol: Corte relativo; padrão settings.RANK_TOL
        hermitian: Usa autovalores (True) ou valores singulares (False)

    Returns:
        Número de valores acima de tol * máximo
    """
    tol = settings.RANK_TOL if tol is None else tol
    if hermitian:
        values = np.linalg.eigvalsh(matrix)
    else:
        values = np.linalg.svd(matrix, compute_uv=False)
    top = float(np.max(np.abs(values))) if values.size else 0.0
    if top == 0.0:
        return 0
    return int(np.sum(values > tol * top))


def choi_distance(e1: CpMap, e2: CpMap) -> float:
    """Distância de Frobenius entre as matrizes de Choi."""
    if (e1.din, e1.dout) != (e2.din, e2.dout):
        raise DimensionMismatchException(detail="Mapas com dimensões diferentes",
                                         expected=(e1.din, e1.dout), got=(e2.din, e2.dout))
    return float(np.linalg.norm(e1.choi - e2.choi))


def choi_from_kraus(k: KrausSet) -> CpMap:
    """
    Matriz de Choi a partir dos operadores de Kraus.

    C = Σ_α |k_α⟩⟨k_α| com |k_α⟩ = Σ_i |i⟩ ⊗ K_α|i⟩.

    Args:
        k: Conjunto de Kraus (dimensões já validadas na construção)

    Returns:
        CpMap com din, dout do conjunto
    """
    ops = k.stacked()
    # |k_α⟩ tem entrada (i, o) = K_α[o, i]
    vecs = ops.transpose(0, 2, 1).reshape(len(k), k.din * k.dout)
    choi = vecs.T @ vecs.conj()
    return CpMap(din=k.din, dout=k.dout, choi=choi)


def kraus_from_choi(e: CpMap, tol: Optional[float] = None) -> KrausSet:
    """
    Operadores de Kraus pela decomposição espectral da matriz de Choi.

    Autovalores ordenados em ordem decrescente; são mantidos os que excedem
    tol vezes o maior autovalor. O mapa nulo devolve um único operador nulo.

    Args:
        e: Mapa CP
        tol: Corte relativo de posto; padrão settings.RANK_TOL

    Returns:
        Conjunto minimal de Kraus

    Raises:
        NotCompletelyPositiveException: Se houver autovalor < -tol
    """
    tol = settings.RANK_TOL if tol is None else tol
    eigenvalues, eigenvectors = np.linalg.eigh(e.choi)
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues = eigenvalues[order]
    eigenvectors = eigenvectors[:, order]

    if eigenvalues[-1] < -tol * max(1.0, float(eigenvalues[0])):
        logger.warning(f"Choi com autovalor negativo: {eigenvalues[-1]:.3e}")
        raise NotCompletelyPositiveException(min_eigenvalue=float(eigenvalues[-1]))

    top = max(float(eigenvalues[0]), 0.0)
    keep = eigenvalues > tol * top if top > 0 else np.zeros_like(eigenvalues, dtype=bool)

    operators = [
        np.sqrt(value) * vector.reshape(e.din, e.dout).T
        for value, vector in zip(eigenvalues[keep], eigenvectors[:, keep].T)
    ]
    if not operators:
        operators = [np.zeros((e.dout, e.din), dtype=complex)]
    return KrausSet(din=e.din, dout=e.dout, operators=tuple(operators))


def identity_map(d: int) -> CpMap:
    return choi_from_kraus(KrausSet(din=d, dout=d, operators=(np.eye(d, dtype=complex),)))


def choi_from_heisenberg_action(fn: Callable[[np.ndarray], np.ndarray], din: int, dout: int) -> CpMap:
    """
    Monta a Choi de um mapa dado pela ação de Heisenberg em unidades matriciais.

    Usa C[j, o, i, p] = E(|p⟩⟨o|)[i, j].
    """
    choi = np.zeros((din, dout, din, dout), dtype=complex)
    for p in range(dout):
        for o in range(dout):
            image = np.asarray(fn(matrix_unit(dout, p, o)))
            require_shape(image, (din, din), "Imagem de Heisenberg")
            choi[:, o, :, p] = image.T
    return CpMap(din=din, dout=dout, choi=choi.reshape(din * dout, din * dout))


def choi_from_schrodinger_action(fn: Callable[[np.ndarray], np.ndarray], din: int, dout: int) -> CpMap:
    """Monta a Choi a partir da ação de Schrödinger: C[i, :, j, :] = E_*(|i⟩⟨j|)."""
    choi = np.zeros((din, dout, din, dout), dtype=complex)
    for i in range(din):
        for j in range(din):
            image = np.asarray(fn(matrix_unit(din, i, j)))
            require_shape(image, (dout, dout), "Imagem de Schrödinger")
            choi[i, :, j, :] = image
    return CpMap(din=din, dout=dout, choi=choi.reshape(din * dout, din * dout))


def apply_heisenberg(e: CpMap, a: np.ndarray) -> np.ndarray:
    """
    E(a) para um observável a ∈ B(H_out).

    Args:
        e: Mapa
        a: Matriz dout x dout

    Returns:
        Matriz din x din

    Raises:
        DimensionMismatchException: Se a não for dout x dout
    """
    a = np.asarray(a, dtype=complex)
    require_shape(a, (e.dout, e.dout), "Observável")
    return np.einsum("po,joip->ij", a, e.choi_tensor)


def apply_schrodinger(e: CpMap, rho: np.ndarray) -> np.ndarray:
    """
    E_*(ρ) tal que tr(E_*(ρ) A) = tr(ρ E(A)) para todo A.

    Raises:
        DimensionMismatchException: Se rho não for din x din
    """
    rho = np.asarray(rho, dtype=complex)
    require_shape(rho, (e.din, e.din), "Matriz densidade")
    return np.einsum("ij,iojp->op", rho, e.choi_tensor)


def heisenberg_unit(e: CpMap) -> np.ndarray:
    """E(1)."""
    return apply_heisenberg(e, np.eye(e.dout, dtype=complex))


def dual(e: CpMap) -> CpMap:
    """
    Adjunto pelo pareamento do traço: o mapa cuja ação de Heisenberg é E_*.

    Kraus {K_α} viram {K_α*}; a Choi é permutada exatamente, logo
    dual(dual(e)) reproduz e bit a bit.
    """
    choi = e.choi_tensor.transpose(3, 2, 1, 0).reshape(e.din * e.dout, e.din * e.dout)
    return CpMap(din=e.dout, dout=e.din, choi=choi)


def min_choi_eigenvalue(e: CpMap) -> float:
    return float(np.linalg.eigvalsh(e.choi)[0])


def is_cp(e: CpMap, tol: Optional[float] = None) -> bool:
    """Menor autovalor da Choi >= -tol · max(1, maior autovalor)."""
    tol = settings.RANK_TOL if tol is None else tol
    eigenvalues = np.linalg.eigvalsh(e.choi)
    return float(eigenvalues[0]) >= -tol * max(1.0, float(eigenvalues[-1]))


def is_subunital(e: CpMap, tol: Optional[float] = None) -> bool:
    """E(1) ⪯ 1 + tol."""
    tol = settings.RANK_TOL if tol is None else tol
    top = float(np.linalg.eigvalsh(heisenberg_unit(e))[-1])
    return top <= 1.0 + tol


def is_unital(e: CpMap, tol: Optional[float] = None) -> bool:
    """‖E(1) − 1‖_F ≤ tol."""
    tol = settings.RANK_TOL if tol is None else tol
    return float(np.linalg.norm(heisenberg_unit(e) - np.eye(e.din))) <= tol


def compose(e2: CpMap, e1: CpMap) -> CpMap:
    """
    Composição na ordem de Heisenberg a ↦ e1(e2(a)).

    e1 acontece primeiro na imagem de Schrödinger: E_* = e2_* ∘ e1_*.
    Exige e1.dout == e2.din; resultado tem din = e1.din e dout = e2.dout.

    Raises:
        DimensionMismatchException: Se os espaços intermediários não coincidirem
    """
    if e1.dout != e2.din:
        raise DimensionMismatchException(detail="Espaço intermediário da composição incompatível",
                                         expected=e1.dout, got=e2.din)
    # C[i, o, j, p] = Σ_mn C1[i, m, j, n] C2[m, o, n, p]
    choi = np.einsum("imjn,monp->iojp", e1.choi_tensor, e2.choi_tensor)
    n = e1.din * e2.dout
    return CpMap(din=e1.din, dout=e2.dout, choi=choi.reshape(n, n))


def tensor(e1: CpMap, e2: CpMap) -> CpMap:
    """e1 ⊗ e2, com e1 como fator lento em H_in e em H_out."""
    din = e1.din * e2.din
    dout = e1.dout * e2.dout
    choi = np.einsum("iojp,kqlr->ikoqjlpr", e1.choi_tensor, e2.choi_tensor)
    return CpMap(din=din, dout=dout, choi=choi.reshape(din * dout, din * dout))


def swap_parties(m: BipartiteMap) -> BipartiteMap:
    """
    Conjugação pela troca A ↔ B: E'(x) = S E(S* x S) S*.

    A Choi tem pernas (A_in, B_in, A_out, B_out) e passa a (B_in, A_in, B_out, A_out).
    """
    dA, dB = m.dims.legs
    choi = permute_operator_legs(m.e.choi, [dA, dB, dA, dB], [1, 0, 3, 2])
    n = dA * dB
    return BipartiteMap(dims=m.dims.swapped(), e=CpMap(din=n, dout=n, choi=choi))
