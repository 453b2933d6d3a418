# semiloc/utils/tensor_legs.py
"""
Contabilidade de pernas tensoriais.

Convenção global: produto tensorial em ordem row-major, o fator da esquerda
é o índice lento (np.kron). Toda reordenação de pernas do projeto passa por
estas funções.
"""

from typing import Sequence, Union

import numpy as np

from semiloc.core.exceptions import DimensionMismatchException


def _check_perm(dims: Sequence[int], perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(len(dims))):
        raise DimensionMismatchException(detail="Permutação de pernas inválida", expected=len(dims), got=list(perm))


def permute_operator_legs(op: np.ndarray, dims: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """
    Reordena as pernas de um operador quadrado sobre ⊗ dims.

    A perna k do resultado é a perna perm[k] da entrada (mesma regra de
    np.transpose), aplicada simultaneamente a linhas e colunas.

    Args:
        op: Operador (prod(dims) x prod(dims))
        dims: Dimensões das pernas, na ordem atual
        perm: Nova ordem das pernas

    Returns:
        Operador sobre ⊗ dims[perm]
    """
    _check_perm(dims, perm)
    n = len(dims)
    total = int(np.prod(dims))
    if op.shape != (total, total):
        raise DimensionMismatchException(detail="Operador incompatível com as pernas", expected=(total, total),
                                         got=op.shape)
    tensor = op.reshape(tuple(dims) + tuple(dims))
    axes = list(perm) + [n + p for p in perm]
    return tensor.transpose(axes).reshape(total, total)


def permute_row_legs(mat: np.ndarray, dims: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """Reordena apenas as pernas do espaço de chegada (linhas) de um operador retangular."""
    _check_perm(dims, perm)
    total = int(np.prod(dims))
    if mat.shape[0] != total:
        raise DimensionMismatchException(detail="Linhas incompatíveis com as pernas", expected=total,
                                         got=mat.shape[0])
    cols = mat.shape[1]
    tensor = mat.reshape(tuple(dims) + (cols,))
    return tensor.transpose(list(perm) + [len(dims)]).reshape(total, cols)


def swap_operator(d1: int, d2: int) -> np.ndarray:
    """Permutação S: H1 ⊗ H2 → H2 ⊗ H1, S(x ⊗ y) = y ⊗ x."""
    return permute_row_legs(np.eye(d1 * d2, dtype=complex), [d1, d2], [1, 0])


def partial_trace(m: np.ndarray, dims: Sequence[int], which: Union[int, Sequence[int]]) -> np.ndarray:
    """
    Traço parcial sobre as pernas indicadas.

    Args:
        m: Operador sobre ⊗ dims
        dims: Dimensões das pernas
        which: Índice (ou índices) das pernas a traçar

    Returns:
        Operador sobre as pernas restantes, na ordem original
    """
    traced = sorted({which} if isinstance(which, (int, np.integer)) else set(which))
    n = len(dims)
    if any(k < 0 or k >= n for k in traced):
        raise DimensionMismatchException(detail="Perna inexistente no traço parcial", expected=n, got=traced)
    total = int(np.prod(dims))
    if m.shape != (total, total):
        raise DimensionMismatchException(detail="Operador incompatível com as pernas", expected=(total, total),
                                         got=m.shape)

    tensor = m.reshape(tuple(dims) + tuple(dims))
    # Traça da maior para a menor perna para manter os índices válidos
    for k in reversed(traced):
        n_current = tensor.ndim // 2
        tensor = np.trace(tensor, axis1=k, axis2=n_current + k)
    kept = [d for k, d in enumerate(dims) if k not in traced]
    d_kept = int(np.prod(kept)) if kept else 1
    return tensor.reshape(d_kept, d_kept)


def realign(op: np.ndarray, dims_left: Sequence[int], dims_right: Sequence[int]) -> np.ndarray:
    """
    Realinhamento para a decomposição de Schmidt de operadores.

    Para X sobre L ⊗ R devolve R(X) com R(X)[(r_L, c_L), (r_R, c_R)] = X[(r_L, r_R), (c_L, c_R)],
    de modo que X = A ⊗ B se e só se R(X) = vec(A) vec(B)^T.
    """
    dl = int(np.prod(dims_left))
    dr = int(np.prod(dims_right))
    if op.shape != (dl * dr, dl * dr):
        raise DimensionMismatchException(detail="Operador incompatível com a bipartição", expected=(dl * dr, dl * dr),
                                         got=op.shape)
    return op.reshape(dl, dr, dl, dr).transpose(0, 2, 1, 3).reshape(dl * dl, dr * dr)
