from enum import Enum
from typing import Callable, Dict, List, Tuple

import numpy as np

from .vector import ModuleVector
from ..scalar import Params


class ModuleTag(Enum):
    L = 'L'
    M = 'M'
    X = 'X'
    LT = 'LT'
    MT = 'MT'
    XT = 'XT'


def ell(k: int, params: Params) -> float:
    return k + params.alpha + 1


def diagonal_m(k: int, params: Params) -> float:
    return k * (k + params.alpha + 1)


def lowering_m(k: int, params: Params) -> float:
    return k * (k + params.alpha + params.beta)


Image = List[Tuple[int, float]]


def _l(k: int, p: Params) -> Image:
    return [(k, ell(k, p))]


def _m(k: int, p: Params) -> Image:
    return [(k, diagonal_m(k, p)), (k - 1, lowering_m(k, p))]


def _x(k: int, p: Params) -> Image:
    return [(k, 1.0), (k + 1, 1.0)]


def _mt(k: int, p: Params) -> Image:
    return [(k, diagonal_m(k, p)), (k + 1, lowering_m(k + 1, p))]


def _xt(k: int, p: Params) -> Image:
    return [(k, 1.0), (k - 1, 1.0)]


_ACTIONS: Dict[ModuleTag, Callable[[int, Params], Image]] = {
    ModuleTag.L: _l,
    ModuleTag.M: _m,
    ModuleTag.X: _x,
    ModuleTag.LT: _l,
    ModuleTag.MT: _mt,
    ModuleTag.XT: _xt,
}


def act(tag: ModuleTag, v: ModuleVector, params: Params) -> ModuleVector:
    action = _ACTIONS[tag]
    out: Dict[int, complex] = {}
    for k, c in v.items():
        for j, weight in action(k, params):
            out[j] = out.get(j, 0j) + weight * c
    return ModuleVector(out)


def truncated_matrix(tag: ModuleTag, K: int, params: Params) -> np.ndarray:
    """Matrix of the action on span{e_0..e_K}; column j holds the image of e_j, out-of-range components dropped."""
    if K < 1:
        raise ValueError(f"truncation dimension must be at least 1, got {K}")
    matrix = np.zeros((K + 1, K + 1))
    action = _ACTIONS[tag]
    for k in range(K + 1):
        for j, weight in action(k, params):
            if 0 <= j <= K:
                matrix[j, k] += weight
    return matrix


def gevp_spectrum(K: int, params: Params, pencil: bool = True) -> np.ndarray:
    """Eigenvalues of the pencil (M, L), or of M alone, read off the triangular diagonals."""
    if K < 0:
        raise ValueError(f"K must be non-negative, got {K}")
    ks = range(K + 1)
    mu = np.array([diagonal_m(k, params) for k in ks])
    if not pencil:
        return mu
    return mu / np.array([ell(k, params) for k in ks])


class TruncatedRelation(Enum):
    COM_LM = 'COM_LM'
    COM_LX = 'COM_LX'
    COM_MX = 'COM_MX'
    CASIMIR = 'CASIMIR'


def _commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def _anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def _sides(relation: TruncatedRelation, K: int, params: Params) -> Tuple[np.ndarray, np.ndarray]:
    a, b = params.alpha, params.beta
    l, m, x = (truncated_matrix(t, K, params) for t in (ModuleTag.L, ModuleTag.M, ModuleTag.X))
    one = np.eye(K + 1)
    if relation is TruncatedRelation.COM_LM:
        return _commutator(l, m), l @ l - (a + 1) * l - m
    if relation is TruncatedRelation.COM_LX:
        return _commutator(l, x), x - one
    if relation is TruncatedRelation.COM_MX:
        return _commutator(m, x), _anticommutator(x, l) - (a + 1) * x + b * one
    q = (_anticommutator(l @ l, x) - (a + 1) * _anticommutator(l, x) - _anticommutator(m, x)
         + 2 * m + 2 * b * l)
    return q, params.casimir * one


def truncated_relation_residual(relation: TruncatedRelation, K: int, params: Params) -> float:
    """Largest defect on rows 0..K-1 and columns 0..K-2, relative to 1 + the largest entry involved.

    Columns near K are excluded because X drops e_{K+1}."""
    if K < 2:
        raise ValueError(f"relation checks need K >= 2, got {K}")
    lhs, rhs = _sides(relation, K, params)
    lhs, rhs = lhs[:K, :K - 1], rhs[:K, :K - 1]
    scale = 1 + max(np.max(np.abs(lhs)), np.max(np.abs(rhs)))
    return float(np.max(np.abs(lhs - rhs)) / scale)
