import logging
import math
from enum import Enum
from typing import Tuple

import numpy as np

from .actions import ModuleTag, act, truncated_matrix
from .bases import (
    GaugeChoice, DEFAULT_GAUGE, DEFAULT_LMAX, gevp_p_coeffs, gevp_q_coeffs, evp_j_coeffs, checked_ratio,
)
from .vector import ModuleVector
from ..algebra import GeneratorTag, realize, apply_op
from ..errors import DomainError, ConvergenceError
from ..poly import askey_q, jacobi_phat, eval_poly, shifted_power, taylor_shift
from ..scalar import Params, pochhammer, gamma_ratio, cpow, hyp2f1

logger = logging.getLogger(__name__)

TAIL_TOLERANCE = 1e-13
MAX_LMAX = 16 * DEFAULT_LMAX


class OverlapKind(Enum):
    P = 'P'
    QLT = 'QLT'
    J = 'J'
    JTILDE = 'JTILDE'


class SplitKind(Enum):
    QLT_SPLIT = 'QLT_SPLIT'
    JTILDE_SPLIT = 'JTILDE_SPLIT'


def _gauge_factor(coefficient: complex, z: complex, exponent: float) -> complex:
    if exponent == 0:
        return coefficient
    return coefficient * cpow(z - 1, exponent)


def _arrays(v: ModuleVector) -> Tuple[np.ndarray, np.ndarray]:
    keys, values = zip(*v.items())
    return np.array(keys), np.array(values, dtype=complex)


def _fsum(terms: np.ndarray) -> complex:
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def _polynomial_part(v: ModuleVector, z: complex) -> complex:
    # v is supported on {0..n}
    u = z - 1
    total = 0j
    for _, c in reversed(list(v.items())):
        total = total * u + c
    return total


def _dual_series(index: int, z: complex, params: Params, gauge: GaugeChoice, lmax: int, jacobi: bool,
                 tail_tol: float) -> complex:
    w = 1 / (z - 1)
    while True:
        if jacobi:
            keys, coeffs = _arrays(evp_j_coeffs(index, params, dual=True, lmax=lmax, gauge=gauge))
        else:
            keys, coeffs = _arrays(act(ModuleTag.LT, gevp_q_coeffs(index, params, gauge, lmax), params))
        terms = coeffs * w ** (keys + 1)
        value = _fsum(terms)
        if len(terms) < 2 or terms[-1] == 0:
            return value
        ratio = abs(terms[-1] / terms[-2])
        tail = abs(terms[-1]) * ratio / (1 - ratio) if ratio < 1 else math.inf
        if tail <= tail_tol * abs(value):
            return value
        if lmax >= MAX_LMAX:
            raise ConvergenceError(f"overlap series at z = {z} not converged with lmax = {lmax}")
        lmax *= 2
        logger.debug("extending overlap series at z=%s to lmax=%d (tail %.3g)", z, lmax, tail)


def overlap(kind: OverlapKind, index: int, z: complex, params: Params,
            gauge: GaugeChoice = DEFAULT_GAUGE, lmax: int = DEFAULT_LMAX,
            tail_tol: float = TAIL_TOLERANCE) -> complex:
    """tail_tol bounds the estimated remainder of the dual series relative to its partial sum."""
    z = complex(z)
    if kind is OverlapKind.P:
        return _gauge_factor(gauge.gamma_tilde, z, gauge.a_tilde) * _polynomial_part(
            gevp_p_coeffs(index, params, gauge), z)
    if kind is OverlapKind.J:
        return _gauge_factor(gauge.gamma_tilde, z, gauge.a_tilde) * _polynomial_part(
            evp_j_coeffs(index, params, gauge=gauge), z)
    if abs(z - 1) <= 1:
        raise DomainError(f"the {kind.value} overlap series needs |z - 1| > 1, got {abs(z - 1)}")
    series = _dual_series(index, z, params, gauge, lmax, kind is OverlapKind.JTILDE, tail_tol)
    return _gauge_factor(gauge.gamma, z, 1 - gauge.a) * series


def jacobi_overlap_normalization(n: int, params: Params, gauge: GaugeChoice = DEFAULT_GAUGE) -> complex:
    """overlap(J, n, z) / P̂_n(z)."""
    a, b = params.alpha, params.beta
    return gauge.gamma_tilde * gauge.f_n0 * checked_ratio(pochhammer(n + a + 1, n), pochhammer(a + b + 1, n))


def _qlt_split(m: int, z: complex, params: Params, gauge: GaugeChoice) -> Tuple[complex, complex]:
    a, b = params.alpha, params.beta
    pre = _gauge_factor(gauge.gamma * gauge.dstar_mm * (m + a + 1), z, 1 - gauge.a)
    regular = gamma_ratio([m + a + 1, b + 1], [m + b + 2, a]) * hyp2f1(m + 1, 1 - a, m + b + 2, z)
    weight = cpow(-z, -1 - b) * cpow(1 - z, a + b) * eval_poly(askey_q(m, params), 1 / z)
    scale = gamma_ratio([m + a + 1, m + b + 1], [m + 1, m + a + b + 1])
    return pre * regular, -pre * scale * weight


def _jtilde_split(m: int, z: complex, params: Params, gauge: GaugeChoice) -> Tuple[complex, complex]:
    a, b = params.alpha, params.beta
    pre = _gauge_factor((-1) ** (m + 1) * gauge.gamma * gauge.ftilde_nn, z, 1 - gauge.a)
    regular = gamma_ratio([2 * m + a + 2, -b], [m + a + 1, m - b + 1]) * hyp2f1(m + 1, -m - a, 1 + b, z)
    weight = cpow(-z, -b) * cpow(1 - z, a + b) * eval_poly(jacobi_phat(m, params), z)
    scale = (gamma_ratio([2 * m + a + 2, b], [m + 1, m + a + b + 1])
             * (-1) ** m * checked_ratio(pochhammer(1 + a + m, m), pochhammer(1 - b, m)))
    return pre * regular, pre * scale * weight


def overlap_closed_form(kind: SplitKind, index: int, z: complex, params: Params,
                        gauge: GaugeChoice = DEFAULT_GAUGE) -> Tuple[complex, complex]:
    """(power-series part, weighted polynomial part) of the dual overlaps continued into |z| < 1."""
    z = complex(z)
    if z in (0, 1):
        raise DomainError(f"z = {z} is a branch point")
    if kind is SplitKind.QLT_SPLIT:
        return _qlt_split(index, z, params, gauge)
    return _jtilde_split(index, z, params, gauge)


_DUALS = (
    (GeneratorTag.L, ModuleTag.L, ModuleTag.LT),
    (GeneratorTag.M, ModuleTag.M, ModuleTag.MT),
    (GeneratorTag.X, ModuleTag.X, ModuleTag.XT),
)


def transpose_consistency(K: int, params: Params) -> float:
    """Largest disagreement between the adjoint matrices and the transposes, and between the differential
    operators acting on (z-1)^k and the dual module action."""
    if K < 3:
        raise ValueError(f"K must be at least 3, got {K}")
    worst = 0.0
    for generator, tag, dual in _DUALS:
        transposed = truncated_matrix(tag, K, params).T[:K, :K]
        worst = max(worst, float(np.max(np.abs(truncated_matrix(dual, K, params)[:K, :K] - transposed))))
        op = realize(generator, params)
        for k in range(K + 1):
            image = taylor_shift(apply_op(op, shifted_power(k)), 1)
            for j in range(K + 2):
                expected = act(dual, ModuleVector.basis(j), params)[k]
                worst = max(worst, abs(image[j] - expected))
    return worst
