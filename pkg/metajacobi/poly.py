import dataclasses
import math
from typing import Tuple, Sequence, Union

import numpy as np

from .errors import DegenerateParameterError
from .scalar import Params, pochhammer, POLE_TOLERANCE


@dataclasses.dataclass(frozen=True, eq=False)
class PolyCoeffs:
    """Dense coefficients of a polynomial in z; ``coeffs[j]`` multiplies z^j.

    Trailing exact zeros are stripped, the zero polynomial is ``[0]``."""
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        nonzero = np.flatnonzero(c)
        c = c[:nonzero[-1] + 1] if nonzero.size else np.zeros(1, dtype=complex)
        c.setflags(write=False)
        object.__setattr__(self, 'coeffs', c)

    @staticmethod
    def monomial(k: int, coefficient: complex = 1) -> 'PolyCoeffs':
        c = np.zeros(k + 1, dtype=complex)
        c[k] = coefficient
        return PolyCoeffs(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j: int) -> complex:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0j

    def __call__(self, z):
        return eval_poly(self, z)

    def __add__(self, other: 'PolyCoeffs') -> 'PolyCoeffs':
        size = max(len(self), len(other))
        c = np.zeros(size, dtype=complex)
        c[:len(self)] += self.coeffs
        c[:len(other)] += other.coeffs
        return PolyCoeffs(c)

    def __neg__(self) -> 'PolyCoeffs':
        return PolyCoeffs(-self.coeffs)

    def __sub__(self, other: 'PolyCoeffs') -> 'PolyCoeffs':
        return self + (-other)

    def __mul__(self, scalar: complex) -> 'PolyCoeffs':
        return PolyCoeffs(self.coeffs * scalar)

    __rmul__ = __mul__

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def __repr__(self):
        return f"PolyCoeffs({list(self.coeffs)})"


def eval_poly(p: PolyCoeffs, z):
    result = 0j
    for c in p.coeffs[::-1]:
        result = result * z + c
    return result


def taylor_shift(p: PolyCoeffs, a: complex) -> PolyCoeffs:
    """Coefficients of p(z + a), by repeated synthetic division."""
    c = np.array(p.coeffs, dtype=complex)
    n = len(c) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            c[j] += a * c[j + 1]
    return PolyCoeffs(c)


def shifted_power(k: int, center: complex = 1) -> PolyCoeffs:
    """(z - center)^k expanded in powers of z."""
    return taylor_shift(PolyCoeffs.monomial(k), -center)


def _terminating_coefficients(n: int, b: complex, c: complex) -> np.ndarray:
    # coefficients of 2F1(-n, b; c; z) by forward term ratios
    coefficients = np.zeros(n + 1, dtype=complex)
    term = 1 + 0j
    coefficients[0] = term
    for k in range(n):
        if abs(c + k) <= POLE_TOLERANCE:
            raise DegenerateParameterError(f"({c})_{k + 1} vanishes")
        term *= (k - n) * (b + k) / ((c + k) * (k + 1))
        coefficients[k + 1] = term
    return coefficients


def _monic(n: int, numerator: complex, denominator: complex, coefficients: np.ndarray) -> PolyCoeffs:
    if abs(denominator) <= POLE_TOLERANCE:
        raise DegenerateParameterError(f"normalization of the degree {n} polynomial is singular")
    return PolyCoeffs(numerator / denominator * coefficients)


def askey_p(n: int, params: Params) -> PolyCoeffs:
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    alpha, beta = params.alpha, params.beta
    coefficients = _terminating_coefficients(n, alpha + 1, 1 - beta - n)
    return _monic(n, pochhammer(beta, n), pochhammer(alpha + 1, n), coefficients)


def askey_q(n: int, params: Params) -> PolyCoeffs:
    return askey_p(n, params.swapped())


def jacobi_phat(n: int, params: Params) -> PolyCoeffs:
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    alpha, beta = params.alpha, params.beta
    coefficients = _terminating_coefficients(n, n + alpha + 1, 1 - beta)
    return _monic(n, (-1) ** n * pochhammer(1 - beta, n), pochhammer(1 + alpha + n, n), coefficients)


def recurrence_coeffs(n: int, params: Params) -> Tuple[float, float]:
    alpha, beta = params.alpha, params.beta
    if abs(alpha + n + 1) <= POLE_TOLERANCE:
        raise DegenerateParameterError(f"b_{n} divides by alpha + {n + 1} = 0")
    b = -(beta + n) / (alpha + n + 1)
    if n == 0:
        return b, 0.0
    if abs(alpha + n) <= POLE_TOLERANCE:
        raise DegenerateParameterError(f"g_{n} divides by alpha + {n} = 0")
    g = -n * (n + alpha + beta) / ((alpha + n) * (alpha + n + 1))
    return b, g


def askey_p_by_recurrence(n: int, params: Params, z):
    """P_{k+1} = z (P_k + g_k P_{k-1}) - b_k P_k, from P_{-1} = 0 and P_0 = 1."""
    previous, current = 0 * z, 1 + 0 * z
    for k in range(n):
        b, g = recurrence_coeffs(k, params)
        previous, current = current, z * (current + g * previous) - b * current
    return current


def falling_factorials(degree: int, q: int) -> np.ndarray:
    """j!/(j-q)! for j = 0..degree, zero where j < q."""
    return np.array([math.perm(j, q) if j >= q else 0 for j in range(degree + 1)], dtype=float)


PolyLike = Union[PolyCoeffs, Sequence[complex]]


def as_poly(p: PolyLike) -> PolyCoeffs:
    return p if isinstance(p, PolyCoeffs) else PolyCoeffs(np.asarray(p, dtype=complex))
