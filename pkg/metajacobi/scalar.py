import cmath
import dataclasses
import math
from typing import Sequence, Union

import numpy as np

from .errors import ParameterError, PoleError, DegenerateParameterError, DomainError, ConvergenceError

Number = Union[int, float, complex]

POLE_TOLERANCE = 1e-14
GUARD_TOLERANCE = 1e-12

SERIES_TOLERANCE = 1e-14
SERIES_MAX_TERMS = 10_000


def nearest_integer_distance(x: Number) -> float:
    x = complex(x)
    return math.hypot(x.real - round(x.real), x.imag)


def is_integer(x: Number, eps: float = GUARD_TOLERANCE) -> bool:
    return nearest_integer_distance(x) <= eps


def is_nonpositive_integer(x: Number, eps: float = POLE_TOLERANCE) -> bool:
    x = complex(x)
    return x.real < 0.5 and is_integer(x, eps)


@dataclasses.dataclass(frozen=True)
class Params:
    alpha: float
    beta: float
    strict: bool = dataclasses.field(default=True, compare=False, repr=False)
    """When False the generic-parameter guard is skipped; used for swapped, flipped and shifted
    parameter pairs whose own degeneracies are checked by the routine that consumes them."""

    def __post_init__(self):
        object.__setattr__(self, 'alpha', float(self.alpha))
        object.__setattr__(self, 'beta', float(self.beta))
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ParameterError(f"alpha and beta must be finite, got ({self.alpha}, {self.beta})")
        if self.strict:
            self.check()

    def check(self):
        if is_nonpositive_integer(self.alpha + self.beta + 1, GUARD_TOLERANCE):
            raise ParameterError(f"alpha + beta + 1 = {self.alpha + self.beta + 1} is a non-positive integer")
        if is_integer(self.beta):
            raise ParameterError(f"beta = {self.beta} is an integer")
        if self.alpha < 0 and is_integer(self.alpha):
            raise ParameterError(f"alpha = {self.alpha} is a negative integer")

    @property
    def tau(self) -> float:
        return (self.alpha + self.beta + 1) / 2

    @property
    def casimir(self) -> float:
        return 2 * self.alpha * self.beta - self.alpha + self.beta - 1

    def swapped(self) -> 'Params':
        return Params(self.beta, self.alpha, strict=False)

    def shifted(self, dalpha: float, dbeta: float, strict: bool = True) -> 'Params':
        return Params(self.alpha + dalpha, self.beta + dbeta, strict=strict)

    def flipped(self) -> 'Params':
        """(alpha, beta) -> (-alpha - 1, 1 - beta), the map carrying negative-index solutions to positive ones."""
        return Params(-self.alpha - 1, 1 - self.beta, strict=False)


def pochhammer(x: Number, k: int) -> Number:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    result = 1
    for j in range(k):
        result *= x + j
    return result


_LANCZOS_G = 7
_LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2 * math.pi)
_LOG_PI = math.log(math.pi)


def log_gamma(x: Number) -> complex:
    x = complex(x)
    if is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at {x}")
    if x.real < 0.5:
        return _LOG_PI - cmath.log(cmath.sin(math.pi * x)) - log_gamma(1 - x)
    x -= 1
    series = _LANCZOS_COEFFICIENTS[0]
    for i, coefficient in enumerate(_LANCZOS_COEFFICIENTS[1:], start=1):
        series += coefficient / (x + i)
    t = x + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (x + 0.5) * cmath.log(t) - t + cmath.log(series)


def gamma(x: Number) -> complex:
    return cmath.exp(log_gamma(x))


def gamma_ratio(numerators: Sequence[Number], denominators: Sequence[Number]) -> complex:
    """Π Γ(numerators) / Π Γ(denominators) through log-gamma differences.

    A denominator sitting on a pole makes the ratio vanish (1/Γ is entire)."""
    if any(is_nonpositive_integer(d) for d in denominators):
        for x in numerators:
            if is_nonpositive_integer(x):
                raise PoleError(f"indeterminate gamma ratio, numerator pole at {x}")
        return 0j
    total = 0j
    for x in numerators:
        total += log_gamma(x)
    for x in denominators:
        total -= log_gamma(x)
    return cmath.exp(total)


def cpow(base, exponent: Number):
    """Principal-branch power; accepts scalars and numpy arrays."""
    if isinstance(base, np.ndarray):
        return np.exp(exponent * np.log(base.astype(complex)))
    base = complex(base)
    if base.imag == 0:
        base = complex(base.real, 0.0)
    if base == 0:
        if complex(exponent).real > 0:
            return 0j
        raise DomainError(f"0 ** {exponent} is not defined")
    return cmath.exp(exponent * cmath.log(base))


def hyp2f1_terminating(n: int, b: Number, c: Number, z: Number) -> complex:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    term = 1 + 0j
    total = term
    for k in range(n):
        numerator = (k - n) * (b + k)
        if abs(c + k) <= POLE_TOLERANCE:
            if term * numerator != 0:
                raise DegenerateParameterError(f"(c)_{k + 1} vanishes for c = {c}")
            break
        term *= numerator / ((c + k) * (k + 1)) * z
        total += term
    return total


def hyp2f1_series(a: Number, b: Number, c: Number, z: Number,
                  tol: float = SERIES_TOLERANCE, max_terms: int = SERIES_MAX_TERMS) -> complex:
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError(f"2F1 power series needs |z| < 1, got |z| = {abs(z)}")
    if is_nonpositive_integer(c):
        raise DomainError(f"c = {c} is a non-positive integer")
    trusted_from = max(abs(a), abs(b), abs(c)) + 1
    term = 1 + 0j
    total = term
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if term == 0:
            return total
        if k + 1 < trusted_from:
            continue
        # ratios are monotone past the parameters, so max(next ratio, |z|) bounds the tail
        ratio = abs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2)) * z)
        ratio = max(ratio, abs(z))
        if ratio < 1 and abs(term) * ratio / (1 - ratio) <= tol * abs(total):
            return total
    raise ConvergenceError(f"2F1({a}, {b}; {c}; {z}) did not converge in {max_terms} terms")


def nonpositive_integer_value(x: Number):
    if is_nonpositive_integer(x):
        return int(round(-complex(x).real))
    return None


def hyp2f1(a: Number, b: Number, c: Number, z: Number, tol: float = SERIES_TOLERANCE) -> complex:
    """Terminating sum when a or b is a non-positive integer (any z), power series otherwise."""
    n = nonpositive_integer_value(a)
    if n is not None:
        return hyp2f1_terminating(n, b, c, z)
    n = nonpositive_integer_value(b)
    if n is not None:
        return hyp2f1_terminating(n, a, c, z)
    return hyp2f1_series(a, b, c, z, tol)
