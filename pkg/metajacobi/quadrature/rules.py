import dataclasses
import functools
import logging
import math
from typing import Callable, Tuple

import numpy as np

from .spec import QuadratureSpec, DEFAULT_QUADRATURE
from ..errors import ConvergenceError

logger = logging.getLogger(__name__)

TANH_SINH_SPAN = 4.5

CircleIntegrand = Callable[[np.ndarray], np.ndarray]
IntervalIntegrand = Callable[[np.ndarray], np.ndarray]


@dataclasses.dataclass(frozen=True)
class QuadratureResult:
    value: complex
    magnitude: float
    """The same rule applied to |integrand|."""
    levels: int


@functools.lru_cache(maxsize=None)
def leggauss(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(nodes)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _fsum(values: np.ndarray) -> complex:
    return complex(math.fsum(values.real), math.fsum(values.imag))


def _graded_panels(levels: int) -> np.ndarray:
    # [π2^{-(j+1)}, π2^{-j}] for j < levels, then [0, π2^{-levels}]
    edges = math.pi * 2.0 ** -np.arange(levels + 1)
    return np.concatenate([[0.0], edges[::-1]])


def circle_nodes(levels: int, nodes_per_panel: int) -> Tuple[np.ndarray, np.ndarray]:
    """θ nodes and weights on (-π, π), graded dyadically toward θ = 0 from both sides."""
    x, w = leggauss(nodes_per_panel)
    edges = _graded_panels(levels)
    left, right = edges[:-1], edges[1:]
    half = (right - left)[:, None] / 2
    theta = (left[:, None] + right[:, None]) / 2 + half * x[None, :]
    weights = half * w[None, :]
    theta, weights = theta.ravel(), weights.ravel()
    # negative side in reverse so the summation runs from -π to π
    return np.concatenate([-theta[::-1], theta]), np.concatenate([weights[::-1], weights])


def circle_quadrature(f: CircleIntegrand, levels: int, nodes_per_panel: int) -> QuadratureResult:
    theta, weights = circle_nodes(levels, nodes_per_panel)
    z = np.exp(1j * theta)
    values = np.asarray(f(z), dtype=complex) * z * weights / (2 * math.pi)
    return QuadratureResult(_fsum(values), math.fsum(np.abs(values)), levels)


def circle_rule(f: CircleIntegrand, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> QuadratureResult:
    """(1/2πi)∮ f(z) dz over |z| = 1, refining the grading at z = 1 until two runs agree."""
    levels = spec.panels
    previous = circle_quadrature(f, levels, spec.nodes_per_panel)
    for refinement in range(1, spec.max_refinements + 1):
        levels *= 2
        current = circle_quadrature(f, levels, spec.nodes_per_panel)
        change = abs(current.value - previous.value)
        logger.debug("circle rule at %d levels: %s (change %.3g)", levels, current.value, change)
        if change <= spec.target_tol * max(current.magnitude, 1e-300):
            if refinement > 1:
                logger.warning("circle rule needed %d refinements", refinement)
            return current
        previous = current
    raise ConvergenceError(f"circle rule did not converge to {spec.target_tol} within "
                           f"{spec.max_refinements} refinements")


def circle_integral(f: CircleIntegrand, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> complex:
    return circle_rule(f, spec).value


def tanh_sinh_nodes(level: int, exponents: Tuple[float, float] = (0, 0)) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes x in (0, 1) and weights folding in x^p (1-x)^q for exponents = (p, q)."""
    h = 2.0 ** -level
    count = int(TANH_SINH_SPAN / h)
    t = h * np.arange(-count, count + 1)
    s = math.pi * np.sinh(t)
    x = 1 / (1 + np.exp(-s))
    xc = 1 / (1 + np.exp(s))
    p, q = exponents
    # x^p xc^q through logs: x underflows long before the weight does
    log_weight = (1 + p) * -np.logaddexp(0, -s) + (1 + q) * -np.logaddexp(0, s)
    weights = h * math.pi * np.cosh(t) * np.exp(log_weight)
    return x, weights


def interval_quadrature(g: IntervalIntegrand, level: int,
                        exponents: Tuple[float, float] = (0, 0)) -> QuadratureResult:
    x, weights = tanh_sinh_nodes(level, exponents)
    values = np.real(np.asarray(g(x), dtype=complex)) * weights
    return QuadratureResult(math.fsum(values), math.fsum(np.abs(values)), level)


def interval_rule(g: IntervalIntegrand, spec: QuadratureSpec = DEFAULT_QUADRATURE,
                  exponents: Tuple[float, float] = (0, 0)) -> QuadratureResult:
    """∫_0^1 x^p (1-x)^q g(x) dx by tanh-sinh with level doubling."""
    previous = interval_quadrature(g, 1, exponents)
    for level in range(2, spec.interval_levels + 1):
        current = interval_quadrature(g, level, exponents)
        change = abs(current.value - previous.value)
        logger.debug("tanh-sinh level %d: %.17g (change %.3g)", level, current.value.real, change)
        if level >= 3 and change <= spec.target_tol * max(current.magnitude, 1e-300):
            return current
        previous = current
    raise ConvergenceError(f"tanh-sinh rule did not converge to {spec.target_tol} by level {spec.interval_levels}")


def interval_integral(g: IntervalIntegrand, spec: QuadratureSpec = DEFAULT_QUADRATURE,
                      exponents: Tuple[float, float] = (0, 0)) -> float:
    return float(interval_rule(g, spec, exponents).value.real)
