import cmath
import logging
import math
from concurrent import futures
from enum import Enum
from typing import List, Optional

import numpy as np

from .rules import circle_rule, interval_rule
from .spec import QuadratureSpec, DEFAULT_QUADRATURE, OrthogonalityReport
from ..config import default_parallelism
from ..errors import DomainError
from ..poly import askey_p, askey_q, jacobi_phat, eval_poly
from ..scalar import Params, gamma_ratio, cpow, is_integer

logger = logging.getLogger(__name__)


def h_norm(n: int, params: Params) -> float:
    """n!Γ(n-β+1)Γ(n+α+1)Γ(n+α+β+1) / (Γ(2n+α+1)Γ(2n+α+2))."""
    a, b = params.alpha, params.beta
    return gamma_ratio([n + 1, n - b + 1, n + a + 1, n + a + b + 1], [2 * n + a + 1, 2 * n + a + 2]).real


def askey_norm(n: int, params: Params) -> float:
    """n!Γ(n+α+β+1) / (Γ(n+α+1)Γ(n+β+1))."""
    a, b = params.alpha, params.beta
    return gamma_ratio([n + 1, n + a + b + 1], [n + a + 1, n + b + 1]).real


def _report(m: int, n: int, computed: complex, norm, magnitude: float) -> OrthogonalityReport:
    expected = norm(n) if m == n else 0.0
    reference = abs(expected) if m == n else math.sqrt(abs(norm(m) * norm(n)))
    return OrthogonalityReport.build(m, n, computed, expected, reference, magnitude)


def _check_indices(m: int, n: int):
    if m < 0 or n < 0:
        raise ValueError(f"indices must be non-negative, got ({m}, {n})")


def _check_circle_domain(params: Params):
    if params.alpha + params.beta <= -1:
        raise DomainError(f"the weight needs alpha + beta > -1, got {params.alpha + params.beta}")


def _check_jacobi_domain(params: Params):
    _check_circle_domain(params)
    if params.beta >= 1 or is_integer(params.beta):
        raise DomainError(f"the Jacobi weight needs a non-integer beta < 1, got {params.beta}")


def verify_askey_biorthogonality(m: int, n: int, params: Params,
                                 spec: QuadratureSpec = DEFAULT_QUADRATURE) -> OrthogonalityReport:
    """-(1/2πi)∮ (-z)^{-1-β}(1-z)^{α+β} P_m(z) Q_n(1/z) dz against the Askey norm."""
    _check_indices(m, n)
    _check_circle_domain(params)
    a, b = params.alpha, params.beta
    p, q = askey_p(m, params), askey_q(n, params)

    def integrand(z):
        return cpow(-z, -1 - b) * cpow(1 - z, a + b) * eval_poly(p, z) * eval_poly(q, 1 / z)

    result = circle_rule(integrand, spec)
    return _report(m, n, -result.value, lambda k: askey_norm(k, params), result.magnitude)


def verify_jacobi_circle(m: int, n: int, params: Params,
                         spec: QuadratureSpec = DEFAULT_QUADRATURE) -> OrthogonalityReport:
    """-(π/sin πβ)(1/2πi)∮ (-z)^{-β}(1-z)^{α+β} P̂_m(z) P̂_n(z) dz against h_n."""
    _check_indices(m, n)
    _check_jacobi_domain(params)
    a, b = params.alpha, params.beta
    pm, pn = jacobi_phat(m, params), jacobi_phat(n, params)

    def integrand(z):
        return cpow(-z, -b) * cpow(1 - z, a + b) * eval_poly(pm, z) * eval_poly(pn, z)

    factor = -math.pi / math.sin(math.pi * b)
    result = circle_rule(integrand, spec)
    return _report(m, n, factor * result.value, lambda k: h_norm(k, params), abs(factor) * result.magnitude)


def verify_jacobi_interval(m: int, n: int, params: Params,
                           spec: QuadratureSpec = DEFAULT_QUADRATURE) -> OrthogonalityReport:
    """∫_0^1 x^{-β}(1-x)^{α+β} P̂_m(x) P̂_n(x) dx against h_n."""
    _check_indices(m, n)
    _check_jacobi_domain(params)
    a, b = params.alpha, params.beta
    pm, pn = jacobi_phat(m, params), jacobi_phat(n, params)

    def integrand(x):
        return eval_poly(pm, x) * eval_poly(pn, x)

    result = interval_rule(integrand, spec, exponents=(-b, a + b))
    return _report(m, n, result.value, lambda k: h_norm(k, params), result.magnitude)


def contour_prefactor(beta: float) -> complex:
    """e^{iπβ}(1 - e^{-2πiβ}) / (2i sin πβ); identically 1 away from integer β."""
    return (cmath.exp(1j * math.pi * beta) * (1 - cmath.exp(-2j * math.pi * beta))
            / (2j * math.sin(math.pi * beta)))


def contour_equivalence(m: int, n: int, params: Params, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """|circle form - interval form| of the (m, n) Jacobi integral."""
    circle = verify_jacobi_circle(m, n, params, spec)
    interval = verify_jacobi_interval(m, n, params, spec)
    return abs(circle.computed - interval.computed)


class MatrixKind(Enum):
    BIORTH = 'biorth'
    JACOBI_CIRCLE = 'jacobi-circle'
    JACOBI_INTERVAL = 'jacobi-interval'


_VERIFIERS = {
    MatrixKind.BIORTH: verify_askey_biorthogonality,
    MatrixKind.JACOBI_CIRCLE: verify_jacobi_circle,
    MatrixKind.JACOBI_INTERVAL: verify_jacobi_interval,
}


def orthogonality_reports(kind: MatrixKind, nmax: int, params: Params, spec: QuadratureSpec = DEFAULT_QUADRATURE,
                          parallelism: Optional[int] = None) -> List[OrthogonalityReport]:
    """Reports for all 0 <= m, n <= nmax in row-major order."""
    if nmax < 0:
        raise ValueError(f"nmax must be non-negative, got {nmax}")
    verifier = _VERIFIERS[kind]
    pairs = [(m, n) for m in range(nmax + 1) for n in range(nmax + 1)]

    def worker(pair):
        logger.debug("%s entry %s", kind.value, pair)
        return verifier(pair[0], pair[1], params, spec)

    with futures.ThreadPoolExecutor(max_workers=parallelism or default_parallelism()) as pool:
        return list(pool.map(worker, pairs))


def orthogonality_matrix(kind: MatrixKind, nmax: int, params: Params, spec: QuadratureSpec = DEFAULT_QUADRATURE,
                         parallelism: Optional[int] = None) -> np.ndarray:
    reports = orthogonality_reports(kind, nmax, params, spec, parallelism)
    return np.array([r.computed for r in reports]).reshape(nmax + 1, nmax + 1)
