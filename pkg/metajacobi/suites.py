import cmath
import dataclasses
import logging
import math
from enum import Enum
from typing import Callable, List, Optional, Dict

import numpy as np

from .algebra import (
    Relation, relation_residual, bispectral_residual, contiguity_residual, gevp_hypergeometric_residual,
    KummerTag, kummer_solution, kummer_u4_alternate,
)
from .errors import NumericError, ParameterError
from .identities import IdentityTag, identity_residual, sample_points
from .poly import askey_p, askey_q, jacobi_phat, eval_poly, askey_p_by_recurrence
from .quadrature import (
    QuadratureSpec, DEFAULT_QUADRATURE, MatrixKind, orthogonality_reports, contour_prefactor,
)
from .quadrature.spec import ROUNDING_FLOOR, DIAGONAL_TOL
from .repmod import (
    ModuleTag, ModuleVector, act, pairing, pairing_scale, gevp_p_coeffs, gevp_q_coeffs, evp_j_coeffs,
    biorth_norm, negative_index_coeffs, negative_index_norm, TruncatedRelation, truncated_relation_residual,
    OverlapKind, SplitKind, overlap, overlap_closed_form, jacobi_overlap_normalization, transpose_consistency,
    GaugeChoice, D0Rule, NegativeKind,
)
from .scalar import Params, pochhammer

logger = logging.getLogger(__name__)

ALGEBRA_TOL = 1e-12
RECURRENCE_TOL = 1e-11
MODULE_TOL = 1e-11
OVERLAP_TOL = 1e-10
IDENTITY_TOL = 1e-10
FLIP_TOL = 1e-12

BISPECTRAL_NMAX = 20
MODULE_NMAX = 12
MODULE_K = 30
BIORTH_NMAX = 8
JACOBI_NMAX = 6
NEGATIVE_MAX = 6


@dataclasses.dataclass(frozen=True)
class Check:
    name: str
    residual: Optional[float]
    tolerance: float
    passed: bool
    error: Optional[str] = None

    def to_dict(self) -> dict:
        result = {'name': self.name, 'residual': self.residual, 'tolerance': self.tolerance, 'pass': self.passed}
        if self.error is not None:
            result['error'] = self.error
        return result


@dataclasses.dataclass(frozen=True)
class Report:
    suite: str
    params: Params
    checks: List[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            'schema': 1,
            'suite': self.suite,
            'params': {'alpha': self.params.alpha, 'beta': self.params.beta},
            'checks': [c.to_dict() for c in self.checks],
            'pass': self.passed,
        }


def _measure(name: str, tolerance: float, residual: Callable[[], float]) -> Check:
    try:
        value = float(residual())
    except (NumericError, ParameterError) as e:
        logger.debug("check %s raised %s", name, e)
        return Check(name, None, tolerance, False, f"{type(e).__name__}: {e}")
    return Check(name, value, tolerance, math.isfinite(value) and value <= tolerance)


class Suite(Enum):
    ALGEBRA = 'algebra'
    BISPECTRAL = 'bispectral'
    MODULE = 'module'
    BIORTH = 'biorth'
    JACOBI = 'jacobi'
    KUMMER = 'kummer'
    NEGATIVE_INDEX = 'negative-index'
    ALL = 'all'


@dataclasses.dataclass(frozen=True)
class Context:
    params: Params
    spec: QuadratureSpec = DEFAULT_QUADRATURE
    parallelism: Optional[int] = None


def _algebra(ctx: Context) -> List[Check]:
    p = ctx.params
    checks = [_measure(r.value, ALGEBRA_TOL, lambda r=r: relation_residual(r, p)) for r in Relation]
    for n in range(6):
        checks.append(_measure(f"GEVP_HYPERGEOMETRIC[{n}]", ALGEBRA_TOL,
                               lambda n=n: gevp_hypergeometric_residual(n, p)))
        checks.append(_measure(f"GEVP_HYPERGEOMETRIC_ADJOINT[{n}]", ALGEBRA_TOL,
                               lambda n=n: gevp_hypergeometric_residual(n, p, adjoint=True)))
    return checks


def _recurrence_agreement(p: Params) -> float:
    z = np.exp(2j * np.pi * np.arange(64) / 64)
    worst = 0.0
    for n in range(BISPECTRAL_NMAX + 1):
        series = eval_poly(askey_p(n, p), z)
        worst = max(worst, float(np.max(np.abs(askey_p_by_recurrence(n, p, z) - series) / (1 + np.abs(series)))))
    return worst


def _bispectral(ctx: Context) -> List[Check]:
    p = ctx.params
    return [
        _measure("BISPECTRAL", RECURRENCE_TOL,
                 lambda: max(bispectral_residual(n, p) for n in range(BISPECTRAL_NMAX + 1))),
        _measure("CONTIGUITY", RECURRENCE_TOL,
                 lambda: max(contiguity_residual(n, p) for n in range(BISPECTRAL_NMAX + 1))),
        _measure("RECURRENCE_AGREEMENT", RECURRENCE_TOL, lambda: _recurrence_agreement(p)),
    ]


def _relative_defect(u: ModuleVector, v: ModuleVector, expected: complex) -> float:
    return abs(pairing(u, v) - expected) / (1 + pairing_scale(u, v))


def _biorthogonality_sum(p: Params) -> float:
    worst = 0.0
    for n in range(MODULE_NMAX + 1):
        pn = gevp_p_coeffs(n, p)
        for m in range(MODULE_NMAX + 1):
            qm = act(ModuleTag.LT, gevp_q_coeffs(m, p, lmax=n + 2), p)
            worst = max(worst, _relative_defect(pn, qm, (n + p.alpha + 1) if n == m else 0))
    return worst


def _evp_orthogonality(p: Params) -> float:
    worst = 0.0
    for n in range(MODULE_NMAX + 1):
        jn = evp_j_coeffs(n, p)
        for m in range(MODULE_NMAX + 1):
            jm = evp_j_coeffs(m, p, dual=True, lmax=n + 2)
            worst = max(worst, _relative_defect(jn, jm, biorth_norm(n, p, jacobi=True) if n == m else 0))
    return worst


def _gevp_defining(p: Params) -> float:
    worst = 0.0
    for n in range(MODULE_NMAX + 1):
        v = gevp_p_coeffs(n, p)
        mv, lv = act(ModuleTag.M, v, p), act(ModuleTag.L, v, p)
        worst = max(worst, (mv - n * lv).max_abs() / (1 + mv.max_abs()))
    return worst


def _gevp_dual_interior(p: Params, lmax: int = 20) -> float:
    """Mᵀ Q_m - m Lᵀ Q_m away from the truncation index m+lmax+1."""
    worst = 0.0
    for m in range(MODULE_NMAX + 1):
        v = gevp_q_coeffs(m, p, lmax=lmax)
        mv, lv = act(ModuleTag.MT, v, p), act(ModuleTag.LT, v, p)
        defect = mv - m * lv
        interior = max((abs(c) for k, c in defect.items() if k != m + lmax + 1), default=0.0)
        worst = max(worst, interior / (1 + mv.max_abs()))
    return worst


def _circle_points(count: int = 32) -> np.ndarray:
    return np.exp(2j * np.pi * (np.arange(count) + 0.5) / count)


def term_scale(v: ModuleVector, z: complex) -> float:
    """Σ |v(k)| |z-1|^k, the magnitude of the summands of a polynomial overlap."""
    u = abs(z - 1)
    return math.fsum(abs(c) * u ** k for k, c in v.items())


def _polynomial_overlaps(p: Params) -> float:
    worst = 0.0
    for n in range(MODULE_NMAX + 1):
        askey, jacobi = askey_p(n, p), jacobi_phat(n, p)
        d, f = gevp_p_coeffs(n, p), evp_j_coeffs(n, p)
        normalization = jacobi_overlap_normalization(n, p)
        for z in _circle_points():
            expected = eval_poly(askey, z)
            scale = max(abs(expected), term_scale(d, z))
            worst = max(worst, abs(overlap(OverlapKind.P, n, z, p) - expected) / (1 + scale))
            expected = eval_poly(jacobi, z)
            scale = max(abs(expected), term_scale(f, z) / abs(normalization))
            got = overlap(OverlapKind.J, n, z, p) / normalization
            worst = max(worst, abs(got - expected) / (1 + scale))
    return worst


def split_points(count: int = 8) -> List[complex]:
    """Points with |z| < 1 and |1 - z| > 1, where both the dual series and the split forms apply."""
    return [cmath.rect(0.6, math.pi * (0.7 + 0.6 * j / (count - 1))) for j in range(count)]


def _split_agreement(p: Params, kind: OverlapKind, split: SplitKind) -> float:
    worst = 0.0
    for m in range(6):
        for z in split_points():
            series = overlap(kind, m, z, p)
            regular, weighted = overlap_closed_form(split, m, z, p)
            scale = max(abs(series), abs(regular) + abs(weighted))
            worst = max(worst, abs(series - (regular + weighted)) / (1 + scale))
    return worst


def _module(ctx: Context) -> List[Check]:
    p = ctx.params
    checks = [
        _measure("BIORTHOGONALITY_SUM", MODULE_TOL, lambda: _biorthogonality_sum(p)),
        _measure("EVP_ORTHOGONALITY", MODULE_TOL, lambda: _evp_orthogonality(p)),
        _measure("GEVP_DEFINING", MODULE_TOL, lambda: _gevp_defining(p)),
        _measure("GEVP_DUAL_INTERIOR", MODULE_TOL, lambda: _gevp_dual_interior(p)),
    ]
    checks += [_measure(f"TRUNCATED_{r.value}", MODULE_TOL, lambda r=r: truncated_relation_residual(r, MODULE_K, p))
               for r in TruncatedRelation]
    checks += [
        _measure("TRANSPOSE_CONSISTENCY", MODULE_TOL, lambda: transpose_consistency(5, p)),
        _measure("OVERLAP_POLYNOMIALS", MODULE_TOL, lambda: _polynomial_overlaps(p)),
        _measure("OVERLAP_QLT_SPLIT", OVERLAP_TOL, lambda: _split_agreement(p, OverlapKind.QLT, SplitKind.QLT_SPLIT)),
        _measure("OVERLAP_JTILDE_SPLIT", OVERLAP_TOL,
                 lambda: _split_agreement(p, OverlapKind.JTILDE, SplitKind.JTILDE_SPLIT)),
    ]
    return checks


def _failed(name: str, e: Exception) -> Check:
    return Check(name, None, 0.0, False, f"{type(e).__name__}: {e}")


def _report_checks(prefix: str, reports) -> List[Check]:
    return [Check(f"{prefix}[{r.m},{r.n}]", r.rel_residual, max(r.tolerance, ROUNDING_FLOOR * r.condition), r.passed)
            for r in reports]


def _biorth(ctx: Context) -> List[Check]:
    try:
        reports = orthogonality_reports(MatrixKind.BIORTH, BIORTH_NMAX, ctx.params, ctx.spec, ctx.parallelism)
    except (NumericError, ParameterError) as e:
        return [_failed("BIORTH", e)]
    return _report_checks("BIORTH", reports)


def _jacobi(ctx: Context) -> List[Check]:
    prefactor = _measure("CONTOUR_PREFACTOR", 1e-14, lambda: abs(contour_prefactor(ctx.params.beta) - 1))
    try:
        circle = orthogonality_reports(MatrixKind.JACOBI_CIRCLE, JACOBI_NMAX, ctx.params, ctx.spec, ctx.parallelism)
        interval = orthogonality_reports(MatrixKind.JACOBI_INTERVAL, JACOBI_NMAX, ctx.params, ctx.spec,
                                         ctx.parallelism)
    except (NumericError, ParameterError) as e:
        return [_failed("JACOBI", e), prefactor]
    checks = _report_checks("JACOBI_CIRCLE", circle) + _report_checks("JACOBI_INTERVAL", interval)
    for c, i in zip(circle, interval):
        checks.append(_measure(f"CONTOUR_EQUIVALENCE[{c.m},{c.n}]", max(DIAGONAL_TOL, ROUNDING_FLOOR * c.condition),
                               lambda c=c, i=i: abs(c.computed - i.computed) / c.reference))
    checks.append(prefactor)
    return checks


def _kummer_checks(p: Params) -> Dict[str, Callable[[], float]]:
    a, b = p.alpha, p.beta
    z = -1.0

    def u4_forms() -> float:
        worst = 0.0
        for m in range(6):
            u4 = kummer_solution(KummerTag.U4, m + 1, 1 - a, m + b + 2, z)
            alternate = kummer_u4_alternate(m + 1, 1 - a, m + b + 2, z)
            weighted = (pochhammer(b + 1, m) / pochhammer(a, m) * (-z) ** (-1 - b) * (1 - z) ** (a + b)
                        * eval_poly(askey_q(m, p), 1 / z))
            worst = max(worst, abs(u4 - alternate) / (1 + abs(alternate)),
                        abs(alternate - weighted) / (1 + abs(weighted)))
        return worst

    def u1_askey() -> float:
        worst = 0.0
        for n in range(6):
            for w in (0.3 + 0.4j, -0.5, 0.2j):
                u1 = kummer_solution(KummerTag.U1, -n, a + 1, 1 - n - b, w)
                expected = eval_poly(askey_p(n, p), w) * pochhammer(a + 1, n) / pochhammer(b, n)
                worst = max(worst, abs(u1 - expected) / (1 + abs(expected)))
        return worst

    return {'KUMMER_U4_FORMS': u4_forms, 'KUMMER_U1_ASKEY': u1_askey}


def _kummer(ctx: Context) -> List[Check]:
    p = ctx.params

    def sampled(tag: IdentityTag) -> float:
        return max(identity_residual(tag, p, aux) for aux in sample_points(tag, p, 20))

    checks = [_measure(tag.value, IDENTITY_TOL, lambda tag=tag: sampled(tag)) for tag in IdentityTag]
    checks += [_measure(name, IDENTITY_TOL, fn) for name, fn in _kummer_checks(p).items()]
    return checks


def _relative_gap(u: ModuleVector, v: ModuleVector) -> float:
    keys = set(u.support) | set(v.support)
    return max((abs(u[k] - v[k]) / (1 + abs(v[k])) for k in keys), default=0.0)


def _reflected(v: ModuleVector) -> ModuleVector:
    # k = -s-1-l maps to k = s+l
    return ModuleVector({-k - 1: c for k, c in v.items()})


def _negative_flip_p(p: Params) -> float:
    flipped = p.flipped()
    lmax = NEGATIVE_MAX + 2
    worst = 0.0
    for s in range(NEGATIVE_MAX):
        oracle = gevp_q_coeffs(s, flipped, lmax=lmax)
        reflected = _reflected(negative_index_coeffs(-s - 1, NegativeKind.P, p, lmax))
        worst = max(worst, _relative_gap(reflected, oracle))
    return worst


def _negative_flip_q(p: Params) -> float:
    flipped = p.flipped()
    unit = GaugeChoice(d_n0_rule=D0Rule.UNIT)
    worst = 0.0
    for s in range(NEGATIVE_MAX):
        oracle = gevp_p_coeffs(s, flipped, unit)
        worst = max(worst, _relative_gap(_reflected(negative_index_coeffs(-s - 1, NegativeKind.Q, p)), oracle))
    return worst


def _indices():
    return list(range(-NEGATIVE_MAX, 0)) + list(range(NEGATIVE_MAX + 1))


def _negative_pairings(p: Params) -> float:
    lmax = 2 * NEGATIVE_MAX + 2
    worst = 0.0
    for n in _indices():
        left = negative_index_coeffs(n, NegativeKind.P, p, lmax) if n < 0 else gevp_p_coeffs(n, p)
        for m in _indices():
            right = negative_index_coeffs(m, NegativeKind.Q, p) if m < 0 else gevp_q_coeffs(m, p, lmax=lmax)
            right = act(ModuleTag.LT, right, p)
            if n != m:
                expected = 0
            elif n < 0:
                expected = negative_index_norm(n, p)
            else:
                expected = biorth_norm(n, p)
            worst = max(worst, _relative_defect(left, right, expected))
    return worst


def _negative_index(ctx: Context) -> List[Check]:
    p = ctx.params
    checks = [_measure("NEGATIVE_FLIP_P", FLIP_TOL, lambda: _negative_flip_p(p))]
    try:
        p.flipped().check()
    except ParameterError as e:
        logger.warning("skipping the Q-side negative-index checks: flipped parameters are not generic (%s)", e)
        return checks
    checks += [
        _measure("NEGATIVE_FLIP_Q", FLIP_TOL, lambda: _negative_flip_q(p)),
        _measure("NEGATIVE_PAIRINGS", FLIP_TOL, lambda: _negative_pairings(p)),
    ]
    return checks


_SUITES: Dict[Suite, Callable[[Context], List[Check]]] = {
    Suite.ALGEBRA: _algebra,
    Suite.BISPECTRAL: _bispectral,
    Suite.MODULE: _module,
    Suite.BIORTH: _biorth,
    Suite.JACOBI: _jacobi,
    Suite.KUMMER: _kummer,
    Suite.NEGATIVE_INDEX: _negative_index,
}


def run_suite(suite: Suite, params: Params, spec: QuadratureSpec = DEFAULT_QUADRATURE,
              parallelism: Optional[int] = None) -> Report:
    ctx = Context(params, spec, parallelism)
    if suite is not Suite.ALL:
        logger.debug("running suite %s", suite.value)
        return Report(suite.value, params, _SUITES[suite](ctx))
    checks = []
    for part, run in _SUITES.items():
        logger.debug("running suite %s", part.value)
        checks += [dataclasses.replace(c, name=f"{part.value}/{c.name}") for c in run(ctx)]
    return Report(suite.value, params, checks)
