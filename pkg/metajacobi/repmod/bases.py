import dataclasses
from enum import Enum
from typing import Callable, Dict

from .vector import ModuleVector
from ..errors import ParameterError, DegenerateParameterError
from ..scalar import Params, pochhammer, POLE_TOLERANCE

DEFAULT_LMAX = 400


class NegativeKind(Enum):
    P = 'P'
    Q = 'Q'


class D0Rule(Enum):
    POCHHAMMER_RATIO = 'POCHHAMMER_RATIO'
    """d_n(0) = (α+β+1)_n / (α+1)_n, which makes the P overlap the monic Askey polynomial."""
    UNIT = 'UNIT'


@dataclasses.dataclass(frozen=True)
class GaugeChoice:
    gamma: complex = 1
    gamma_tilde: complex = 1
    a: float = 1
    a_tilde: float = 0
    d_n0_rule: D0Rule = D0Rule.POCHHAMMER_RATIO
    dstar_mm: complex = 1
    f_n0: complex = 1
    ftilde_nn: complex = 1

    def __post_init__(self):
        if abs(self.a - self.a_tilde - 1) > POLE_TOLERANCE:
            raise ParameterError(f"gauge needs a = a_tilde + 1, got a = {self.a}, a_tilde = {self.a_tilde}")

    def d_n0(self, n: int, params: Params) -> complex:
        if self.d_n0_rule is D0Rule.UNIT:
            return 1
        return checked_ratio(pochhammer(params.alpha + params.beta + 1, n), pochhammer(params.alpha + 1, n))


DEFAULT_GAUGE = GaugeChoice()


def checked_ratio(numerator: complex, denominator: complex) -> complex:
    if abs(denominator) <= POLE_TOLERANCE:
        raise DegenerateParameterError(f"vanishing denominator in {numerator} / {denominator}")
    return numerator / denominator


Step = Callable[[int], complex]


def _walk(start: int, first: complex, count: int, direction: int, step: Step) -> ModuleVector:
    """Coefficients v(start + direction*l) for l = 0..count, v(start) = first, v(next) = step(l) * v(previous)."""
    coeffs: Dict[int, complex] = {start: first}
    value = first
    for l in range(1, count + 1):
        value = value * step(l)
        if value == 0:
            break
        coeffs[start + direction * l] = value
    return ModuleVector(coeffs)


def _check_index(index: int):
    if index < 0:
        raise ValueError(f"index must be non-negative, got {index}")


def gevp_p_coeffs(n: int, params: Params, gauge: GaugeChoice = DEFAULT_GAUGE) -> ModuleVector:
    """Solution of M d = n L d supported on {0..n}."""
    _check_index(n)
    a, b = params.alpha, params.beta

    def step(l: int) -> complex:
        k = l - 1
        return checked_ratio(-(k - n) * (k + a + 1), (k + 1) * (k + a + b + 1))

    return _walk(0, gauge.d_n0(n, params), n, 1, step)


def gevp_q_coeffs(m: int, params: Params, gauge: GaugeChoice = DEFAULT_GAUGE,
                  lmax: int = DEFAULT_LMAX) -> ModuleVector:
    """Solution of Mᵀ d* = m Lᵀ d* supported on {m..m+lmax}."""
    _check_index(m)
    if lmax < 0:
        raise ValueError(f"lmax must be non-negative, got {lmax}")
    a, b = params.alpha, params.beta

    def step(l: int) -> complex:
        return checked_ratio(-(m + l) * (m + l + a + b), l * (m + l + a + 1))

    return _walk(m, gauge.dstar_mm, lmax, 1, step)


def evp_j_coeffs(n: int, params: Params, dual: bool = False, lmax: int = DEFAULT_LMAX,
                 gauge: GaugeChoice = DEFAULT_GAUGE) -> ModuleVector:
    """Eigenvectors of M (support {0..n}) or of Mᵀ (dual, support {n..n+lmax}) for μ_n = n(n+α+1)."""
    _check_index(n)
    a, b = params.alpha, params.beta
    if not dual:
        def step(l: int) -> complex:
            k = l - 1
            return checked_ratio(-(k - n) * (k + n + a + 1), (k + 1) * (k + a + b + 1))

        return _walk(0, gauge.f_n0, n, 1, step)

    def dual_step(l: int) -> complex:
        return checked_ratio(-(n + l) * (n + l + a + b), l * (l + 2 * n + a + 1))

    return _walk(n, gauge.ftilde_nn, lmax, 1, dual_step)


def negative_index_coeffs(index: int, kind: NegativeKind, params: Params,
                          lmax: int = DEFAULT_LMAX) -> ModuleVector:
    """GEVP solutions for index = -s-1 < 0.

    P runs downward from k = index with lmax further terms; Q is normalized to 1 at k = -1
    and terminates at k = index."""
    if index > -1:
        raise ValueError(f"index must be negative, got {index}")
    kind = NegativeKind(kind)
    s = -index - 1
    a, b = params.alpha, params.beta
    if kind is NegativeKind.P:
        def step(l: int) -> complex:
            return checked_ratio(-(s + l) * (s + l - a - b), l * (s + l - a))

        return _walk(index, 1, lmax, -1, step)
    params.flipped().check()

    def q_step(l: int) -> complex:
        j = l - 1
        return checked_ratio(-(j - s) * (j - a), (j + 1) * (j - a - b + 1))

    return _walk(-1, 1, s, -1, q_step)


def negative_index_norm(index: int, params: Params) -> complex:
    """pairing(P_index, Lᵀ Q_index) for index = -s-1: (index+α+1)(-α)_s/(1-α-β)_s."""
    if index > -1:
        raise ValueError(f"index must be negative, got {index}")
    params.flipped().check()
    s = -index - 1
    a, b = params.alpha, params.beta
    return (index + a + 1) * checked_ratio(pochhammer(-a, s), pochhammer(1 - a - b, s))


def biorth_norm(n: int, params: Params, gauge: GaugeChoice = DEFAULT_GAUGE, jacobi: bool = False) -> complex:
    """N_n = pairing(P_n, Lᵀ Q_n), or with jacobi=True 𝒩_n = pairing(J_n, J̃_n)."""
    _check_index(n)
    a, b = params.alpha, params.beta
    if jacobi:
        return gauge.f_n0 * gauge.ftilde_nn * checked_ratio(pochhammer(n + a + 1, n), pochhammer(a + b + 1, n))
    return gauge.d_n0(n, params) * gauge.dstar_mm * checked_ratio(pochhammer(a + 1, n + 1), pochhammer(a + b + 1, n))
