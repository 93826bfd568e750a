import math
from collections import defaultdict
from types import MappingProxyType
from typing import Mapping, Tuple, Optional, Union

import numpy as np

from ..errors import DegreeCapError
from ..poly import PolyCoeffs, falling_factorials

Term = Tuple[int, int]

DEGREE_CAP = 64
PRUNE_THRESHOLD = 1e-15
EQUALITY_TOLERANCE = 1e-12


class DiffOp:
    """Σ c_{p,q} z^p ∂^q in normal order: every power of z stands left of every derivative."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[Term, complex]] = None):
        cleaned = {}
        for (p, q), c in (terms or {}).items():
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent in term ({p}, {q})")
            c = complex(c)
            if abs(c) >= PRUNE_THRESHOLD:
                cleaned[(int(p), int(q))] = c
        self._terms = MappingProxyType(dict(sorted(cleaned.items())))

    @staticmethod
    def identity() -> 'DiffOp':
        return DiffOp({(0, 0): 1})

    @staticmethod
    def scalar(c: complex) -> 'DiffOp':
        return DiffOp({(0, 0): c})

    @staticmethod
    def z(p: int = 1) -> 'DiffOp':
        return DiffOp({(p, 0): 1})

    @staticmethod
    def d(q: int = 1) -> 'DiffOp':
        return DiffOp({(0, q): 1})

    @property
    def terms(self) -> Mapping[Term, complex]:
        return self._terms

    @property
    def order(self) -> int:
        return max((q for _, q in self._terms), default=0)

    @property
    def degree(self) -> int:
        return max((p for p, _ in self._terms), default=0)

    def max_abs(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def _combine(self, other: 'DiffOp', sign: int) -> 'DiffOp':
        out = defaultdict(complex, self._terms)
        for key, c in other.terms.items():
            out[key] += sign * c
        return DiffOp(out)

    def __add__(self, other: Union['DiffOp', complex]) -> 'DiffOp':
        if not isinstance(other, DiffOp):
            other = DiffOp.scalar(other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: Union['DiffOp', complex]) -> 'DiffOp':
        if not isinstance(other, DiffOp):
            other = DiffOp.scalar(other)
        return self._combine(other, -1)

    def __rsub__(self, other: complex) -> 'DiffOp':
        return DiffOp.scalar(other) - self

    def __neg__(self) -> 'DiffOp':
        return DiffOp({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar: complex) -> 'DiffOp':
        if isinstance(scalar, DiffOp):
            raise TypeError("use @ to compose operators")
        return DiffOp({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: 'DiffOp') -> 'DiffOp':
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return (self - other).max_abs() <= EQUALITY_TOLERANCE

    __hash__ = None

    def __repr__(self):
        return f"DiffOp({dict(self._terms)})"


def compose(a: DiffOp, b: DiffOp, cap: int = DEGREE_CAP) -> DiffOp:
    """Normal-ordered a∘b via ∂^q z^p = Σ_j C(q,j) p!/(p-j)! z^{p-j} ∂^{q-j}."""
    out = defaultdict(complex)
    for (p1, q1), c1 in a.terms.items():
        for (p2, q2), c2 in b.terms.items():
            if p1 + p2 > cap or q1 + q2 > cap:
                raise DegreeCapError(f"composition exceeds degree cap {cap}")
            for j in range(min(q1, p2) + 1):
                out[(p1 + p2 - j, q1 + q2 - j)] += c1 * c2 * math.comb(q1, j) * math.perm(p2, j)
    return DiffOp(out)


def bracket(a: DiffOp, b: DiffOp, anti: bool = False) -> DiffOp:
    if anti:
        return compose(a, b) + compose(b, a)
    return compose(a, b) - compose(b, a)


def apply_op(a: DiffOp, p: PolyCoeffs, cap: int = DEGREE_CAP) -> PolyCoeffs:
    degree = p.degree
    size = max((shift + degree - q for shift, q in a.terms), default=0)
    if size > cap:
        raise DegreeCapError(f"result degree {size} exceeds cap {cap}")
    out = np.zeros(max(size, 0) + 1, dtype=complex)
    for (shift, q), c in a.terms.items():
        if q > degree:
            continue
        # z^shift ∂^q z^j = j!/(j-q)! z^{j-q+shift}
        derived = p.coeffs[q:] * falling_factorials(degree, q)[q:]
        out[shift:shift + len(derived)] += c * derived
    return PolyCoeffs(out)


def formal_adjoint(a: DiffOp) -> DiffOp:
    """Σ c (-1)^q ∂^q ∘ z^p, the adjoint under ∫ f g dz."""
    result = DiffOp()
    for (p, q), c in a.terms.items():
        result = result + compose(DiffOp.d(q), DiffOp.z(p)) * (c * (-1) ** q)
    return result
