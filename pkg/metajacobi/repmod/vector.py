import math
from types import MappingProxyType
from typing import Mapping, Optional, Tuple, Iterator

PRUNE_THRESHOLD = 1e-15


class ModuleVector:
    """Finitely supported coefficients v(k) over the basis |τ,k⟩, k ∈ ℤ."""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Optional[Mapping[int, complex]] = None):
        cleaned = {}
        for k, c in (coeffs or {}).items():
            c = complex(c)
            if abs(c) >= PRUNE_THRESHOLD:
                cleaned[int(k)] = c
        self._coeffs = MappingProxyType(dict(sorted(cleaned.items())))

    @staticmethod
    def basis(k: int) -> 'ModuleVector':
        return ModuleVector({k: 1})

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self._coeffs)

    def items(self) -> Iterator[Tuple[int, complex]]:
        return iter(self._coeffs.items())

    def __getitem__(self, k: int) -> complex:
        return self._coeffs.get(k, 0j)

    def __len__(self):
        return len(self._coeffs)

    def __add__(self, other: 'ModuleVector') -> 'ModuleVector':
        out = dict(self._coeffs)
        for k, c in other.items():
            out[k] = out.get(k, 0j) + c
        return ModuleVector(out)

    def __neg__(self) -> 'ModuleVector':
        return ModuleVector({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: 'ModuleVector') -> 'ModuleVector':
        return self + (-other)

    def __mul__(self, scalar: complex) -> 'ModuleVector':
        return ModuleVector({k: c * scalar for k, c in self._coeffs.items()})

    __rmul__ = __mul__

    def max_abs(self) -> float:
        return max((abs(c) for c in self._coeffs.values()), default=0.0)

    def __repr__(self):
        return f"ModuleVector({dict(self._coeffs)})"


def _common(u: ModuleVector, v: ModuleVector):
    return sorted(set(u.support) & set(v.support))


def pairing(u: ModuleVector, v: ModuleVector) -> complex:
    """Bilinear Σ_k u(k) v(k), no conjugation."""
    products = [u[k] * v[k] for k in _common(u, v)]
    return complex(math.fsum(p.real for p in products), math.fsum(p.imag for p in products))


def pairing_scale(u: ModuleVector, v: ModuleVector) -> float:
    return math.fsum(abs(u[k] * v[k]) for k in _common(u, v))
