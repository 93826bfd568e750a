import cmath
import dataclasses
import math
import random
from enum import Enum
from typing import Callable, Mapping, Any, Dict, List

from .errors import DomainError
from .scalar import (
    Params, pochhammer, log_gamma, gamma, gamma_ratio, cpow, hyp2f1_series, hyp2f1_terminating,
    nearest_integer_distance, is_integer,
)

Aux = Mapping[str, Any]


class IdentityTag(Enum):
    KUMMER1 = 'KUMMER1'
    LINEAR35 = 'LINEAR35'
    LINEAR34 = 'LINEAR34'
    PFAFF_Z = 'PFAFF_Z'
    PFAFF_RECIP = 'PFAFF_RECIP'
    GAMMA_REFLECTION = 'GAMMA_REFLECTION'
    GAMMA_USEFUL = 'GAMMA_USEFUL'
    PHASE_LITTLEID = 'PHASE_LITTLEID'
    VANDERMONDE = 'VANDERMONDE'


@dataclasses.dataclass(frozen=True)
class Identity:
    description: str
    lhs: Callable[[Params, Aux], complex]
    rhs: Callable[[Params, Aux], complex]
    region: Callable[[Params, Aux], bool]
    sample: Callable[[Params, random.Random], Dict[str, Any]]


def _generic_uniform(rng: random.Random, low: float, high: float, margin: float = 0.05) -> float:
    while True:
        x = rng.uniform(low, high)
        if nearest_integer_distance(x) > margin:
            return x


def _alpha(params: Params, aux: Aux) -> float:
    return aux.get('alpha', params.alpha)


def _beta(params: Params, aux: Aux) -> float:
    return aux.get('beta', params.beta)


# terminating: F(-n, b; c; z) = (c-b)_n/(c)_n F(-n, b; b-c-n+1; 1-z)

def _kummer1_sample(params, rng):
    while True:
        b, c = rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0)
        if nearest_integer_distance(b - c) > 0.1:
            break
    return {'n': rng.randint(0, 8), 'b': b, 'c': c,
            'z': complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))}


KUMMER1 = Identity(
    description="F(-n,b;c;z) = (c-b)_n/(c)_n F(-n,b;b-c-n+1;1-z)",
    lhs=lambda p, x: hyp2f1_terminating(x['n'], x['b'], x['c'], x['z']),
    rhs=lambda p, x: (pochhammer(x['c'] - x['b'], x['n']) / pochhammer(x['c'], x['n'])
                      * hyp2f1_terminating(x['n'], x['b'], x['b'] - x['c'] - x['n'] + 1, 1 - x['z'])),
    region=lambda p, x: int(x['n']) == x['n'] and x['n'] >= 0,
    sample=_kummer1_sample,
)


# z <-> 1 - z, connecting F(a,b;c;z) with the two solutions at z = 1

def _linear35_rhs(params, aux):
    a, b, c, z = aux['a'], aux['b'], aux['c'], aux['z']
    first = gamma_ratio([a + 1 - c, b + 1 - c], [a + b + 1 - c, 1 - c])
    second = gamma_ratio([a + 1 - c, b + 1 - c, c - 1], [a, b, 1 - c])
    return (first * hyp2f1_series(a, b, a + b + 1 - c, 1 - z)
            - second * cpow(z, 1 - c) * cpow(1 - z, c - a - b) * hyp2f1_series(1 - a, 1 - b, 2 - c, z))


def _linear35_region(params, aux):
    z = complex(aux['z'])
    return abs(z) < 1 and abs(1 - z) < 1 and not is_integer(aux['c'])


def _linear35_sample(params, rng):
    return {'a': rng.uniform(0.1, 1.9), 'b': rng.uniform(0.1, 1.9), 'c': rng.uniform(0.15, 0.85),
            'z': rng.uniform(0.2, 0.8)}


LINEAR35 = Identity(
    description="F(a,b;c;z) in terms of F(a,b;a+b+1-c;1-z) and z^{1-c}(1-z)^{c-a-b}F(1-a,1-b;2-c;z)",
    lhs=lambda p, x: hyp2f1_series(x['a'], x['b'], x['c'], x['z']),
    rhs=_linear35_rhs,
    region=_linear35_region,
    sample=_linear35_sample,
)


# z <-> 1/z; the left side is continued to |z| > 1 through the z/(z-1) transformation

def _linear34_lhs(params, aux):
    a, b, c, z = aux['a'], aux['b'], aux['c'], complex(aux['z'])
    return cpow(1 - z, -a) * hyp2f1_series(a, c - b, c, z / (z - 1))


def _linear34_rhs(params, aux):
    a, b, c, z = aux['a'], aux['b'], aux['c'], complex(aux['z'])
    first = gamma_ratio([c, b - a], [c - a, b])
    second = gamma_ratio([c, a - b], [c - b, a])
    return (first * cpow(-z, -a) * hyp2f1_series(a, a + 1 - c, a + 1 - b, 1 / z)
            + second * cpow(-z, a - c) * cpow(1 - z, c - a - b) * hyp2f1_series(1 - a, c - a, b + 1 - a, 1 / z))


def _linear34_region(params, aux):
    z = complex(aux['z'])
    return abs(z) > 1 and z.real < 0 and not is_integer(aux['a'] - aux['b'])


def _linear34_sample(params, rng):
    return {'a': rng.uniform(0.1, 0.4), 'b': rng.uniform(0.6, 0.9), 'c': rng.uniform(1.2, 2.8),
            'z': complex(rng.uniform(-4.0, -1.5), rng.uniform(-1.0, 1.0))}


LINEAR34 = Identity(
    description="F(a,b;c;z) for |z| > 1 in terms of F(a,a+1-c;a+1-b;1/z) and F(1-a,c-a;b+1-a;1/z)",
    lhs=_linear34_lhs,
    rhs=_linear34_rhs,
    region=_linear34_region,
    sample=_linear34_sample,
)


def _pfaff_z_region(params, aux):
    z = complex(aux['z'])
    return abs(z) < 1 and z.real < 0.5


def _pfaff_z_sample(params, rng):
    return {'a': rng.uniform(0.1, 1.9), 'b': rng.uniform(0.1, 1.9), 'c': rng.uniform(0.3, 2.5),
            'z': cmath.rect(rng.uniform(0.05, 0.45), rng.uniform(-math.pi, math.pi))}


PFAFF_Z = Identity(
    description="F(a,c-b;c;z/(z-1)) = (1-z)^a F(a,b;c;z)",
    lhs=lambda p, x: hyp2f1_series(x['a'], x['c'] - x['b'], x['c'], x['z'] / (x['z'] - 1)),
    rhs=lambda p, x: cpow(1 - x['z'], x['a']) * hyp2f1_series(x['a'], x['b'], x['c'], x['z']),
    region=_pfaff_z_region,
    sample=_pfaff_z_sample,
)


def _pfaff_recip_region(params, aux):
    z = complex(aux['z'])
    return abs(z) > 1 and abs(1 - z) > 1 and z.real < 0


def _pfaff_recip_sample(params, rng):
    return {'a': rng.uniform(0.1, 1.9), 'b': rng.uniform(0.1, 0.9), 'c': rng.uniform(0.5, 2.5),
            'z': complex(rng.uniform(-4.0, -1.2), rng.uniform(-1.0, 1.0))}


PFAFF_RECIP = Identity(
    description="F(a,c-b;a+1-b;1/(1-z)) = (1-z)^a (-z)^{-a} F(a,a+1-c;a+1-b;1/z)",
    lhs=lambda p, x: hyp2f1_series(x['a'], x['c'] - x['b'], x['a'] + 1 - x['b'], 1 / (1 - complex(x['z']))),
    rhs=lambda p, x: (cpow(1 - x['z'], x['a']) * cpow(-complex(x['z']), -x['a'])
                      * hyp2f1_series(x['a'], x['a'] + 1 - x['c'], x['a'] + 1 - x['b'], 1 / complex(x['z']))),
    region=_pfaff_recip_region,
    sample=_pfaff_recip_sample,
)


GAMMA_REFLECTION = Identity(
    description="Γ(x)Γ(1-x) = π/sin(πx)",
    lhs=lambda p, x: cmath.exp(log_gamma(x['x']) + log_gamma(1 - x['x'])),
    rhs=lambda p, x: math.pi / cmath.sin(math.pi * x['x']),
    region=lambda p, x: not is_integer(x['x']),
    sample=lambda p, rng: {'x': _generic_uniform(rng, -3.9, 3.9)},
)


def _gamma_useful_lhs(params, aux):
    m, alpha = aux['m'], _alpha(params, aux)
    return gamma(-m - alpha) * gamma(m + alpha + 1)


def _gamma_useful_rhs(params, aux):
    m, alpha = aux['m'], _alpha(params, aux)
    return (-1) ** (m + 1) * gamma(alpha) * gamma(1 - alpha)


GAMMA_USEFUL = Identity(
    description="Γ(-m-α)Γ(m+α+1) = (-1)^{m+1} Γ(α)Γ(1-α)",
    lhs=_gamma_useful_lhs,
    rhs=_gamma_useful_rhs,
    region=lambda p, x: x['m'] >= 0 and not is_integer(_alpha(p, x)),
    sample=lambda p, rng: {'m': rng.randint(0, 6), 'alpha': _generic_uniform(rng, -2.0, 3.0)},
)


def _littleid_lhs(params, aux):
    alpha, beta = _alpha(params, aux), _beta(params, aux)
    return ((cmath.exp(1j * math.pi * (alpha + beta)) * math.sin(math.pi * alpha) + math.sin(math.pi * beta))
            / math.sin(math.pi * (alpha + beta)))


def _littleid_sample(params, rng):
    while True:
        alpha, beta = rng.uniform(-0.9, 3.0), rng.uniform(-0.9, 3.0)
        if nearest_integer_distance(alpha + beta) > 0.05:
            return {'alpha': alpha, 'beta': beta}


PHASE_LITTLEID = Identity(
    description="[e^{iπ(α+β)} sin πα + sin πβ] / sin π(α+β) = e^{iπα}",
    lhs=_littleid_lhs,
    rhs=lambda p, x: cmath.exp(1j * math.pi * _alpha(p, x)),
    region=lambda p, x: not is_integer(_alpha(p, x) + _beta(p, x)),
    sample=_littleid_sample,
)


VANDERMONDE = Identity(
    description="F(-n,b;c;1) = (c-b)_n/(c)_n",
    lhs=lambda p, x: hyp2f1_terminating(x['n'], x['b'], x['c'], 1),
    rhs=lambda p, x: pochhammer(x['c'] - x['b'], x['n']) / pochhammer(x['c'], x['n']),
    region=lambda p, x: x['n'] >= 0,
    sample=lambda p, rng: {'n': rng.randint(0, 10), 'b': rng.uniform(0.1, 2.0), 'c': rng.uniform(0.1, 2.0)},
)


IDENTITIES: Dict[IdentityTag, Identity] = {
    IdentityTag.KUMMER1: KUMMER1,
    IdentityTag.LINEAR35: LINEAR35,
    IdentityTag.LINEAR34: LINEAR34,
    IdentityTag.PFAFF_Z: PFAFF_Z,
    IdentityTag.PFAFF_RECIP: PFAFF_RECIP,
    IdentityTag.GAMMA_REFLECTION: GAMMA_REFLECTION,
    IdentityTag.GAMMA_USEFUL: GAMMA_USEFUL,
    IdentityTag.PHASE_LITTLEID: PHASE_LITTLEID,
    IdentityTag.VANDERMONDE: VANDERMONDE,
}


def identity_residual(tag: IdentityTag, params: Params, aux: Aux) -> float:
    identity = IDENTITIES[tag]
    if not identity.region(params, aux):
        raise DomainError(f"{tag.value}: point {dict(aux)} lies outside the validity region")
    lhs = identity.lhs(params, aux)
    rhs = identity.rhs(params, aux)
    return abs(lhs - rhs) / (1 + abs(rhs))


def sample_points(tag: IdentityTag, params: Params, count: int = 20, seed: int = 0) -> List[Dict[str, Any]]:
    rng = random.Random(f"{tag.value}:{seed}")
    identity = IDENTITIES[tag]
    return [identity.sample(params, rng) for _ in range(count)]
