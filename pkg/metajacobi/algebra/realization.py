from enum import Enum
from typing import Tuple, Callable, Dict

from .diffop import DiffOp, bracket
from ..scalar import Params


class GeneratorTag(Enum):
    L = 'L'
    M = 'M'
    X = 'X'
    R = 'R'
    RTILDE = 'RTILDE'
    LT = 'LT'
    MT = 'MT'
    J0 = 'J0'
    JPLUS = 'JPLUS'
    JMINUS = 'JMINUS'
    K1 = 'K1'
    K2 = 'K2'
    K3 = 'K3'
    CASIMIR_Q = 'CASIMIR_Q'
    CASIMIR_J2 = 'CASIMIR_J2'


def _l(params: Params) -> DiffOp:
    # (z-1)∂ + α+1
    return DiffOp({(1, 1): 1, (0, 1): -1, (0, 0): params.alpha + 1})


def _m(params: Params) -> DiffOp:
    # z(z-1)∂² + [(α+2)z + β-1]∂
    return DiffOp({(2, 2): 1, (1, 2): -1, (1, 1): params.alpha + 2, (0, 1): params.beta - 1})


def _x(params: Params) -> DiffOp:
    return DiffOp.z()


def _r(params: Params) -> DiffOp:
    return DiffOp({(2, 1): 1, (1, 1): -1, (1, 0): params.alpha + 1})


def _rtilde(params: Params) -> DiffOp:
    return DiffOp({(3, 2): 1, (2, 2): -1, (2, 1): params.alpha + 2, (1, 1): params.beta - 1})


def _lt(params: Params) -> DiffOp:
    # (1-z)∂ + α
    return DiffOp({(0, 1): 1, (1, 1): -1, (0, 0): params.alpha})


def _mt(params: Params) -> DiffOp:
    # z(z-1)∂² + [(2-α)z - β-1]∂ - α
    return DiffOp({(2, 2): 1, (1, 2): -1, (1, 1): 2 - params.alpha, (0, 1): -params.beta - 1,
                   (0, 0): -params.alpha})


def _j0(params: Params) -> DiffOp:
    return DiffOp({(1, 1): 1, (0, 1): -1, (0, 0): params.tau})


def _jplus(params: Params) -> DiffOp:
    return DiffOp({(1, 0): 1, (0, 0): -1})


def _jminus(params: Params) -> DiffOp:
    return DiffOp({(1, 2): 1, (0, 2): -1, (0, 1): 2 * params.tau})


def _k1(params: Params) -> DiffOp:
    return -_m(params)


def _k3(params: Params) -> DiffOp:
    # -2z(z-1)∂ - (α+2)z + 1-β
    return DiffOp({(2, 1): -2, (1, 1): 2, (1, 0): -(params.alpha + 2), (0, 0): 1 - params.beta})


def casimir_q(l: DiffOp, m: DiffOp, x: DiffOp, params: Params) -> DiffOp:
    """{L²,X} - (α+1){L,X} - {M,X} + 2M + 2βL."""
    return (bracket(l @ l, x, anti=True)
            - (params.alpha + 1) * bracket(l, x, anti=True)
            - bracket(m, x, anti=True)
            + 2 * m
            + 2 * params.beta * l)


def casimir_j2(j0: DiffOp, jplus: DiffOp, jminus: DiffOp) -> DiffOp:
    return j0 @ j0 - j0 - jplus @ jminus


def _casimir_q(params: Params) -> DiffOp:
    return casimir_q(_l(params), _m(params), _x(params), params)


def _casimir_j2(params: Params) -> DiffOp:
    return casimir_j2(_j0(params), _jplus(params), _jminus(params))


_REALIZATIONS: Dict[GeneratorTag, Callable[[Params], DiffOp]] = {
    GeneratorTag.L: _l,
    GeneratorTag.M: _m,
    GeneratorTag.X: _x,
    GeneratorTag.R: _r,
    GeneratorTag.RTILDE: _rtilde,
    GeneratorTag.LT: _lt,
    GeneratorTag.MT: _mt,
    GeneratorTag.J0: _j0,
    GeneratorTag.JPLUS: _jplus,
    GeneratorTag.JMINUS: _jminus,
    GeneratorTag.K1: _k1,
    GeneratorTag.K2: _x,
    GeneratorTag.K3: _k3,
    GeneratorTag.CASIMIR_Q: _casimir_q,
    GeneratorTag.CASIMIR_J2: _casimir_j2,
}


def realize(tag: GeneratorTag, params: Params) -> DiffOp:
    return _REALIZATIONS[tag](params)


def to_su11(l: DiffOp, m: DiffOp, x: DiffOp, params: Params) -> Tuple[DiffOp, DiffOp, DiffOp]:
    """(J0, J+, J-) = (L - (α-β+1)/2, X - 1, -L² + (α+1)L + M)."""
    shift = (params.alpha - params.beta + 1) / 2
    j0 = l - shift
    jplus = x - 1
    jminus = -(l @ l) + (params.alpha + 1) * l + m
    return j0, jplus, jminus


def from_su11(j0: DiffOp, jplus: DiffOp, jminus: DiffOp, params: Params) -> Tuple[DiffOp, DiffOp, DiffOp]:
    """Inverse of :func:`to_su11`."""
    alpha, beta = params.alpha, params.beta
    l = j0 + (alpha - beta + 1) / 2
    m = j0 @ j0 + jminus - beta * j0 - (alpha - beta + 1) * (alpha + beta + 1) / 4
    x = jplus + 1
    return l, m, x


def hypergeometric_operator(a: complex, b: complex, c: complex) -> DiffOp:
    """z(1-z)∂² + [c - (a+b+1)z]∂ - ab."""
    return DiffOp({(1, 2): 1, (2, 2): -1, (0, 1): c, (1, 1): -(a + b + 1), (0, 0): -a * b})
