from enum import Enum

from ..errors import DomainError
from ..scalar import Number, cpow, hyp2f1, nonpositive_integer_value


class KummerTag(Enum):
    U1 = 'U1'
    U3 = 'U3'
    U4 = 'U4'


def _check_argument(w: complex, *parameters: Number):
    if abs(w) < 1:
        return
    if any(nonpositive_integer_value(x) is not None for x in parameters):
        return
    raise DomainError(f"series argument {w} lies outside the unit disk")


def kummer_solution(tag: KummerTag, a: Number, b: Number, c: Number, z: Number) -> complex:
    """Solutions of z(1-z)u'' + [c-(a+b+1)z]u' - ab u = 0, principal branches.

    U1 = F(a,b;c;z), U3 = (1-z)^{-a} F(a,c-b;a+1-b;1/(1-z)), U4 = (1-z)^{-b} F(b,c-a;b+1-a;1/(1-z))."""
    z = complex(z)
    if tag is KummerTag.U1:
        _check_argument(z, a, b)
        return hyp2f1(a, b, c, z)
    if z == 1:
        raise DomainError("z = 1 is a branch point")
    w = 1 / (1 - z)
    if tag is KummerTag.U3:
        _check_argument(w, a, c - b)
        return cpow(1 - z, -a) * hyp2f1(a, c - b, a + 1 - b, w)
    _check_argument(w, b, c - a)
    return cpow(1 - z, -b) * hyp2f1(b, c - a, b + 1 - a, w)


def kummer_u4_alternate(a: Number, b: Number, c: Number, z: Number) -> complex:
    """(-z)^{a-c}(1-z)^{c-a-b} F(1-a,c-a;b+1-a;1/z), the expansion of U4 around infinity."""
    z = complex(z)
    if z == 0:
        raise DomainError("z = 0 is a branch point")
    w = 1 / z
    _check_argument(w, 1 - a, c - a)
    return cpow(-z, a - c) * cpow(1 - z, c - a - b) * hyp2f1(1 - a, c - a, b + 1 - a, w)
