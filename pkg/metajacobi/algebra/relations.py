from enum import Enum
from typing import Dict, Callable

from .diffop import DiffOp, bracket, apply_op, formal_adjoint
from .realization import GeneratorTag, realize, to_su11, from_su11, casimir_q, casimir_j2, hypergeometric_operator
from ..poly import askey_p, PolyCoeffs
from ..scalar import Params


class Relation(Enum):
    COM_LM = 'COM_LM'
    COM_LX = 'COM_LX'
    COM_MX = 'COM_MX'
    SU11_J0_JPLUS = 'SU11_J0_JPLUS'
    SU11_J0_JMINUS = 'SU11_J0_JMINUS'
    SU11_JPLUS_JMINUS = 'SU11_JPLUS_JMINUS'
    ISOMORPHISM_ROUNDTRIP = 'ISOMORPHISM_ROUNDTRIP'
    BG_EMBEDDING = 'BG_EMBEDDING'
    JACOBI_K1 = 'JACOBI_K1'
    JACOBI_K2 = 'JACOBI_K2'
    JACOBI_K3 = 'JACOBI_K3'
    CASIMIR_VALUE = 'CASIMIR_VALUE'
    CASIMIR_SU11 = 'CASIMIR_SU11'
    JACOBI_D = 'JACOBI_D'
    K3_FORM = 'K3_FORM'
    ADJOINT_REALIZATION = 'ADJOINT_REALIZATION'
    ADJOINT_COM_LM = 'ADJOINT_COM_LM'


class _Generators:
    def __init__(self, params: Params):
        self.params = params
        self.l = realize(GeneratorTag.L, params)
        self.m = realize(GeneratorTag.M, params)
        self.x = realize(GeneratorTag.X, params)
        self.one = DiffOp.identity()

    def su11(self):
        return to_su11(self.l, self.m, self.x, self.params)

    def casimir(self) -> DiffOp:
        return casimir_q(self.l, self.m, self.x, self.params)


def _difference(*pairs) -> float:
    return max((lhs - rhs).max_abs() for lhs, rhs in pairs)


def _com_lm(g: _Generators) -> float:
    a = g.params.alpha
    return _difference((bracket(g.l, g.m), g.l @ g.l - (a + 1) * g.l - g.m))


def _com_lx(g: _Generators) -> float:
    return _difference((bracket(g.l, g.x), g.x - g.one))


def _com_mx(g: _Generators) -> float:
    a, b = g.params.alpha, g.params.beta
    return _difference((bracket(g.m, g.x), bracket(g.x, g.l, anti=True) - (a + 1) * g.x + b))


def _su11_j0_jplus(g: _Generators) -> float:
    j0, jplus, _ = g.su11()
    return _difference((bracket(j0, jplus), jplus))


def _su11_j0_jminus(g: _Generators) -> float:
    j0, _, jminus = g.su11()
    return _difference((bracket(j0, jminus), -jminus))


def _su11_jplus_jminus(g: _Generators) -> float:
    j0, jplus, jminus = g.su11()
    return _difference((bracket(jplus, jminus), -2 * j0))


def _roundtrip(g: _Generators) -> float:
    l, m, x = from_su11(*g.su11(), g.params)
    return _difference((l, g.l), (m, g.m), (x, g.x))


def _bg_embedding(g: _Generators) -> float:
    p = g.params
    l, m, x = from_su11(realize(GeneratorTag.J0, p), realize(GeneratorTag.JPLUS, p),
                        realize(GeneratorTag.JMINUS, p), p)
    return _difference((l, g.l), (m, g.m), (x, g.x))


def _jacobi_k1(g: _Generators) -> float:
    p = g.params
    k1, k2, k3 = (realize(t, p) for t in (GeneratorTag.K1, GeneratorTag.K2, GeneratorTag.K3))
    return _difference((bracket(k1, k2), k3))


def _jacobi_k2(g: _Generators) -> float:
    p = g.params
    k2, k3 = realize(GeneratorTag.K2, p), realize(GeneratorTag.K3, p)
    return _difference((bracket(k2, k3), 2 * (k2 @ k2) - 2 * k2))


def _jacobi_k3(g: _Generators) -> float:
    p = g.params
    k1, k2, k3 = (realize(t, p) for t in (GeneratorTag.K1, GeneratorTag.K2, GeneratorTag.K3))
    a, b, c = 2, -2, -p.alpha * (p.alpha + 2)
    d = (p.alpha + 1) * p.beta * g.one - g.casimir() - g.one
    return _difference((bracket(k3, k1), a * bracket(k1, k2, anti=True) + b * k1 + c * k2 + d))


def _casimir_value(g: _Generators) -> float:
    return _difference((g.casimir(), g.params.casimir * g.one))


def _casimir_su11(g: _Generators) -> float:
    p = g.params
    j2 = casimir_j2(*g.su11())
    return _difference((g.casimir(), 2 * j2 - (p.alpha - p.beta + 1) ** 2 / 2 * g.one))


def _jacobi_d(g: _Generators) -> float:
    p = g.params
    q = g.casimir().terms.get((0, 0), 0j)
    d = (p.alpha + 1) * p.beta - q - 1
    return abs(d - p.alpha * (1 - p.beta))


def _k3_form(g: _Generators) -> float:
    p = g.params
    expected = -bracket(g.x, g.l, anti=True) + (p.alpha + 1) * g.x - p.beta
    return _difference((realize(GeneratorTag.K3, p), expected))


def _adjoint_realization(g: _Generators) -> float:
    p = g.params
    return _difference((realize(GeneratorTag.LT, p), formal_adjoint(g.l)),
                       (realize(GeneratorTag.MT, p), formal_adjoint(g.m)))


def _adjoint_com_lm(g: _Generators) -> float:
    p = g.params
    lt, mt = realize(GeneratorTag.LT, p), realize(GeneratorTag.MT, p)
    return _difference((bracket(lt, mt), -(lt @ lt - (p.alpha + 1) * lt - mt)))


_RELATIONS: Dict[Relation, Callable[[_Generators], float]] = {
    Relation.COM_LM: _com_lm,
    Relation.COM_LX: _com_lx,
    Relation.COM_MX: _com_mx,
    Relation.SU11_J0_JPLUS: _su11_j0_jplus,
    Relation.SU11_J0_JMINUS: _su11_j0_jminus,
    Relation.SU11_JPLUS_JMINUS: _su11_jplus_jminus,
    Relation.ISOMORPHISM_ROUNDTRIP: _roundtrip,
    Relation.BG_EMBEDDING: _bg_embedding,
    Relation.JACOBI_K1: _jacobi_k1,
    Relation.JACOBI_K2: _jacobi_k2,
    Relation.JACOBI_K3: _jacobi_k3,
    Relation.CASIMIR_VALUE: _casimir_value,
    Relation.CASIMIR_SU11: _casimir_su11,
    Relation.JACOBI_D: _jacobi_d,
    Relation.K3_FORM: _k3_form,
    Relation.ADJOINT_REALIZATION: _adjoint_realization,
    Relation.ADJOINT_COM_LM: _adjoint_com_lm,
}


def relation_residual(relation: Relation, params: Params) -> float:
    return float(_RELATIONS[relation](_Generators(params)))


def bispectral_residual(n: int, params: Params) -> float:
    """Largest coefficient of the differential-equation and differential-recurrence defects of P_n."""
    p = params
    ops = {tag: realize(tag, p) for tag in (GeneratorTag.L, GeneratorTag.M, GeneratorTag.X,
                                            GeneratorTag.R, GeneratorTag.RTILDE)}
    pn, pnext = askey_p(n, p), askey_p(n + 1, p)
    lp = apply_op(ops[GeneratorTag.L], pn)
    mp = apply_op(ops[GeneratorTag.M], pn)
    rp = apply_op(ops[GeneratorTag.R], pn)
    rtp = apply_op(ops[GeneratorTag.RTILDE], pn)

    lowering = PolyCoeffs([0])
    if n > 0:
        lowering = askey_p(n - 1, p) * (n * (p.alpha + p.beta + n) / (p.alpha + n))

    pairs = [
        (mp, n * lp),
        (rp, apply_op(ops[GeneratorTag.X], lp)),
        (lp, (n + p.alpha + 1) * pn - lowering),
        (rp, (n + p.alpha + 1) * pnext - (p.beta + n) * pn),
        (rtp, n * (n + p.alpha + 1) * pnext - n * (p.beta + n) * pn),
        (mp, n * (n + p.alpha + 1) * pn - n * lowering),
    ]
    return _difference(*pairs)


def contiguity_residual(n: int, params: Params) -> float:
    shifted = params.shifted(1, -1)
    pn = askey_p(n, params)
    target = askey_p(n, shifted)
    lp = apply_op(realize(GeneratorTag.L, params), pn)
    mp = apply_op(realize(GeneratorTag.M, params), pn)
    scale = params.alpha + n + 1
    return _difference((lp, scale * target), (mp, n * scale * target))


def gevp_hypergeometric_residual(index: int, params: Params, adjoint: bool = False) -> float:
    """M - nL = -H(-n, α+1, 1-n-β) and Mᵀ - mLᵀ = -H(m+1, -α, 1+β+m) as operator identities."""
    a, b = params.alpha, params.beta
    if adjoint:
        pencil = realize(GeneratorTag.MT, params) - index * realize(GeneratorTag.LT, params)
        h = hypergeometric_operator(index + 1, -a, 1 + b + index)
    else:
        pencil = realize(GeneratorTag.M, params) - index * realize(GeneratorTag.L, params)
        h = hypergeometric_operator(-index, a + 1, 1 - index - b)
    return (pencil + h).max_abs()
