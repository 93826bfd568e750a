from .diffop import DiffOp, compose, bracket, apply_op, formal_adjoint, DEGREE_CAP
from .kummer import KummerTag, kummer_solution, kummer_u4_alternate
from .realization import GeneratorTag, realize, to_su11, from_su11, casimir_q, casimir_j2, hypergeometric_operator
from .relations import (
    Relation, relation_residual, bispectral_residual, contiguity_residual, gevp_hypergeometric_residual,
)

__all__ = [
    'DiffOp',
    'compose',
    'bracket',
    'apply_op',
    'formal_adjoint',
    'DEGREE_CAP',
    'KummerTag',
    'kummer_solution',
    'kummer_u4_alternate',
    'GeneratorTag',
    'realize',
    'to_su11',
    'from_su11',
    'casimir_q',
    'casimir_j2',
    'hypergeometric_operator',
    'Relation',
    'relation_residual',
    'bispectral_residual',
    'contiguity_residual',
    'gevp_hypergeometric_residual',
]
