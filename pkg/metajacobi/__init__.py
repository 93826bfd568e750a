from .__pkginfo__ import __version__
from .algebra import (
    DiffOp, compose, bracket, apply_op, formal_adjoint, GeneratorTag, realize, hypergeometric_operator,
    Relation, relation_residual, bispectral_residual, contiguity_residual, gevp_hypergeometric_residual,
    KummerTag, kummer_solution, kummer_u4_alternate,
)
from .errors import (
    ParameterError, NumericError, PoleError, DegenerateParameterError, DomainError, ConvergenceError, DegreeCapError,
)
from .identities import IdentityTag, identity_residual, sample_points
from .poly import (
    PolyCoeffs, askey_p, askey_q, jacobi_phat, eval_poly, recurrence_coeffs, askey_p_by_recurrence, taylor_shift,
)
from .quadrature import (
    QuadratureSpec, DEFAULT_QUADRATURE, OrthogonalityReport, circle_integral, interval_integral, h_norm,
    askey_norm, verify_askey_biorthogonality, verify_jacobi_circle, verify_jacobi_interval, contour_equivalence,
    contour_prefactor, MatrixKind, orthogonality_matrix,
)
from .repmod import (
    ModuleVector, ModuleTag, act, truncated_matrix, gevp_spectrum, GaugeChoice, DEFAULT_GAUGE, gevp_p_coeffs,
    gevp_q_coeffs, evp_j_coeffs, NegativeKind, negative_index_coeffs, negative_index_norm, pairing, biorth_norm,
    OverlapKind, SplitKind, overlap, overlap_closed_form, jacobi_overlap_normalization, transpose_consistency,
)
from .scalar import Params, pochhammer, log_gamma, gamma, hyp2f1_terminating, hyp2f1_series, hyp2f1
from .suites import Suite, Check, Report, run_suite

__all__ = [
    '__version__',
    'DiffOp',
    'compose',
    'bracket',
    'apply_op',
    'formal_adjoint',
    'GeneratorTag',
    'realize',
    'hypergeometric_operator',
    'Relation',
    'relation_residual',
    'bispectral_residual',
    'contiguity_residual',
    'gevp_hypergeometric_residual',
    'KummerTag',
    'kummer_solution',
    'kummer_u4_alternate',
    'ParameterError',
    'NumericError',
    'PoleError',
    'DegenerateParameterError',
    'DomainError',
    'ConvergenceError',
    'DegreeCapError',
    'IdentityTag',
    'identity_residual',
    'sample_points',
    'PolyCoeffs',
    'askey_p',
    'askey_q',
    'jacobi_phat',
    'eval_poly',
    'recurrence_coeffs',
    'askey_p_by_recurrence',
    'taylor_shift',
    'QuadratureSpec',
    'DEFAULT_QUADRATURE',
    'OrthogonalityReport',
    'circle_integral',
    'interval_integral',
    'h_norm',
    'askey_norm',
    'verify_askey_biorthogonality',
    'verify_jacobi_circle',
    'verify_jacobi_interval',
    'contour_equivalence',
    'contour_prefactor',
    'MatrixKind',
    'orthogonality_matrix',
    'ModuleVector',
    'ModuleTag',
    'act',
    'truncated_matrix',
    'gevp_spectrum',
    'GaugeChoice',
    'DEFAULT_GAUGE',
    'gevp_p_coeffs',
    'gevp_q_coeffs',
    'evp_j_coeffs',
    'NegativeKind',
    'negative_index_coeffs',
    'negative_index_norm',
    'pairing',
    'biorth_norm',
    'OverlapKind',
    'SplitKind',
    'overlap',
    'overlap_closed_form',
    'jacobi_overlap_normalization',
    'transpose_consistency',
    'Params',
    'pochhammer',
    'log_gamma',
    'gamma',
    'hyp2f1_terminating',
    'hyp2f1_series',
    'hyp2f1',
    'Suite',
    'Check',
    'Report',
    'run_suite',
]
