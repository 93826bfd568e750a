from .orthogonality import (
    h_norm, askey_norm, verify_askey_biorthogonality, verify_jacobi_circle, verify_jacobi_interval,
    contour_prefactor, contour_equivalence, MatrixKind, orthogonality_reports, orthogonality_matrix,
)
from .rules import QuadratureResult, circle_rule, circle_integral, interval_rule, interval_integral
from .spec import QuadratureSpec, DEFAULT_QUADRATURE, OrthogonalityReport

__all__ = [
    'h_norm',
    'askey_norm',
    'verify_askey_biorthogonality',
    'verify_jacobi_circle',
    'verify_jacobi_interval',
    'contour_prefactor',
    'contour_equivalence',
    'MatrixKind',
    'orthogonality_reports',
    'orthogonality_matrix',
    'QuadratureResult',
    'circle_rule',
    'circle_integral',
    'interval_rule',
    'interval_integral',
    'QuadratureSpec',
    'DEFAULT_QUADRATURE',
    'OrthogonalityReport',
]
