import dataclasses

from ..errors import ParameterError

DIAGONAL_TOL = 1e-7
OFF_DIAGONAL_TOL = 1e-8
ROUNDING_FLOOR = 1e-14


@dataclasses.dataclass(frozen=True)
class QuadratureSpec:
    panels: int = 12
    """Dyadic levels toward θ = 0 on each side of the circle; doubled on every refinement."""
    nodes_per_panel: int = 16
    target_tol: float = 1e-10
    interval_levels: int = 10
    """Finest tanh-sinh level; the step at level j is 2^-j."""
    max_refinements: int = 3

    def __post_init__(self):
        if self.panels < 4:
            raise ParameterError(f"panels must be at least 4, got {self.panels}")
        if self.nodes_per_panel < 8:
            raise ParameterError(f"nodes_per_panel must be at least 8, got {self.nodes_per_panel}")
        if not self.target_tol >= 1e-13:
            raise ParameterError(f"target_tol must be at least 1e-13, got {self.target_tol}")
        if self.interval_levels < 3:
            raise ParameterError(f"interval_levels must be at least 3, got {self.interval_levels}")
        if self.max_refinements < 1:
            raise ParameterError(f"max_refinements must be at least 1, got {self.max_refinements}")

    def replace(self, **changes) -> 'QuadratureSpec':
        return dataclasses.replace(self, **changes)


DEFAULT_QUADRATURE = QuadratureSpec()


@dataclasses.dataclass(frozen=True)
class OrthogonalityReport:
    m: int
    n: int
    computed: complex
    expected: complex
    abs_residual: float
    rel_residual: float
    tolerance: float
    reference: float
    """Diagonal value, or the geometric mean of the two diagonal values off the diagonal."""
    condition: float
    """L1 size of the integrand over the reference magnitude; bounds the attainable relative accuracy."""
    passed: bool

    @staticmethod
    def build(m: int, n: int, computed: complex, expected: complex, reference: float,
              magnitude: float) -> 'OrthogonalityReport':
        tolerance = DIAGONAL_TOL if m == n else OFF_DIAGONAL_TOL
        abs_residual = abs(computed - expected)
        rel_residual = abs_residual / reference
        condition = magnitude / reference
        passed = rel_residual <= max(tolerance, ROUNDING_FLOOR * condition)
        return OrthogonalityReport(m, n, complex(computed), complex(expected), abs_residual, rel_residual,
                                   tolerance, reference, condition, passed)
