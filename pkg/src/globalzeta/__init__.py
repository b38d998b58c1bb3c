"""Completed zeta functions of global fields and their functional equation.

For a global field k (the rationals, a quadratic field, or a function
field over a finite field) the package evaluates the Dedekind zeta,
the archimedean Gamma factor, and the completed product

    Z(s) = (pi^(-s/2) Gamma(s/2))^r1 * ((2 pi)^(1-s) Gamma(s))^r2 * zeta_k(s),

computes the adelic covolume beta (sqrt|D| for number fields, q^(g-1)
in positive characteristic), and verifies

    Z(1 - s) = beta^(2s-1) * Z(s)

numerically on point grids, and exactly (integer arithmetic) for
function fields, where the identity is the coefficient symmetry of the
L-polynomial.
"""

from .errors import DomainError, PoleError, SymmetryError, WeilBoundWarning
from .kernel import (
    POLE_EXCLUSION_RADIUS,
    KroneckerCharacter,
    dirichlet_l,
    hurwitz_zeta,
    is_fundamental_discriminant,
    kronecker_chi,
    log_gamma,
    riemann_zeta,
)
from .fields import (
    FunctionFieldDescriptor,
    LPolynomial,
    NumberFieldDescriptor,
    Place,
    covolume,
    enumerate_places,
    field_spec_string,
    local_euler_factor,
    log_covolume,
    lpoly_from_point_counts,
    make_curve_function_field,
    make_quadratic,
    make_rational_function_field,
    make_rationals,
    parse_field_spec,
    places_above,
    splitting_type,
    truncated_euler_product,
)
from .zeta import (
    EvaluationRecord,
    PoleSet,
    completed_zeta,
    gamma_factor,
    pole_distance,
    pole_set,
    zeta,
)
from .verify import (
    EulerConsistencyReport,
    ExactCheckResult,
    FunctionalEquationReport,
    GridSpec,
    SweepSummary,
    check_point,
    euler_consistency_check,
    exact_check_function_field,
    sweep,
)

__all__ = [
    "DomainError",
    "PoleError",
    "SymmetryError",
    "WeilBoundWarning",
    "POLE_EXCLUSION_RADIUS",
    "KroneckerCharacter",
    "dirichlet_l",
    "hurwitz_zeta",
    "is_fundamental_discriminant",
    "kronecker_chi",
    "log_gamma",
    "riemann_zeta",
    "FunctionFieldDescriptor",
    "LPolynomial",
    "NumberFieldDescriptor",
    "Place",
    "covolume",
    "enumerate_places",
    "field_spec_string",
    "local_euler_factor",
    "log_covolume",
    "lpoly_from_point_counts",
    "make_curve_function_field",
    "make_quadratic",
    "make_rational_function_field",
    "make_rationals",
    "parse_field_spec",
    "places_above",
    "splitting_type",
    "truncated_euler_product",
    "EvaluationRecord",
    "PoleSet",
    "completed_zeta",
    "gamma_factor",
    "pole_distance",
    "pole_set",
    "zeta",
    "EulerConsistencyReport",
    "ExactCheckResult",
    "FunctionalEquationReport",
    "GridSpec",
    "SweepSummary",
    "check_point",
    "euler_consistency_check",
    "exact_check_function_field",
    "sweep",
]

__version__ = "0.1.0"
