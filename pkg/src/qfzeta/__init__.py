"""Lattice points inside ellipses of positive definite binary quadratic
forms: exact all/primitive counts, Epstein zeta evaluation with certified
enclosures, and the explicit lower-bound pipeline for the mean absolute
primitive-count error."""

from .bounds import (
    BoundReport,
    FINITE_Y_CORRECTION,
    FINITE_Y_THRESHOLD,
    REFERENCE_FORM,
    ReferenceCheck,
    WEIGHT_CEILING,
    finite_y_check,
    is_reference_form,
    k0_from_zero,
    k0_lower_bound,
    k0_lower_bound_auto,
    verify_reference,
    weight_constant_check,
)
from .counting import (
    CountResult,
    DEFAULT_POINT_BUDGET,
    ValueList,
    count,
    count_many,
    count_primitive_moebius,
    enumerate_points,
    mean_abs_r,
    mean_abs_r_from,
    mobius_sieve,
    write_mean_curve_csv,
    write_sweep_csv,
)
from .epstein import (
    CERTIFIED_RE,
    PotterEvaluation,
    functional_equation,
    potter_eval,
    potter_f1,
    potter_f2_bound,
    zeta_q_series,
)
from .errors import (
    BudgetError,
    DomainError,
    FormError,
    ParseError,
    PoleError,
    VerificationError,
)
from .forms import (
    FormConstants,
    QuadraticForm,
    form_constants,
    kappa,
    lambda1,
    parse_form,
)
from .special import (
    ZetaZero,
    dirichlet_l,
    hardy_z,
    has_sign_change,
    log_gamma,
    refine_zero,
    riemann_siegel_theta,
    zero_table_size,
    zeta_real,
    zeta_zero,
)

__version__ = "0.1.0"

__all__ = [
    "QuadraticForm",
    "FormConstants",
    "parse_form",
    "kappa",
    "lambda1",
    "form_constants",
    "ValueList",
    "CountResult",
    "DEFAULT_POINT_BUDGET",
    "enumerate_points",
    "count",
    "count_many",
    "count_primitive_moebius",
    "mobius_sieve",
    "mean_abs_r",
    "mean_abs_r_from",
    "write_sweep_csv",
    "write_mean_curve_csv",
    "zeta_real",
    "dirichlet_l",
    "log_gamma",
    "ZetaZero",
    "zeta_zero",
    "zero_table_size",
    "riemann_siegel_theta",
    "hardy_z",
    "has_sign_change",
    "refine_zero",
    "PotterEvaluation",
    "CERTIFIED_RE",
    "zeta_q_series",
    "potter_f1",
    "potter_f2_bound",
    "potter_eval",
    "functional_equation",
    "BoundReport",
    "WEIGHT_CEILING",
    "weight_constant_check",
    "k0_from_zero",
    "k0_lower_bound",
    "k0_lower_bound_auto",
    "REFERENCE_FORM",
    "FINITE_Y_THRESHOLD",
    "FINITE_Y_CORRECTION",
    "is_reference_form",
    "finite_y_check",
    "ReferenceCheck",
    "verify_reference",
    "ParseError",
    "FormError",
    "DomainError",
    "PoleError",
    "BudgetError",
    "VerificationError",
]
