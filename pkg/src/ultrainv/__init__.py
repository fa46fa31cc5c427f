"""Exact construction and verification of the differential equations satisfied by
symmetric generalized ultraspherical polynomials."""
from .diffeq import (
    CoeffSet,
    ConsistencyError,
    GenParams,
    a0_closed,
    a0_recurrence,
    alt_b_star,
    alt_c_star,
    b_coeff,
    c_coeff,
    cc_check,
    coeffs_closed,
    coeffs_via_inversion,
    finite_order,
    gen_c0c1,
    gen_poly,
    ode_residual,
    telescope_check,
    verify_original_systems,
)
from .exact import (
    DomainError,
    LinFactorRatio,
    PoleError,
    Poly,
    format_rational,
    gen_binomial,
    parse_rational,
    pochhammer,
)
from .inversion import RhsSequence, SolutionSequence, inversion_sum, solve_system, spec_sum, verify_system
from .report import Counterexample, VerifyReport
from .ultraspherical import ultra_def1, ultra_def2, ultra_def3

__version__ = "0.1.0"
