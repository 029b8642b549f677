"""Denominator and degree bounds for rational solutions of q-recurrence
systems, with the t-tail / t-head regularizations that make them applicable."""

from .arith import MINUS_INFINITY, RationalFunction, SigmaPoly, TPoly, poly_divmod, substitute_qt, t_power_split
from .bounds import BoundReport, degree_bound, denominator_t_bound, lambda_poly, q_power_roots, rho_poly
from .errors import (
    DocumentError,
    InvalidQError,
    IterationLimitError,
    NotRegularError,
    QRecError,
    SingularSystemError,
)
from .io import parse_expression, parse_system, render_system
from .ore import OreMatrix, OrePoly, QRecSystem, apply, apply_matrix, ore_mul, t_decompose, t_leading, t_trailing
from .popov import DivisionResult, PopovResult, ore_row_rank, popov_form, reduce_rows, sigma_det, top_leading_term
from .regularize import RegularizationTrace, RegularizeConfig, head_regularize, replay_trace, tail_regularize
from .solve import SolutionSet, polynomial_solutions, rational_t_solutions, substitute_t_power, verify_solution

__version__ = "0.1.0"

__all__ = [
    "MINUS_INFINITY",
    "RationalFunction",
    "SigmaPoly",
    "TPoly",
    "poly_divmod",
    "substitute_qt",
    "t_power_split",
    "BoundReport",
    "degree_bound",
    "denominator_t_bound",
    "lambda_poly",
    "q_power_roots",
    "rho_poly",
    "DocumentError",
    "InvalidQError",
    "IterationLimitError",
    "NotRegularError",
    "QRecError",
    "SingularSystemError",
    "parse_expression",
    "parse_system",
    "render_system",
    "OreMatrix",
    "OrePoly",
    "QRecSystem",
    "apply",
    "apply_matrix",
    "ore_mul",
    "t_decompose",
    "t_leading",
    "t_trailing",
    "DivisionResult",
    "PopovResult",
    "ore_row_rank",
    "popov_form",
    "reduce_rows",
    "sigma_det",
    "top_leading_term",
    "RegularizationTrace",
    "RegularizeConfig",
    "head_regularize",
    "replay_trace",
    "tail_regularize",
    "SolutionSet",
    "polynomial_solutions",
    "rational_t_solutions",
    "substitute_t_power",
    "verify_solution",
]
