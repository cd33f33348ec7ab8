"""Numerical evaluation and identity audit of the integral family f(a, b)."""

from .errors import ConvergenceError, DomainError, QuadratureError
from .family import (
    ModulusSet,
    Params,
    PolynomialRep,
    RepresentationValue,
    Status,
    arias_value,
    f1_closed,
    f1_closed_variant,
    f1_integral,
    f3_literal,
    f3_variant,
    f32_trig,
    f32_x_form,
    f32_y_form,
    f_direct,
    f_transformed,
    gr_claimed_value,
    integer_a_expansion,
    phi,
)
from .quadrature import QuadratureResult, ToleranceSpec
from .verify import IdentityReport, Verdict, audit_grid, evaluate_all, gr_check

__version__ = "0.1.0"
