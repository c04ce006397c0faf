"""Exact higher derivatives of powers of sin, cos, sinh and cosh.

The k-th derivative of ``base(x)**n`` is ``base(x)**(n-k)`` times a polynomial
in the co-function (intermediate form) or, after a Pythagorean rewrite, a
polynomial in the base itself with at most one extra co-function factor
(final form).  Polynomial coefficients are exact polynomials in ``n``.
"""

from .closedform import binomial_derivative, exp_power_derivative
from .errors import (
    DegenerateRow,
    InternalCancellationFailure,
    NegativeExponentUnsupported,
    NonIntegerNeedsPositiveBase,
    NotDivisible,
    OddPowerPresent,
    PoleAtEvaluationPoint,
    PoleNearby,
    StepTooSmall,
    TrigPowError,
)
from .evaluator import (
    DerivativeExpression,
    Form,
    SpecializedExpression,
    build_expression,
    evaluate,
    evaluate_specialized,
    finite_difference,
    specialize,
)
from .exactpoly import N, NPoly, UPoly
from .families import (
    FAMILIES,
    Family,
    PolySequenceCache,
    final_poly,
    intermediate_poly,
    recurrence_poly,
    sequence_for,
)
from .render import RenderOptions, parse_json, render_expression, render_json
from .triangle import product_matrix_row, second_highest_coeffs, verify_triangle

__version__ = "0.1.0"
