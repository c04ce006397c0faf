"""Numerical evaluation of the derivative identities.

Two symbolic shapes are supported::

    intermediate:  base^(n-k) * P_k(n)(co(x))
    final:         base^(n-k) * [co(x) if k odd] * S_k(n)(base(x))

plus an exact integer-``n`` specialisation that cancels removable
singularities, and a central-difference oracle that never looks at the
polynomials.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .errors import (
    InternalCancellationFailure,
    NonIntegerNeedsPositiveBase,
    PoleAtEvaluationPoint,
    PoleNearby,
    StepTooSmall,
)
from .exactpoly import N, NPoly, UPoly
from .families import Family, PolySequenceCache, final_poly, intermediate_poly

__all__ = [
    "Form",
    "DerivativeExpression",
    "SpecializedExpression",
    "build_expression",
    "evaluate",
    "specialize",
    "evaluate_specialized",
    "finite_difference",
    "base_value",
    "cofunction_value",
    "POLE_THRESHOLD",
]

POLE_THRESHOLD = 1e-12
MIN_STEP = 1e-6
MAX_FD_ORDER = 6
_DEFAULT_STEPS = {5: 2e-2, 6: 3e-2}
POLE_STEP_RATIO = 50


class Form(str, Enum):
    INTERMEDIATE = "intermediate"
    FINAL = "final"


@dataclass(frozen=True)
class DerivativeExpression:
    """``base^(n-k) * [co-factor] * poly`` for one family and derivative order.

    ``poly`` is in the co-function value for the intermediate form and in the
    base value for the final form.
    """

    family: Family
    k: int
    form: Form
    cofactor: bool
    poly: UPoly

    @property
    def base_exponent(self) -> NPoly:
        return N - self.k

    def __post_init__(self):
        if self.form is Form.FINAL:
            if any(p % 2 for p in self.poly.powers()):
                raise ValueError("final form polynomial must have only even powers")
        elif any((p - self.k) % 2 for p in self.poly.powers()):
            raise ValueError("intermediate polynomial parity must match k")


@dataclass(frozen=True)
class SpecializedExpression:
    """Final form at a fixed integer ``n``, with common powers of ``v`` cancelled.

    ``poly_v`` holds exact integer coefficients in ascending powers of ``v``.
    """

    family: Family
    n: int
    k: int
    reduced_exponent: int
    cofactor: bool
    poly_v: tuple[int, ...]


def build_expression(family: Family | str, k: int, form: Form | str = Form.FINAL,
                     cache: PolySequenceCache | None = None) -> DerivativeExpression:
    family = Family.parse(family)
    form = Form(form)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if form is Form.INTERMEDIATE:
        poly = intermediate_poly(family.sequence, k, cache)
        return DerivativeExpression(family, k, form, False, poly)
    return DerivativeExpression(family, k, form, bool(k % 2), final_poly(family, k, cache))


def _is_real(x) -> bool:
    return not isinstance(x, complex) or x.imag == 0


def base_value(family: Family | str, x):
    """``sin(x)`` etc.; real input gives a float, complex input a complex."""
    name = Family.parse(family).value
    if _is_real(x):
        return getattr(math, name)(complex(x).real)
    return getattr(cmath, name)(x)


def cofunction_value(family: Family | str, x):
    name = Family.parse(family).cofunction
    if _is_real(x):
        return getattr(math, name)(complex(x).real)
    return getattr(cmath, name)(x)


def _as_int(n):
    """``int(n)`` when ``n`` is integral, else ``None``."""
    if isinstance(n, bool):
        raise TypeError("n must be a number")
    if isinstance(n, int):
        return n
    if isinstance(n, (float, Fraction)) and n == int(n):
        return int(n)
    return None


def _power(b, e, n_int):
    """``b**e`` with pole and branch checks.  ``n_int`` is ``None`` for real ``n``."""
    if n_int is not None:
        if e < 0 and abs(b) < POLE_THRESHOLD:
            raise PoleAtEvaluationPoint(f"base is {b!r} and exponent {e} is negative")
        return b**e
    if not _is_real(b) or complex(b).real < 0:
        raise NonIntegerNeedsPositiveBase(f"base value {b!r} is not real and nonnegative")
    b = complex(b).real
    if abs(b) < POLE_THRESHOLD and e < 0:
        raise PoleAtEvaluationPoint(f"base is {b!r} and exponent {e} is negative")
    return b ** float(e)


def _exact_horner(coeffs: dict[int, int], var):
    """Horner over exact (Gaussian) rationals; ``None`` if ``var`` is not a finite float/complex."""
    if isinstance(var, float):
        if not math.isfinite(var):
            return None
        re_, im_ = Fraction(var), Fraction(0)
        real = True
    elif isinstance(var, complex):
        if not (math.isfinite(var.real) and math.isfinite(var.imag)):
            return None
        re_, im_ = Fraction(var.real), Fraction(var.imag)
        real = False
    else:
        return None
    acc_r, acc_i = Fraction(0), Fraction(0)
    for p in range(max(coeffs, default=0), -1, -1):
        acc_r, acc_i = acc_r * re_ - acc_i * im_, acc_r * im_ + acc_i * re_
        acc_r += coeffs.get(p, 0)
    return float(acc_r) if real else complex(float(acc_r), float(acc_i))


def _poly_value(poly: UPoly, n, var):
    # The intermediate polynomial cancels heavily near u = +-1 (and the final
    # one at large k), so for integer n evaluate exactly and round once.
    if isinstance(n, int):
        exact = _exact_horner(poly.at_n(n), var)
        if exact is not None:
            return exact
    return poly(n, var)


def evaluate(expr: DerivativeExpression, n, x) -> complex:
    """Evaluate the k-th derivative of ``base(x)**n`` through ``expr``.

    ``n`` may be an integer or a real number; real ``n`` requires the base to
    be real and nonnegative at ``x``.  For natural ``n`` at a zero of the base,
    the removable singularity is cancelled exactly via :func:`specialize`.
    """
    n_int = _as_int(n)
    b = base_value(expr.family, x)
    e = (n_int if n_int is not None else n) - expr.k
    if n_int is not None and n_int >= 0 and e < 0 and abs(b) < POLE_THRESHOLD:
        return evaluate_specialized(specialize(expr.family, expr.k, n_int), x)
    n_eval = n_int if n_int is not None else n
    head = _power(b, e, n_int)
    if expr.form is Form.INTERMEDIATE:
        body = _poly_value(expr.poly, n_eval, cofunction_value(expr.family, x))
    else:
        body = _poly_value(expr.poly, n_eval, b)
        if expr.cofactor:
            body = body * cofunction_value(expr.family, x)
    return complex(head * body)


def specialize(family: Family | str, k: int, n: int,
               cache: PolySequenceCache | None = None) -> SpecializedExpression:
    """Exact final form at integer ``n``.

    For ``0 <= n < k`` the true derivative is entire, so the polynomial must be
    divisible by ``v**(k-n)``; the lowest power of ``v`` present is cancelled
    against the negative base exponent.
    """
    family = Family.parse(family)
    if _as_int(n) is None:
        raise ValueError(f"specialize needs an integer n, got {n!r}")
    n = int(n)
    values = final_poly(family, k, cache).at_n(n)
    exponent = n - k
    if n >= 0 and exponent < 0:
        if not values:
            exponent = 0
        else:
            low = min(values)
            if low < k - n:
                raise InternalCancellationFailure(
                    f"{family.value} k={k} n={n}: lowest power v^{low} cannot cancel v^{exponent}"
                )
            values = {p - low: c for p, c in values.items()}
            exponent += low
    dense = [0] * (max(values) + 1 if values else 0)
    for p, c in values.items():
        dense[p] = c
    return SpecializedExpression(family, n, k, exponent, bool(k % 2), tuple(dense))


def evaluate_specialized(spec: SpecializedExpression, x) -> complex:
    b = base_value(spec.family, x)
    head = _power(b, spec.reduced_exponent, spec.n)
    coeffs = {p: c for p, c in enumerate(spec.poly_v) if c}
    body = _exact_horner(coeffs, b)
    if body is None:
        body = sum(c * b**p for p, c in coeffs.items())
    if spec.cofactor:
        body = body * cofunction_value(spec.family, x)
    return complex(head * body)


def _zeros_distance(family: Family, x: float) -> float:
    """Distance from real ``x`` to the nearest real zero of the base function."""
    if family is Family.SIN:
        return abs(x - math.pi * round(x / math.pi))
    if family is Family.COS:
        y = x - math.pi / 2
        return abs(y - math.pi * round(y / math.pi))
    if family is Family.SINH:
        return abs(x)
    return math.inf


def default_step(k: int, pole_distance: float = math.inf) -> float:
    """Default finite-difference step for order ``k``.

    1e-2 up to fourth order, wider at orders 5 and 6 where round-off grows
    like ``eps / h**k``.  Near a singularity the step is further capped at
    ``pole_distance / 50``: the stencil's truncation error scales like
    ``(h / pole_distance)**4``.
    """
    return min(_DEFAULT_STEPS.get(k, 1e-2), pole_distance / POLE_STEP_RATIO)


def finite_difference(family: Family | str, n, k: int, x: float, h: float | None = None) -> float:
    """k-th derivative of ``base(x)**n`` by central differences.

    Uses the second-order central stencil
    ``sum_j (-1)^j C(k,j) f(x + (k/2 - j) h) / h^k`` at steps ``h`` and ``h/2``,
    combined by one Richardson step.  Real ``x`` only.

    When ``n`` is not a natural number the base's real zeros are singular
    points; ``x`` must stay at least ``10 h`` away from them.
    """
    family = Family.parse(family)
    if not 0 <= k <= MAX_FD_ORDER:
        raise ValueError(f"finite differences support 0 <= k <= {MAX_FD_ORDER}, got {k}")
    if isinstance(x, complex):
        if x.imag != 0:
            raise ValueError("finite differences need a real x")
        x = x.real
    n_int = _as_int(n)
    singular = n_int is None or n_int < 0
    dist = _zeros_distance(family, x) if singular else math.inf
    if h is None:
        h = default_step(k, dist)
        if h < MIN_STEP:
            raise PoleNearby(f"{family.value}(x) vanishes {dist:g} from x={x}")
    if h < MIN_STEP:
        raise StepTooSmall(f"step {h} is below {MIN_STEP}")
    if dist < 10 * h:
        raise PoleNearby(f"{family.value}(x) vanishes within {10 * h:g} of x={x}")
    fn = getattr(math, family.value)

    def f(t):
        b = fn(t)
        if n_int is not None:
            return b**n_int
        if b < 0:
            raise NonIntegerNeedsPositiveBase(f"{family.value}({t}) = {b} < 0")
        return b**n

    def stencil(step):
        total = math.fsum((-1) ** j * comb(k, j) * f(x + (k / 2 - j) * step) for j in range(k + 1))
        return total / step**k

    coarse = stencil(h)
    fine = stencil(h / 2)
    return (4 * fine - coarse) / 3
