"""Binomial-sum closed forms for the derivatives, from the exponential definitions.

Writing each base function through exponentials and expanding the n-th power
with the binomial theorem gives, for natural ``n``,

    sin:   (-1)^n / 2^n * sum_r (-1)^r C(n,r) (2r-n)^k i^(k-n) e^{i(2r-n)x}
    cos:       1 / 2^n * sum_r         C(n,r) (2r-n)^k i^k     e^{i(2r-n)x}
    sinh:  (-1)^n / 2^n * sum_r (-1)^r C(n,r) (2r-n)^k          e^{(2r-n)x}
    cosh:      1 / 2^n * sum_r         C(n,r) (2r-n)^k          e^{(2r-n)x}

This module shares no code with the polynomial construction, so it can serve
as an independent check of it.
"""

from __future__ import annotations

import cmath
import math
from math import comb

from .errors import NegativeExponentUnsupported
from .families import Family

__all__ = ["exp_power_derivative", "binomial_derivative", "binomial_weights"]

_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


def _ipow(e: int) -> complex:
    return _I_POWERS[e % 4]


def _is_real(x) -> bool:
    return not isinstance(x, complex) or x.imag == 0


def exp_power_derivative(n: int, k: int, x) -> complex:
    """k-th derivative of ``exp(x)**n``: ``n**k * exp(n*x)``, with ``0**0 == 1``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    scale = n**k  # int power: 0**0 == 1
    if _is_real(x):
        return complex(scale * math.exp(n * complex(x).real), 0.0)
    return scale * cmath.exp(n * x)


def binomial_weights(n: int) -> list[int]:
    """Exact ``C(n, r)`` for ``r = 0..n``; checks that they sum to ``2**n``."""
    w = [comb(n, r) for r in range(n + 1)]
    if sum(w) != 2**n:
        raise AssertionError("binomial row does not sum to 2**n")
    return w


def binomial_derivative(family: Family | str, n: int, k: int, x) -> complex:
    """Evaluate the k-th derivative of ``base(x)**n`` through the binomial sum."""
    family = Family.parse(family)
    if isinstance(n, bool) or int(n) != n:
        raise NegativeExponentUnsupported(f"binomial form needs a natural exponent, got {n!r}")
    n = int(n)
    if n < 0:
        raise NegativeExponentUnsupported(f"binomial form needs n >= 0, got {n}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    alternating = family in (Family.SIN, Family.SINH)
    weights = binomial_weights(n)
    prefactor = (-1) ** n if alternating else 1

    if family.hyperbolic and _is_real(x):
        xr = complex(x).real
        total = 0.0
        for r, c in enumerate(weights):
            m = 2 * r - n
            sgn = (-1) ** r if alternating else 1
            total += sgn * c * m**k * math.exp(m * xr)
        return complex(prefactor * total / 2**n, 0.0)

    x = complex(x)
    if family.hyperbolic:
        unit = 1 + 0j
        rot = 1
    else:
        unit = _ipow(k - n) if family is Family.SIN else _ipow(k)
        rot = 1j
    total = 0j
    for r, c in enumerate(weights):
        m = 2 * r - n
        sgn = (-1) ** r if alternating else 1
        total += sgn * c * m**k * cmath.exp(rot * m * x)
    return prefactor * unit * total / 2**n
