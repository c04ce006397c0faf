"""Exact polynomials in the exponent ``n`` and in a co-function variable ``u``.

:class:`NPoly` is a dense univariate polynomial in ``n`` with Python ``int``
coefficients, stored in ascending order of power.  :class:`UPoly` is a sparse
polynomial in ``u`` (or ``v``) whose coefficients are :class:`NPoly` values.

Both types are immutable and hashable.  Arithmetic never rounds: Python
integers have unbounded magnitude, which matters because the coefficients of
the derivative polynomials grow super-exponentially with the derivative order.
"""

from __future__ import annotations

from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import NotDivisible, OddPowerPresent

__all__ = ["NPoly", "UPoly", "N"]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class NPoly:
    """Polynomial in ``n`` with exact integer coefficients.

    ``NPoly((0, -4, 8, -6))`` is ``-6 n^3 + 8 n^2 - 4 n``.  The zero polynomial
    has no coefficients and degree ``-1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for a in c:
            if not isinstance(a, int) or isinstance(a, bool):
                raise TypeError(f"NPoly coefficients must be int, got {a!r}")
        self._c = c

    @classmethod
    def constant(cls, value: int) -> NPoly:
        return cls((value,))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> NPoly:
        return cls((0,) * power + (coeff,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lead(self) -> int:
        """Coefficient of the highest power (0 for the zero polynomial)."""
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def nonzero_powers(self) -> list[int]:
        return [p for p, a in enumerate(self._c) if a]

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = NPoly.constant(other)
        if not isinstance(other, NPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(("NPoly", self._c))

    def __add__(self, other) -> NPoly:
        other = _as_npoly(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, x in enumerate(b):
            res[i] += x
        return NPoly(res)

    __radd__ = __add__

    def __neg__(self) -> NPoly:
        return NPoly(-a for a in self._c)

    def __sub__(self, other) -> NPoly:
        other = _as_npoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> NPoly:
        return (-self) + other

    def __mul__(self, other) -> NPoly:
        other = _as_npoly(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return NPoly()
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return NPoly(res)

    __rmul__ = __mul__

    def __call__(self, n):
        """Evaluate at ``n`` by Horner's rule.

        Exact for ``int`` and ``Fraction`` arguments; floats and complex
        numbers give floating results.
        """
        acc = 0
        for a in reversed(self._c):
            acc = acc * n + a
        return acc

    def __repr__(self) -> str:
        return f"NPoly({self._c!r})"

    def __str__(self) -> str:
        from .render import format_npoly

        return format_npoly(self)


def _as_npoly(x) -> NPoly | None:
    if isinstance(x, NPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return NPoly.constant(x)
    return None


N = NPoly((0, 1))
"""The polynomial ``n`` itself."""


Coeff = Union[NPoly, int]


class UPoly:
    """Polynomial in ``u`` whose coefficients are :class:`NPoly`.

    ``terms`` maps each power of ``u`` to a nonzero coefficient.  The zero
    polynomial has no terms and degree ``-1``.
    """

    __slots__ = ("_t", "_key")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        t: dict[int, NPoly] = {}
        for p, c in (terms or {}).items():
            if p < 0:
                raise ValueError(f"negative power {p}")
            c = _as_npoly(c)
            if c is None:
                raise TypeError("UPoly coefficients must be NPoly or int")
            if c:
                t[p] = c
        self._t = dict(sorted(t.items()))
        self._key = tuple(self._t.items())

    @classmethod
    def one(cls) -> UPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: Coeff, power: int) -> UPoly:
        return cls({power: coeff})

    @property
    def terms(self) -> Mapping[int, NPoly]:
        return MappingProxyType(self._t)

    @property
    def degree(self) -> int:
        return max(self._t) if self._t else -1

    @property
    def lead(self) -> NPoly:
        return self._t[self.degree] if self._t else NPoly()

    def coeff(self, power: int) -> NPoly:
        return self._t.get(power, NPoly())

    def powers(self) -> list[int]:
        return list(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(("UPoly", self._key))

    def __add__(self, other: UPoly) -> UPoly:
        if not isinstance(other, UPoly):
            return NotImplemented
        res = dict(self._t)
        for p, c in other._t.items():
            res[p] = res[p] + c if p in res else c
        return UPoly(res)

    def __neg__(self) -> UPoly:
        return UPoly({p: -c for p, c in self._t.items()})

    def __sub__(self, other: UPoly) -> UPoly:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> UPoly:
        if isinstance(other, (NPoly, int)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        res: dict[int, NPoly] = {}
        for p, a in self._t.items():
            for q, b in other._t.items():
                res[p + q] = res.get(p + q, NPoly()) + a * b
        return UPoly(res)

    def __rmul__(self, other) -> UPoly:
        if isinstance(other, (NPoly, int)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Coeff) -> UPoly:
        c = _as_npoly(c)
        return UPoly({p: a * c for p, a in self._t.items()})

    def shift(self, by: int = 1) -> UPoly:
        """Multiply by ``u**by``."""
        return UPoly({p + by: a for p, a in self._t.items()})

    def derivative(self) -> UPoly:
        """Formal derivative with respect to ``u``."""
        return UPoly({p - 1: a * p for p, a in self._t.items() if p})

    def div_u(self) -> UPoly:
        """Exact quotient by ``u``; raises :class:`NotDivisible` on a constant term."""
        if 0 in self._t:
            raise NotDivisible(f"constant term {self._t[0]} present")
        return UPoly({p - 1: a for p, a in self._t.items()})

    def substitute_even(self, alpha: int, beta: int) -> UPoly:
        """Replace every ``u**(2m)`` with ``(alpha*v**2 + beta)**m``.

        ``alpha`` and ``beta`` must each be -1, 0 or 1.  The result is a
        polynomial in ``v`` with only even powers.
        """
        if alpha not in (-1, 0, 1) or beta not in (-1, 0, 1):
            raise ValueError("alpha and beta must be in {-1, 0, 1}")
        odd = [p for p in self._t if p % 2]
        if odd:
            raise OddPowerPresent(f"odd powers of u present: {odd}")
        res: dict[int, NPoly] = {}
        for p, c in self._t.items():
            m = p // 2
            for j in range(m + 1):
                w = comb(m, j) * alpha**j * beta ** (m - j)
                if w:
                    res[2 * j] = res.get(2 * j, NPoly()) + c * w
        return UPoly(res)

    def at_n(self, n) -> dict[int, object]:
        """Specialise every coefficient at ``n``; zero values are dropped."""
        out = {}
        for p, c in self._t.items():
            val = c(n)
            if val != 0:
                out[p] = val
        return out

    def __call__(self, n, u):
        """Evaluate at exponent ``n`` and variable value ``u``."""
        if not self._t:
            return 0
        acc = 0
        for p in range(self.degree, -1, -1):
            acc = acc * u
            c = self._t.get(p)
            if c is not None:
                acc = acc + c(n)
        return acc

    def __repr__(self) -> str:
        inner = ", ".join(f"{p}: {c!r}" for p, c in self._t.items())
        return f"UPoly({{{inner}}})"
