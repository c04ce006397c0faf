"""The four function families and their derivative polynomial sequences.

Differentiating ``base(x)**n`` ``k`` times gives, for every family,

    base(x)**(n - k) * P_k(n)(co(x))

where ``co`` is the co-function and ``P_k`` is one of three intermediate
sequences ``f``, ``g``, ``h`` built by

    P_0 = 1
    P_{k+1} = sign * ((n - k) * u * P_k + Q(u) * dP_k/du)

with ``sign = +1, -1, +1`` and ``Q = u^2 - 1, u^2 - 1, u^2 + 1`` for
``f, g, h``.  sin and sinh share ``f``; cos uses ``g``; cosh uses ``h``.

The final sequences (in the base value ``v``) come from rewriting even powers
of ``u`` through the Pythagorean identity of the family, after dividing by
``u`` when ``k`` is odd.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum

from .exactpoly import N, UPoly

__all__ = [
    "Family",
    "FAMILIES",
    "PolySequenceCache",
    "default_cache",
    "intermediate_poly",
    "recurrence_poly",
    "final_poly",
    "sequence_for",
    "final_name",
]


class Family(str, Enum):
    SIN = "sin"
    COS = "cos"
    SINH = "sinh"
    COSH = "cosh"

    @property
    def cofunction(self) -> str:
        return _COFUNCTION[self]

    @property
    def sequence(self) -> str:
        return _SEQUENCE[self]

    @property
    def substitution(self) -> tuple[int, int]:
        """``(alpha, beta)`` such that ``u**2 == alpha * v**2 + beta``."""
        return _SUBSTITUTION[self]

    @property
    def inverse_substitution(self) -> tuple[int, int]:
        """``(alpha, beta)`` such that ``v**2 == alpha * u**2 + beta``."""
        return _INVERSE[self]

    @property
    def hyperbolic(self) -> bool:
        return self in (Family.SINH, Family.COSH)

    @classmethod
    def parse(cls, value: Family | str) -> Family:
        if isinstance(value, Family):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown family {value!r}; expected one of sin, cos, sinh, cosh") from None


FAMILIES = tuple(Family)

_COFUNCTION = {Family.SIN: "cos", Family.COS: "sin", Family.SINH: "cosh", Family.COSH: "sinh"}
_SEQUENCE = {Family.SIN: "f", Family.COS: "g", Family.SINH: "f", Family.COSH: "h"}
# sin/cos: u^2 + v^2 = 1; sinh: u^2 - v^2 = 1; cosh: v^2 - u^2 = 1
_SUBSTITUTION = {Family.SIN: (-1, 1), Family.COS: (-1, 1), Family.SINH: (1, 1), Family.COSH: (1, -1)}
_INVERSE = {Family.SIN: (-1, 1), Family.COS: (-1, 1), Family.SINH: (1, -1), Family.COSH: (1, 1)}
_FINAL_NAME = {Family.SIN: "s", Family.COS: "c", Family.SINH: "t", Family.COSH: "d"}


@dataclass(frozen=True)
class _Rule:
    sign: int
    quadratic: UPoly


_U2_MINUS_1 = UPoly({2: 1, 0: -1})
_U2_PLUS_1 = UPoly({2: 1, 0: 1})
_RULES = {
    "f": _Rule(1, _U2_MINUS_1),
    "g": _Rule(-1, _U2_MINUS_1),
    "h": _Rule(1, _U2_PLUS_1),
}


def sequence_for(family: Family | str) -> str:
    return Family.parse(family).sequence


def final_name(family: Family | str) -> str:
    """Letter of the final sequence: ``s``, ``c``, ``t`` or ``d``."""
    return _FINAL_NAME[Family.parse(family)]


def _step(tag: str, k: int, p: UPoly) -> UPoly:
    rule = _RULES[tag]
    out = p.shift(1).scale(N - k) + rule.quadratic * p.derivative()
    return out if rule.sign > 0 else -out


class PolySequenceCache:
    """Memoised intermediate sequences.

    Lists only ever grow; an entry, once appended, is never replaced.  Readers
    take no lock; extension is serialised by ``_lock``.

    ``g`` is served as ``(-1)**k * f_k``.  The independently recurred ``g``
    lives under the key ``"g*"`` and is only filled on request through
    :meth:`recurrence`.
    """

    def __init__(self):
        self._seqs: dict[str, list[UPoly]] = {"f": [UPoly.one()], "h": [UPoly.one()], "g*": [UPoly.one()]}
        self._lock = threading.Lock()

    def _extend(self, key: str, k: int) -> UPoly:
        seq = self._seqs[key]
        if k < len(seq):
            return seq[k]
        tag = key.rstrip("*")
        with self._lock:
            while len(seq) <= k:
                j = len(seq) - 1
                seq.append(_step(tag, j, seq[j]))
        return seq[k]

    def get(self, tag: str, k: int) -> UPoly:
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        if tag == "g":
            f = self._extend("f", k)
            return f if k % 2 == 0 else -f
        if tag not in ("f", "h"):
            raise ValueError(f"unknown sequence {tag!r}")
        return self._extend(tag, k)

    def recurrence(self, tag: str, k: int) -> UPoly:
        """Compute ``tag`` through its own recurrence, never through an identity."""
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        if tag == "g":
            return self._extend("g*", k)
        if tag not in ("f", "h"):
            raise ValueError(f"unknown sequence {tag!r}")
        return self._extend(tag, k)

    def computed(self, key: str) -> int:
        return len(self._seqs[key])


default_cache = PolySequenceCache()


def _cache(cache: PolySequenceCache | None) -> PolySequenceCache:
    return default_cache if cache is None else cache


def intermediate_poly(tag: str, k: int, cache: PolySequenceCache | None = None) -> UPoly:
    """``f_k``, ``g_k`` or ``h_k`` as a polynomial in ``u``."""
    return _cache(cache).get(tag, k)


def recurrence_poly(tag: str, k: int, cache: PolySequenceCache | None = None) -> UPoly:
    return _cache(cache).recurrence(tag, k)


def final_poly(family: Family | str, k: int, cache: PolySequenceCache | None = None) -> UPoly:
    """``s_k``, ``c_k``, ``t_k`` or ``d_k`` as a polynomial in ``v``."""
    family = Family.parse(family)
    p = intermediate_poly(family.sequence, k, cache)
    if k % 2:
        p = p.div_u()
    return p.substitute_even(*family.substitution)


def unsubstitute(family: Family | str, q: UPoly, k: int) -> UPoly:
    """Invert :func:`final_poly`: rewrite ``v`` back to ``u`` (times ``u`` for odd ``k``)."""
    family = Family.parse(family)
    p = q.substitute_even(*family.inverse_substitution)
    return p.shift(1) if k % 2 else p


def leading_unit(p: UPoly) -> int:
    """Sign of the leading coefficient's top term (+1, -1, or 0 for zero)."""
    lead = p.lead.lead
    return (lead > 0) - (lead < 0)
