"""The second-highest-power coefficient triangle (OEIS A133341).

The coefficient of ``u^(k-2)`` in ``f_k`` is a polynomial in ``n`` whose terms
occupy powers ``n^(k-1) .. n^1`` with alternating signs.  Their absolute
values form row ``k`` of a triangle that also arises as the product

    Pascal  x  (ones on diagonal and subdiagonal)  x  diag(1, 1, 2, 4, 8, ...)

with the left column removed.  Rows here are 1-based: row ``k`` has ``k``
entries and starts with ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import DegenerateRow
from .families import PolySequenceCache, intermediate_poly

__all__ = [
    "second_highest_coeffs",
    "product_matrix_row",
    "product_matrix",
    "verify_triangle",
    "TriangleReport",
    "REFERENCE_ROWS",
    "a133341",
]

# Rows 1..6 as typeset in the reference table.  Row 4 carries a misprint in
# its last entry (2); exact extraction gives 4.
REFERENCE_ROWS: tuple[tuple[int, ...], ...] = (
    (1,),
    (2, 1),
    (3, 3, 2),
    (4, 6, 8, 2),
    (5, 10, 20, 20, 8),
    (6, 15, 40, 60, 48, 16),
)


def second_highest_coeffs(k: int, cache: PolySequenceCache | None = None) -> list[int]:
    """Absolute coefficients (descending powers of ``n``) of ``u^(k-2)`` in ``f_k``.

    Raises ``AssertionError`` if the terms are not on consecutive powers
    ``n^(k-1) .. n^1`` with strictly alternating signs, negative on top.
    """
    if k < 2:
        raise DegenerateRow(f"f_{k} has no second-highest power")
    c = intermediate_poly("f", k, cache).coeff(k - 2)
    powers = c.nonzero_powers()
    if powers != list(range(1, k)):
        raise AssertionError(f"f_{k}: u^{k - 2} coefficient occupies n-powers {powers}")
    desc = list(reversed(c.coeffs[1:]))
    for i, a in enumerate(desc):
        expected = -1 if i % 2 == 0 else 1
        if (a > 0) - (a < 0) != expected:
            raise AssertionError(f"f_{k}: signs do not alternate from a negative top term: {desc}")
    return [abs(a) for a in desc]


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    size = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(size)) for j in range(size)] for i in range(size)]


def product_matrix(size: int) -> list[list[int]]:
    """The ``size x size`` lower-triangular product, built by explicit multiplication."""
    pascal = [[comb(i, j) for j in range(size)] for i in range(size)]
    bidiagonal = [[1 if j in (i, i - 1) else 0 for j in range(size)] for i in range(size)]
    powers = [[2 ** max(j - 1, 0) if i == j else 0 for j in range(size)] for i in range(size)]
    return _matmul(_matmul(pascal, bidiagonal), powers)


def product_matrix_row(k: int, rows_source: str = "closed") -> list[int]:
    """Row ``k`` (1-based) of the product matrix.

    ``rows_source="computed"`` multiplies the three matrices; ``"closed"``
    uses ``T(k, j) = (C(k-1, j) + C(k-1, j+1)) * 2**max(j-1, 0)``.
    """
    if k < 1:
        raise ValueError(f"rows are 1-based, got k={k}")
    if rows_source == "computed":
        return product_matrix(k)[k - 1][:k]
    if rows_source == "closed":
        i = k - 1
        return [(comb(i, j) + comb(i, j + 1)) * 2 ** max(j - 1, 0) for j in range(k)]
    raise ValueError(f"rows_source must be 'computed' or 'closed', got {rows_source!r}")


def a133341(rows: int) -> list[int]:
    """First ``rows`` rows of the triangle, flattened by rows."""
    return [t for k in range(1, rows + 1) for t in product_matrix_row(k)]


@dataclass
class TriangleReport:
    max_k: int
    checked: list[int] = field(default_factory=list)
    mismatches: list[tuple[int, list[int], list[int]]] = field(default_factory=list)
    reference_discrepancies: list[tuple[int, list[int], list[int]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when extraction and product agree on every checked row.

        Discrepancies against :data:`REFERENCE_ROWS` are reported but do not
        fail the check; the extraction is the ground truth.
        """
        return not self.mismatches

    def lines(self) -> list[str]:
        out = [f"rows 2..{self.max_k}: {len(self.checked)} checked, {len(self.mismatches)} mismatched"]
        for k, product, extracted in self.mismatches:
            out.append(f"MISMATCH row {k}: product {product[1:]} vs extracted {extracted}")
        for k, shown, exact in self.reference_discrepancies:
            out.append(f"NOTE row {k}: reference table shows {shown}, exact value is {exact}")
        return out


def verify_triangle(max_k: int, cache: PolySequenceCache | None = None) -> TriangleReport:
    """Compare extracted rows with product rows for ``2 <= k <= max_k``."""
    if max_k < 2:
        raise ValueError("max_k must be at least 2")
    report = TriangleReport(max_k)
    for k in range(2, max_k + 1):
        product = product_matrix_row(k, "computed")
        closed = product_matrix_row(k, "closed")
        extracted = second_highest_coeffs(k, cache)
        report.checked.append(k)
        if product != closed or product[1:] != extracted:
            report.mismatches.append((k, product, extracted))
    for k, shown in enumerate(REFERENCE_ROWS[:max_k], start=1):
        exact = product_matrix_row(k)
        if k >= 2:
            exact = [k] + second_highest_coeffs(k, cache)
        if list(shown) != exact:
            report.reference_discrepancies.append((k, list(shown), exact))
    return report
