"""The verification suite behind ``trigpow check``.

Every check is deterministic: evaluation happens on a fixed grid unless a
seed is supplied, in which case extra random points are added.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .closedform import binomial_derivative
from .errors import TrigPowError
from .evaluator import Form, build_expression, evaluate, finite_difference
from .exactpoly import NPoly
from .families import (
    FAMILIES,
    Family,
    PolySequenceCache,
    final_poly,
    intermediate_poly,
    recurrence_poly,
    unsubstitute,
)
from .reference import golden_latex, golden_text
from .render import render_expression
from .triangle import verify_triangle

__all__ = [
    "REAL_GRID",
    "COMPLEX_GRID",
    "rel_diff",
    "CheckGroup",
    "final_lead_sign",
    "check_structure",
    "check_golden",
    "check_evaluation",
    "check_oracle",
    "check_triangle",
    "run_checks",
    "all_passed",
    "summary_lines",
]

REAL_GRID = (1.7, -1.7, 0.9, -0.9, 0.3, -0.3, 0.1)
COMPLEX_GRID = (0.3 + 0.4j, -1 + 0.25j)
FD_TOLERANCE = 1e-5
FD_MAX_K = 4


def rel_diff(a, b) -> float:
    """``|a - b| / max(1, |a|, |b|)``: relative, with unit floor near zero."""
    return abs(a - b) / max(1.0, abs(a), abs(b))


@dataclass
class CheckGroup:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, label: str):
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    @property
    def total(self) -> int:
        return self.passed + len(self.failures)


def final_lead_sign(family: Family, k: int) -> int:
    if family in (Family.SINH, Family.COSH):
        return 1
    r = k % 4
    if family is Family.SIN:
        return 1 if r in (0, 1) else -1
    return 1 if r in (0, 3) else -1


def check_structure(max_k: int, cache: PolySequenceCache | None = None) -> CheckGroup:
    g = CheckGroup("structure")
    for k in range(max_k + 1):
        f = intermediate_poly("f", k, cache)
        for tag in ("f", "g", "h"):
            p = recurrence_poly(tag, k, cache)
            sign = (-1) ** k if tag == "g" else 1
            g.record(p.degree == k, f"{tag}_{k}: degree {p.degree} != {k}")
            g.record(p.lead == NPoly.monomial(sign, k), f"{tag}_{k}: leading coefficient {p.lead}")
            g.record(all((r - k) % 2 == 0 for r in p.powers()), f"{tag}_{k}: parity broken")
            for r in p.powers():
                g.record(p.coeff(r).degree == (k + r) // 2, f"{tag}_{k}: u^{r} coefficient degree")
            if k >= 1:
                g.record(not p.at_n(0), f"{tag}_{k}: nonzero at n = 0")
        g.record(recurrence_poly("g", k, cache) == (f if k % 2 == 0 else -f), f"g_{k} != (-1)^k f_{k}")
        s = final_poly(Family.SIN, k, cache)
        c = final_poly(Family.COS, k, cache)
        g.record(c == (s if k % 2 == 0 else -s), f"c_{k} != (-1)^k s_{k}")
        for fam in FAMILIES:
            q = final_poly(fam, k, cache)
            want = k if k % 2 == 0 else k - 1
            g.record(q.degree == want, f"{fam.value} final k={k}: degree {q.degree}")
            g.record(all(p % 2 == 0 for p in q.powers()), f"{fam.value} final k={k}: odd power")
            lead = NPoly.monomial(final_lead_sign(fam, k), k)
            g.record(q.lead == lead, f"{fam.value} final k={k}: leading coefficient {q.lead}")
            back = unsubstitute(fam, q, k)
            g.record(back == intermediate_poly(fam.sequence, k, cache), f"{fam.value} k={k}: round trip")
    return g


def check_golden(max_k: int, cache: PolySequenceCache | None = None) -> CheckGroup:
    g = CheckGroup("golden")
    for fam in FAMILIES:
        for k in range(min(max_k, 6) + 1):
            for form in Form:
                expr = build_expression(fam, k, form, cache)
                key = f"{fam.value} k={k} {form.value}"
                g.record(render_expression(expr, "latex") == golden_latex(fam.value, k, form.value), key + " latex")
                g.record(render_expression(expr, "text") == golden_text(fam.value, k, form.value), key + " text")
    return g


def _points(seed: int | None):
    pts = list(REAL_GRID) + list(COMPLEX_GRID)
    if seed is not None:
        rng = random.Random(seed)
        pts += [rng.uniform(-2, 2) for _ in range(3)]
        pts += [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(2)]
    return pts


def check_evaluation(max_k: int, max_n: int, tolerance: float, seed: int | None = None,
                     cache: PolySequenceCache | None = None) -> CheckGroup:
    g = CheckGroup("evaluation")
    pts = _points(seed)
    for fam in FAMILIES:
        for k in range(max_k + 1):
            ef = build_expression(fam, k, Form.FINAL, cache)
            ei = build_expression(fam, k, Form.INTERMEDIATE, cache)
            for n in range(max_n + 1):
                for x in pts:
                    label = f"{fam.value} n={n} k={k} x={x}"
                    a = evaluate(ef, n, x)
                    b = evaluate(ei, n, x)
                    c = binomial_derivative(fam, n, k, x)
                    g.record(rel_diff(a, b) <= tolerance, label + f": final vs intermediate {rel_diff(a, b):.3g}")
                    g.record(rel_diff(a, c) <= tolerance, label + f": final vs binomial {rel_diff(a, c):.3g}")
                    if not isinstance(x, complex) and not fam.hyperbolic:
                        g.record(abs(c.imag) <= tolerance * (1 + abs(c.real)), label + ": imaginary residue")
    return g


def check_oracle(max_k: int, max_n: int, cache: PolySequenceCache | None = None) -> CheckGroup:
    g = CheckGroup("oracle")
    for fam in FAMILIES:
        for k in range(min(max_k, FD_MAX_K) + 1):
            ef = build_expression(fam, k, Form.FINAL, cache)
            for n in range(max_n + 1):
                for x in REAL_GRID:
                    a = evaluate(ef, n, x).real
                    b = finite_difference(fam, n, k, x)
                    d = rel_diff(a, b)
                    g.record(d <= FD_TOLERANCE, f"{fam.value} n={n} k={k} x={x}: fd {d:.3g}")
    return g


def check_triangle(max_k: int, cache: PolySequenceCache | None = None) -> tuple[CheckGroup, list[str]]:
    g = CheckGroup("triangle")
    report = verify_triangle(max(max_k, 2), cache)
    g.passed = len(report.checked) - len(report.mismatches)
    g.failures = [line for line in report.lines() if line.startswith("MISMATCH")]
    notes = [line for line in report.lines() if line.startswith("NOTE")]
    return g, notes


def _guarded(name: str, fn, *args) -> CheckGroup:
    try:
        return fn(*args)
    except (TrigPowError, AssertionError, ArithmeticError, ValueError) as exc:
        broken = CheckGroup(name)
        broken.failures.append(f"{name} raised {type(exc).__name__}: {exc}")
        return broken


def run_checks(max_k: int = 12, max_n: int = 8, tolerance: float = 1e-9, seed: int | None = None,
               cache: PolySequenceCache | None = None) -> tuple[list[CheckGroup], list[str]]:
    """Run every group; returns the groups and informational notes."""
    groups = [
        _guarded("structure", check_structure, max_k, cache),
        _guarded("golden", check_golden, max_k, cache),
        _guarded("evaluation", check_evaluation, max_k, max_n, tolerance, seed, cache),
        _guarded("oracle", check_oracle, max_k, max_n, cache),
    ]
    notes: list[str] = []
    try:
        tri, notes = check_triangle(max_k, cache)
    except (TrigPowError, AssertionError) as exc:
        tri = CheckGroup("triangle", failures=[f"triangle raised {type(exc).__name__}: {exc}"])
    groups.append(tri)
    return groups, notes


def all_passed(groups: list[CheckGroup]) -> bool:
    return all(not grp.failures for grp in groups)


def summary_lines(groups: list[CheckGroup]) -> list[str]:
    lines = []
    for grp in groups:
        status = "PASS" if not grp.failures else "FAIL"
        lines.append(f"{status} {grp.name}: {grp.passed}/{grp.total}")
    return lines

