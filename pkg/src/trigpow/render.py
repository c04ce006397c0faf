"""Text, LaTeX and JSON rendering of derivative expressions.

Layout follows the usual printed convention for these tables::

    -sin^(n-2)(x) [n^2 sin^2(x) + (-n^2 + n)]

Terms run in descending powers.  A coefficient with several terms is
parenthesised; a single-term coefficient folds its sign into the joining
``+``/``-``.  When the leading coefficient has leading sign -1, the minus is
pulled outside the whole expression (display only).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .evaluator import DerivativeExpression, Form
from .exactpoly import NPoly, UPoly
from .families import Family, leading_unit

__all__ = [
    "RenderOptions",
    "format_npoly",
    "format_bracket",
    "render_expression",
    "render_json",
    "parse_json",
]

FORMATS = ("text", "latex", "json")


@dataclass(frozen=True)
class RenderOptions:
    format: str = "text"
    factor_minus_one: bool = True

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")


def _monomial(a: int, q: int) -> str:
    if q == 0:
        return str(a)
    var = "n" if q == 1 else f"n^{q}"
    if a == 1:
        return var
    if a == -1:
        return "-" + var
    return f"{a} {var}"


def format_npoly(p: NPoly) -> str:
    """``-6 n^3 + 8 n^2 - 4 n`` style, descending powers."""
    terms = [(q, a) for q, a in reversed(list(enumerate(p.coeffs))) if a]
    if not terms:
        return "0"
    out = _monomial(terms[0][1], terms[0][0])
    for q, a in terms[1:]:
        out += (" + " if a > 0 else " - ") + _monomial(abs(a), q)
    return out


def _func(name: str, power: int, latex: bool) -> str:
    name = "\\" + name if latex else name
    return f"{name}(x)" if power == 1 else f"{name}^{power}(x)"


def format_bracket(p: UPoly, var: str, latex: bool = False) -> str:
    """Contents of the bracket: ``p`` as a polynomial in ``var(x)``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, power in enumerate(sorted(p.powers(), reverse=True)):
        c = p.coeff(power)
        fn = _func(var, power, latex) if power else ""
        single = len(c.nonzero_powers()) == 1
        if single:
            q = c.degree
            a = c.lead
            if i == 0:
                coef = _monomial(a, q)
                sep = ""
            else:
                coef = _monomial(abs(a), q)
                sep = " + " if a > 0 else " - "
            if fn and q == 0 and abs(a) == 1:
                coef = coef[:-1]  # "-1 cos(x)" -> "-cos(x)"
                body = coef + fn
            else:
                body = f"{coef} {fn}" if fn else coef
        else:
            sep = "" if i == 0 else " + "
            body = f"({format_npoly(c)}) {fn}" if fn else f"({format_npoly(c)})"
        parts.append(sep + body)
    return "".join(parts)


def render_expression(expr: DerivativeExpression, opts: RenderOptions | str = "text") -> str:
    if isinstance(opts, str):
        opts = RenderOptions(format=opts)
    if opts.format == "json":
        return render_json(expr)
    latex = opts.format == "latex"
    fam = expr.family
    poly = expr.poly
    sign = ""
    if opts.factor_minus_one and leading_unit(poly) < 0:
        poly = -poly
        sign = "-"
    var = fam.cofunction if expr.form is Form.INTERMEDIATE else fam.value
    if latex:
        head = f"{sign}\\{fam.value}^{{n-{expr.k}}}(x)"
    else:
        head = f"{sign}{fam.value}^(n-{expr.k})(x)"
    if expr.cofactor:
        head += " " + _func(fam.cofunction, 1, latex)
    body = format_bracket(poly, var, latex)
    if latex:
        return f"{head} \\bigl[{body}\\bigr]"
    return f"{head} [{body}]"


def render_json(expr: DerivativeExpression) -> str:
    """Canonical JSON; coefficients are decimal strings so large integers survive."""
    terms = [
        {"power": p, "coeff_n": [str(a) for a in expr.poly.coeff(p).coeffs]}
        for p in sorted(expr.poly.powers(), reverse=True)
    ]
    obj = {
        "family": expr.family.value,
        "k": expr.k,
        "form": expr.form.value,
        "cofactor": expr.cofactor,
        "terms": terms,
    }
    return json.dumps(obj, separators=(",", ":"))


def parse_json(text: str) -> DerivativeExpression:
    obj = json.loads(text)
    poly = UPoly({t["power"]: NPoly(int(a) for a in t["coeff_n"]) for t in obj["terms"]})
    return DerivativeExpression(
        family=Family.parse(obj["family"]),
        k=int(obj["k"]),
        form=Form(obj["form"]),
        cofactor=bool(obj["cofactor"]),
        poly=poly,
    )
