"""Evaluate one derivative through every available route and compare.

The polynomial forms, the binomial/exponential sum and a finite-difference
estimate are independent; agreement between them is the point of the demo.

Run:  python demos/three_way_evaluation.py
"""
from trigpow import binomial_derivative, build_expression, evaluate, finite_difference
from trigpow.checks import rel_diff

family, n, k = "cos", 5, 4
final = build_expression(family, k, "final")
inter = build_expression(family, k, "intermediate")

print(f"d^{k}/dx^{k} {family}^{n}(x)\n")
print(f"{'x':>10}  {'value (final form)':>40}  {'vs intermediate':>15}  {'vs binomial':>11}  {'vs fd':>7}")
for x in (0.3, 1.1, -2.0, 0.4 + 0.2j):
    a = evaluate(final, n, x)
    b = evaluate(inter, n, x)
    c = binomial_derivative(family, n, k, x)
    # finite differences only make sense on the real line
    fd = "-" if isinstance(x, complex) else f"{rel_diff(finite_difference(family, n, k, x), a):.0e}"
    value = f"{a.real:.15g}" if a.imag == 0 else f"{a:.12g}"
    print(f"{x!s:>10}  {value:>40}  {rel_diff(a, b):>15.1e}  {rel_diff(a, c):>11.1e}  {fd:>7}")
