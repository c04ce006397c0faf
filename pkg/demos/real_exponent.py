"""Non-integer exponents and removable singularities.

For real n the polynomial identities still hold wherever the base is
positive; the binomial route needs a natural exponent and is skipped.  For
natural n at a zero of the base, ``specialize`` cancels the removable
singularity exactly.

Run:  python demos/real_exponent.py
"""
import math

from trigpow import (
    NegativeExponentUnsupported,
    binomial_derivative,
    build_expression,
    evaluate,
    finite_difference,
    specialize,
)
from trigpow.evaluator import evaluate_specialized

n, x = 2.5, 0.4
for k in range(4):
    exact = evaluate(build_expression("cosh", k), n, x).real
    fd = finite_difference("cosh", n, k, x)
    print(f"d^{k}/dx^{k} cosh^{n}(x) at {x}: {exact:.15f}   finite difference {fd:.15f}")

try:
    binomial_derivative("cosh", n, 1, x)
except NegativeExponentUnsupported as exc:
    print(f"binomial route: {exc}")
print()

# sin^2 has fourth derivative -8 cos(2x); at x = 0 the generic form would
# divide by sin(0)^2, the specialised one does not.
spec = specialize("sin", 4, 2)
print(f"specialised sin^2, k=4: exponent {spec.reduced_exponent}, polynomial coefficients {spec.poly_v}")
print(f"  value at 0: {evaluate_specialized(spec, 0.0).real}   (expected {-8 * math.cos(0.0)})")
print(f"  generic path at 0 delegates: {evaluate(build_expression('sin', 4), 2, 0.0).real}")
