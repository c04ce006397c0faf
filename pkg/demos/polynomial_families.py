"""Build the polynomial families and print the first few derivatives.

Run:  python demos/polynomial_families.py
"""
from trigpow import FAMILIES, build_expression, render_expression
from trigpow.families import final_poly, intermediate_poly

print("Intermediate polynomials (variable u is the co-function):")
for tag in "fgh":
    for k in range(4):
        poly = intermediate_poly(tag, k)
        print(f"  {tag}_{k}: degree {poly.degree}, leading {poly.lead}")
print()

# The same derivative in both forms, for every family.
for fam in FAMILIES:
    print(f"d^3/dx^3 {fam.value}^n(x)")
    for form in ("intermediate", "final"):
        print(f"  {form:>12}: {render_expression(build_expression(fam, 3, form))}")
print()

# Coefficients of the leading term of the final polynomial are +-n^k.
for k in range(6):
    q = final_poly("sin", k)
    print(f"s_{k}: leading coefficient {q.lead}")
