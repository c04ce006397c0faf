"""The second-highest coefficients of f_k form an integer triangle.

Each row is also a row of a product of three simple matrices (Pascal, a
bidiagonal of ones, and a diagonal of powers of two).  This script prints
both side by side and flags the one row where a commonly reproduced table
differs from the exact values.

Run:  python demos/pascal_triangle.py [ROWS]
"""
import sys

from trigpow.triangle import REFERENCE_ROWS, product_matrix, second_highest_coeffs, verify_triangle

rows = int(sys.argv[1]) if len(sys.argv) > 1 else 8

matrix = product_matrix(rows)
for k in range(1, rows + 1):
    product = matrix[k - 1][:k]
    extracted = second_highest_coeffs(k) if k > 1 else []
    mark = "" if product[1:] == extracted else "   <-- mismatch"
    print(f"{k:>3}  {' '.join(f'{v:>5}' for v in product)}{mark}")

print()
report = verify_triangle(max(rows, len(REFERENCE_ROWS)))
for line in report.lines():
    print(line)
print("extraction agrees with the matrix product" if report.ok else "extraction DISAGREES")
