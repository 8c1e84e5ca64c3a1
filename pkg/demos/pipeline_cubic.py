#!/usr/bin/env python3
"""End-to-end walk through the 3x3 example: exact determinant curve, its
dual sextic, the singular points of the dual, and the verification report.
"""

from fractions import Fraction

from kippenhahn import (
    HermitianMatrix,
    HermitianPencil,
    PencilBody,
    VerifyConfig,
    dual_curve,
    pencil_det,
    real_singular_points,
    run_verification,
)

K = HermitianMatrix([[0, -1, 0], [-1, 0, 1], [0, 1, 0]])
L = HermitianMatrix(
    [
        [Fraction(-1, 4), Fraction(-1, 2), 1],
        [Fraction(-1, 2), Fraction(-1, 4), Fraction(-1, 2)],
        [1, Fraction(-1, 2), Fraction(-1, 4)],
    ]
)
pencil = HermitianPencil(K, L)

print("Step 1: the determinant curve of the pencil")
p = pencil_det(pencil)
print("  p =", p)
print("  homogeneous of degree", p.homogeneous_degree())

print()
print("Step 2: the dual curve, by eliminating the primal variables from the")
print("tangency ideal {p, grad p - y}")
q = dual_curve(p)
print("  q =", q)
print(f"  degree {q.total_degree}, {q.num_terms()} terms")

print()
print("Step 3: real singular points of the dual curve")
for s in real_singular_points(q):
    y1, y2 = s.float_coords()
    print(
        f"  ({y1:+.6f}, {y2:+.6f})  chart={s.chart}  isolated={s.isolated}"
        f"  multiplicity >= {s.multiplicity_hint}"
    )
print("  (the three cusps of the inner branch; all inside the numerical range)")

print()
print("Step 4: the verification pipeline")
report = run_verification(PencilBody(pencil, "cubic-demo"), VerifyConfig(resolution=360))
print(report.format_text())
print("overall:", "PASS" if report.passed else "FAIL")
