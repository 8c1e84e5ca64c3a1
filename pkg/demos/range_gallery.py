#!/usr/bin/env python3
"""Sampling gallery: boundary clouds, full eigenvector-branch clouds, convex
hulls and Hausdorff distances for a few small pencils, with SVG/CSV export.

Writes into ./gallery_out (override with the first argument).
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

from kippenhahn import (
    GaussianRational,
    HermitianMatrix,
    HermitianPencil,
    convex_hull,
    hausdorff,
    sample_kippenhahn_curve,
    sample_numrange_boundary,
)
from kippenhahn.svgfig import render_kippenhahn

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "gallery_out")
out_dir.mkdir(parents=True, exist_ok=True)
rng = random.Random(2)


def random_pencil(n):
    def herm():
        m = [[GaussianRational(0)] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = GaussianRational(Fraction(rng.randint(-4, 4), 2))
            for j in range(i + 1, n):
                z = GaussianRational(
                    Fraction(rng.randint(-4, 4), 2), Fraction(rng.randint(-4, 4), 2)
                )
                m[i][j] = z
                m[j][i] = z.conjugate()
        return HermitianMatrix(m)

    return HermitianPencil(herm(), herm())


m = 480
for n in (2, 3, 4):
    pencil = random_pencil(n)
    cloud = sample_kippenhahn_curve(pencil, m)
    boundary = [y for _, y, _ in sample_numrange_boundary(pencil, m)]
    hull = convex_hull(cloud.points)
    d = hausdorff(hull, boundary)
    print(
        f"n={n}: {len(cloud)} branch samples, hull has {len(hull)} vertices, "
        f"Hausdorff(hull, boundary) = {d:.2e}"
    )
    svg = render_kippenhahn(
        cloud.points,
        boundary_points=boundary,
        caption=f"n={n} random pencil: branch cloud vs boundary",
    )
    (out_dir / f"random_n{n}.svg").write_text(svg)
    (out_dir / f"random_n{n}.csv").write_text(cloud.to_csv())

print(f"wrote SVG/CSV files into {out_dir}/")
