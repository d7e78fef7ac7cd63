"""Walk through the Heronian frieze of the unit square and a random hexagon.

Run: python demos/unit_square_frieze.py
"""

from __future__ import annotations

from heronfrieze import (
    Polygon,
    build_polygonal_frieze,
    extract_diamond,
    is_heronian_diamond,
    random_polygon,
    verify_frieze,
)
from heronfrieze.heronian import EQUATIONS, is_equilateral


def main() -> None:
    square = Polygon.from_coords([(0, 0), (1, 0), (1, 1), (0, 1)])
    F = build_polygonal_frieze(square)
    print("unit square: z13 =", F.z(1, 3), " S123 =", F.S(1, 2, 3))

    D = extract_diamond(F, (1, 2, 3, 4))
    print("diamond 1234 (a..s):", [str(v) for v in D.as_tuple()])
    for name, residual in zip(EQUATIONS, is_heronian_diamond(D).residuals):
        print(f"  {name}: residual {residual}")
    print("equilateral:", is_equilateral(F))

    # the same checks over every diamond of a random rational hexagon
    hexagon = random_polygon(6, seed=1, bound=5)
    report = verify_frieze(build_polygonal_frieze(hexagon))
    print(f"\nrandom hexagon: {report.diamonds_checked} diamonds checked, ok = {report.ok}")

    broken = build_polygonal_frieze(hexagon).perturbed((2, 3, 5))
    bad = verify_frieze(broken)
    print(f"after S235 += 1: {len(bad.failures)} failing equations, first at diamond "
          f"{bad.failures[0].label} ({bad.failures[0].equation})")


if __name__ == "__main__":
    main()
