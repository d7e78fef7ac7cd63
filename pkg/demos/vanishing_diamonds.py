"""Vanishing diamond determinants in Plücker friezes and S-subfriezes.

Run: python demos/vanishing_diamonds.py
"""

from __future__ import annotations

from heronfrieze import (
    build_polygonal_frieze,
    build_s_subfrieze,
    check_diamond_determinants,
    check_s_diamonds,
    coordinate_matrix,
    extract_plucker_diamond,
    plucker_frieze,
    random_polygon,
)
from heronfrieze.grassmannian import det


def show(rows) -> None:
    for row in rows:
        print("    " + "  ".join(f"{'0' if e is None else 'p' + ''.join(map(str, e)):>5}" for e in row))


def main() -> None:
    hexagon = random_polygon(6, seed=3)
    M = coordinate_matrix(hexagon)

    D = extract_plucker_diamond(plucker_frieze(3, 6), 1, 4, 4)
    print("4x4 diamond of P(3,6) anchored at r=1, m=4:")
    show(D.entries)
    print("  determinant on a random hexagon:", D.determinant(M))

    for size in (3, 4):
        report = check_diamond_determinants(M, 3, size)
        print(f"  size {size}: {len(report.entries)} anchors, {len(report.nonzero)} nonzero")

    octagon = random_polygon(8, seed=8)
    sub = build_s_subfrieze(build_polygonal_frieze(octagon), "s-primary")
    print("\noctagon S-subfrieze diamond anchored at (1, 5):")
    for row in sub.diamond_triples(1, 5):
        print("    " + "  ".join("S" + "".join(map(str, t)) for t in row))
    print("  determinant:", det(sub.diamond(1, 5)))

    for variant in ("s-primary", "s-alternate"):
        report = check_s_diamonds(octagon, variant)
        print(f"  {variant}: {len(report.entries)} diamonds, all vanish and S-det = 16 m-det: {report.ok}")


if __name__ == "__main__":
    main()
