"""List the Heronian minor relations of a hexagon and check them exactly.

Run: python demos/hexagon_relations.py
"""

from __future__ import annotations

from heronfrieze import (
    brute_force_relations,
    coordinate_matrix,
    enumerate_relations,
    random_polygon,
    to_s_relation,
    verify_s_relation,
)
from heronfrieze.relations import canonical_set, relation_positions


def main() -> None:
    relations = enumerate_relations(6)
    print(f"{len(relations)} distinct Heronian minor relations for n = 6\n")

    P = random_polygon(6, seed=42)
    M = coordinate_matrix(P)
    for R in relations:
        S = to_s_relation(R)
        print(f"[{R.case_tag}] i={R.i_pair} j={R.j_tuple}")
        print(f"    {S}")
        print(f"    minor residual {R.evaluate(M)}, S residual {verify_s_relation(P, S)}")
        if R.aliases:
            print(f"    also spelled as {[(a.i_pair, a.j_tuple) for a in R.aliases]}")

    same = canonical_set(relations) == canonical_set(brute_force_relations(6))
    print("\nclassification agrees with exhaustive scan:", same)

    pos = relation_positions(((2, 3), (3, 4, 5, 6)), 6)
    print(f"\nrelation i=(2,3), j=(3,4,5,6) pairs diagonal x{pos.diagonal} with diamond {pos.diamond}:")
    for diag, diam in pos.pairs:
        print(f"    S{diag} * S{diam}")


if __name__ == "__main__":
    main()
