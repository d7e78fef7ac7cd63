"""Coordinate matrices, maximal minors and Plücker relations of Gr(k, n).

Plücker coordinates are evaluated directly as maximal minors of a k x n
matrix; no exterior-algebra machinery is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .geometry import Polygon, format_rational


def det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in rows]
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        pv = a[col][col]
        result *= pv
        for r in range(col + 1, size):
            factor = a[r][col] / pv
            if factor:
                row_r, row_c = a[r], a[col]
                for c in range(col + 1, size):
                    row_r[c] -= factor * row_c[c]
    return sign * result


class CoordinateMatrix:
    """A k x n matrix of rationals with 1-based column access and cached minors."""

    def __init__(self, rows: Sequence[Sequence]):
        self.entries: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(x) for x in row) for row in rows)
        self.k = len(self.entries)
        if self.k == 0:
            raise ValueError("matrix needs at least one row")
        self.n = len(self.entries[0])
        if any(len(row) != self.n for row in self.entries):
            raise ValueError("ragged matrix rows")
        if self.k > self.n:
            raise ValueError(f"need k <= n, got {self.k} x {self.n}")
        self._sorted_minors: Dict[Tuple[int, ...], Fraction] = {}

    def column(self, m: int) -> Tuple[Fraction, ...]:
        return tuple(row[m - 1] for row in self.entries)

    def rows(self, *which: int) -> "CoordinateMatrix":
        """Sub-matrix made of the given 1-based rows."""
        return CoordinateMatrix([self.entries[w - 1] for w in which])

    def sorted_minor(self, cols: Tuple[int, ...]) -> Fraction:
        value = self._sorted_minors.get(cols)
        if value is None:
            value = det([[row[c - 1] for c in cols] for row in self.entries])
            self._sorted_minors[cols] = value
        return value


def coordinate_matrix(P: Polygon) -> CoordinateMatrix:
    """3 x n matrix whose m-th column is (1, x_m, y_m)."""
    return CoordinateMatrix([
        [1] * P.n,
        [v.x for v in P.vertices],
        [v.y for v in P.vertices],
    ])


def plucker_normalize(t: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Sort an index tuple, returning the permutation sign (0 if an index repeats)."""
    t = tuple(t)
    s = tuple(sorted(t))
    if len(set(t)) < len(t):
        return s, 0
    inversions = sum(1 for a, b in combinations(range(len(t)), 2) if t[a] > t[b])
    return s, -1 if inversions % 2 else 1


def minor(M: CoordinateMatrix, cols: Sequence[int]) -> Fraction:
    """Determinant of the columns ``cols`` taken in the given order."""
    cols = tuple(cols)
    if len(cols) != M.k:
        raise ValueError(f"minor of a {M.k}-row matrix needs {M.k} columns, got {len(cols)}")
    for c in cols:
        if not isinstance(c, int) or not 1 <= c <= M.n:
            raise IndexError(f"column {c!r} outside 1..{M.n}")
    s, sign = plucker_normalize(cols)
    if sign == 0:
        return Fraction(0)
    return sign * M.sorted_minor(s)


@dataclass(frozen=True)
class PluckerTerm:
    sign: int
    left: Tuple[int, ...]
    right: Tuple[int, ...]

    def to_json(self) -> dict:
        return {"sign": self.sign, "left": list(self.left), "right": list(self.right)}


@dataclass(frozen=True)
class PluckerRelation:
    """sum_r (-1)^r p_{i, j_r} p_{j without j_r} = 0."""

    i_tuple: Tuple[int, ...]
    j_tuple: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.i_tuple) + 1

    @property
    def terms(self) -> Tuple[PluckerTerm, ...]:
        j = self.j_tuple
        return tuple(
            PluckerTerm((-1) ** r, self.i_tuple + (j[r],), j[:r] + j[r + 1:])
            for r in range(len(j))
        )


def generate_plucker_relations(k: int, n: int) -> List[PluckerRelation]:
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    idx = range(1, n + 1)
    return [PluckerRelation(i, j)
            for i in combinations(idx, k - 1)
            for j in combinations(idx, k + 1)]


def evaluate_relation(M: CoordinateMatrix, R: PluckerRelation) -> Fraction:
    if M.k != R.k:
        raise ValueError(f"relation for k={R.k} evaluated on a {M.k}-row matrix")
    return sum((t.sign * minor(M, t.left) * minor(M, t.right) for t in R.terms), Fraction(0))


def relation_to_json(R: PluckerRelation, value=None) -> dict:
    out = {"i": list(R.i_tuple), "j": list(R.j_tuple),
           "terms": [t.to_json() for t in R.terms]}
    if value is not None:
        out["value"] = format_rational(value)
    return out
