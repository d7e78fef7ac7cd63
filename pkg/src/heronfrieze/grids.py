"""Plücker friezes, Heronian minor friezes and S-subfriezes.

Grids store one fundamental domain of n rows; index arithmetic is always
modulo n with representatives 1..n. Diamonds are square matrices read off a
grid, and the sweeps here evaluate their determinants exactly over every
admissible anchor.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Dict, List, Optional, Tuple

from .geometry import Polygon, format_rational, wrap
from .grassmannian import CoordinateMatrix, coordinate_matrix, det, minor, plucker_normalize
from .heronian import HeronianFrieze, build_polygonal_frieze

VARIANTS = ("s-primary", "s-alternate")


def interval(r: int, length: int, n: int) -> Tuple[int, ...]:
    """The cyclic interval {r, r+1, ..., r+length-1} mod n."""
    return tuple(wrap(r + t, n) for t in range(length))


def plucker_index(a: int, b: int, k: int, n: int) -> Optional[Tuple[int, ...]]:
    """Sorted index of p_{o([a]^{k-1}, b)}, or None for a repeated index (zero entry)."""
    cols = interval(a, k - 1, n) + (wrap(b, n),)
    s, sign = plucker_normalize(cols)
    return None if sign == 0 else s


@dataclass(frozen=True)
class PluckerFrieze:
    """Symbolic Plücker frieze of type (k, n).

    Grid position (r, m), m in 1..n+k-1, holds p_{o([r']^{k-1}, m')} with r'
    the reduction of r and m' that of m + r' - 1.
    """

    k: int
    n: int

    @property
    def height(self) -> int:
        return self.n + self.k - 1

    def entry(self, r: int, m: int) -> Optional[Tuple[int, ...]]:
        if not 1 <= m <= self.height:
            raise IndexError(f"grid row {m} outside 1..{self.height}")
        rr = wrap(r, self.n)
        return plucker_index(rr, m + rr - 1, self.k, self.n)

    def raw_entry(self, r: int, m: int) -> Tuple[int, ...]:
        """The (possibly repeating) index tuple o([r']^{k-1}, m') before zeroing."""
        rr = wrap(r, self.n)
        return tuple(sorted(interval(rr, self.k - 1, self.n) + (wrap(m + rr - 1, self.n),)))

    def value(self, r: int, m: int, M: CoordinateMatrix) -> Fraction:
        idx = self.entry(r, m)
        return Fraction(0) if idx is None else M.sorted_minor(idx)


def plucker_frieze(k: int, n: int) -> PluckerFrieze:
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    if 2 * k > n:
        warnings.warn(f"P({k},{n}) lies outside the range 2 <= k <= n/2", RuntimeWarning)
    return PluckerFrieze(k, n)


@dataclass(frozen=True)
class FriezeDiamond:
    """A size x size diamond anchored at (r, m); ``entries[i][j]`` is a sorted index or None."""

    size: int
    anchor: Tuple[int, int]
    entries: Tuple[Tuple[Optional[Tuple[int, ...]], ...], ...]

    def values(self, M: CoordinateMatrix) -> List[List[Fraction]]:
        return [[Fraction(0) if e is None else M.sorted_minor(e) for e in row]
                for row in self.entries]

    def determinant(self, M: CoordinateMatrix) -> Fraction:
        return det(self.values(M))


def diamond_offsets(k: int, n: int, size: int) -> List[int]:
    """Offsets d = m - r (mod n) for which a size x size diamond lies in the grid.

    For size == k this is the window m in [r+k-1, r+n-1].
    """
    lo, hi = size - 1, n + k - 1 - size
    return sorted({d % n for d in range(lo, hi + 1)})


def extract_plucker_diamond(Fz: PluckerFrieze, r: int, m: int, size: int) -> FriezeDiamond:
    """Diamond with entries p_{o([r+i-1]^{k-1}, m+j-1)}, 1 <= i, j <= size."""
    if size < 1:
        raise ValueError(f"diamond size must be positive, got {size}")
    if (m - r) % Fz.n not in diamond_offsets(Fz.k, Fz.n, size):
        raise ValueError(
            f"anchor (r={r}, m={m}) puts a {size}x{size} diamond outside P({Fz.k},{Fz.n})")
    entries = tuple(
        tuple(plucker_index(r + i, m + j, Fz.k, Fz.n) for j in range(size))
        for i in range(size))
    return FriezeDiamond(size, (wrap(r, Fz.n), wrap(m, Fz.n)), entries)


def diamond_grid_position(Fz: PluckerFrieze, r: int, m: int, size: int,
                          i: int, j: int) -> Tuple[int, int]:
    """Grid position (r, m) of entry (i, j) (1-based) of the diamond anchored at (r, m)."""
    lo, hi = size - 1, Fz.n + Fz.k - 1 - size
    d = next(d for d in range(lo, hi + 1) if d % Fz.n == (m - r) % Fz.n)
    return (r + i - 1, d + j - i + 1)


@dataclass(frozen=True)
class DeterminantEntry:
    anchor: Tuple[int, int]
    size: int
    value: Fraction

    def to_json(self) -> dict:
        return {"anchor": list(self.anchor), "size": self.size,
                "value": format_rational(self.value)}


@dataclass
class DeterminantReport:
    kind: str
    k: int
    n: int
    size: int
    vanishing_asserted: bool
    entries: List[DeterminantEntry] = field(default_factory=list)

    @property
    def nonzero(self) -> List[DeterminantEntry]:
        return [e for e in self.entries if e.value != 0]

    @property
    def ok(self) -> bool:
        return not (self.vanishing_asserted and self.nonzero)

    def to_json(self) -> List[dict]:
        return [e.to_json() for e in self.entries]


def _map(fn, items, workers: int):
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _plucker_det(anchor, M: CoordinateMatrix, Fz: PluckerFrieze, size: int) -> Fraction:
    return extract_plucker_diamond(Fz, anchor[0], anchor[1], size).determinant(M)


def check_diamond_determinants(M: CoordinateMatrix, k: Optional[int] = None,
                               size: Optional[int] = None, workers: int = 1) -> DeterminantReport:
    """Every size x size diamond determinant of P(k, n) valued on ``M``.

    Vanishing is asserted only for size == k + 1.
    """
    k = M.k if k is None else k
    if k != M.k:
        raise ValueError(f"P({k},n) needs a {k}-row matrix, got {M.k} rows")
    size = k + 1 if size is None else size
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        Fz = plucker_frieze(k, M.n)
    anchors = [(r, wrap(r + d, M.n)) for r in range(1, M.n + 1)
               for d in diamond_offsets(k, M.n, size)]
    anchors.sort()
    values = _map(partial(_plucker_det, M=M, Fz=Fz, size=size), anchors, workers)
    report = DeterminantReport("plucker", k, M.n, size, size == k + 1)
    report.entries = [DeterminantEntry(a, size, v) for a, v in zip(anchors, values)]
    return report


# -- Heronian minor frieze and S-subfriezes ----------------------------------

@dataclass(frozen=True)
class HeronianMinorFrieze:
    """Entries (a, b) -> m_{a, a+1, b} of a polygon's coordinate matrix."""

    n: int
    entries: Dict[Tuple[int, int], Fraction]

    def __getitem__(self, ab: Tuple[int, int]) -> Fraction:
        a, b = ab
        return self.entries[(wrap(a, self.n), wrap(b, self.n))]

    def triple(self, a: int, b: int) -> Tuple[int, int, int]:
        return (wrap(a, self.n), wrap(a + 1, self.n), wrap(b, self.n))

    def row(self, a: int) -> List[Fraction]:
        """Row a in frieze order m_{a,a+1,a+1}, m_{a,a+1,a+2}, ..., m_{a,a+1,a}."""
        return [self[a, a + t] for t in range(1, self.n + 1)]

    def diamond(self, r: int, m: int, size: int = 4) -> List[List[Fraction]]:
        return [[self[r + i, m + j] for j in range(size)] for i in range(size)]


def build_minor_frieze(P: Polygon) -> HeronianMinorFrieze:
    M = coordinate_matrix(P)
    n = P.n
    entries = {(a, b): minor(M, (a, wrap(a + 1, n), b))
               for a in range(1, n + 1) for b in range(1, n + 1)}
    return HeronianMinorFrieze(n, entries)


@dataclass(frozen=True)
class SSubfrieze:
    """S-entries on alternating diagonals of a polygonal Heronian frieze.

    ``s-primary`` holds (a, b) -> S_{a,a+1,b}; ``s-alternate`` holds
    (a, b) -> S_{a,b,b+1}, the diagonals left out by the primary choice.
    """

    variant: str
    n: int
    entries: Dict[Tuple[int, int], Fraction]

    def triple(self, a: int, b: int) -> Tuple[int, int, int]:
        n = self.n
        if self.variant == "s-primary":
            return (wrap(a, n), wrap(a + 1, n), wrap(b, n))
        return (wrap(a, n), wrap(b, n), wrap(b + 1, n))

    def __getitem__(self, ab: Tuple[int, int]) -> Fraction:
        a, b = ab
        return self.entries[(wrap(a, self.n), wrap(b, self.n))]

    def row(self, a: int) -> List[Tuple[int, int, int]]:
        """Index triples of row a in frieze order."""
        start = 1 if self.variant == "s-primary" else 0
        return [self.triple(a, a + t) for t in range(start, start + self.n)]

    def diamond(self, r: int, m: int, size: int = 4) -> List[List[Fraction]]:
        return [[self[r + i, m + j] for j in range(size)] for i in range(size)]

    def diamond_triples(self, r: int, m: int, size: int = 4) -> List[List[Tuple[int, int, int]]]:
        return [[self.triple(r + i, m + j) for j in range(size)] for i in range(size)]


def build_s_subfrieze(F: HeronianFrieze, variant: str = "s-primary") -> SSubfrieze:
    if variant not in VARIANTS:
        raise ValueError(f"unknown S-subfrieze variant {variant!r}; expected one of {VARIANTS}")
    n = F.n
    sub = SSubfrieze(variant, n, {})
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            sub.entries[(a, b)] = F.S(*sub.triple(a, b))
    return sub


@dataclass(frozen=True)
class SDiamondEntry:
    anchor: Tuple[int, int]
    s_det: Fraction
    m_det: Fraction
    entrywise_ok: bool

    @property
    def ok(self) -> bool:
        return self.entrywise_ok and self.s_det == 16 * self.m_det and self.s_det == 0

    def to_json(self) -> dict:
        return {"anchor": list(self.anchor), "size": 4,
                "value": format_rational(self.s_det),
                "minor_value": format_rational(self.m_det),
                "entrywise_ok": self.entrywise_ok}


@dataclass
class SDiamondReport:
    variant: str
    n: int
    entries: List[SDiamondEntry] = field(default_factory=list)

    @property
    def failures(self) -> List[SDiamondEntry]:
        return [e for e in self.entries if not e.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> List[dict]:
        return [e.to_json() for e in self.entries]


def _s_diamond(anchor, sub: SSubfrieze, M: CoordinateMatrix) -> SDiamondEntry:
    r, m = anchor
    triples = sub.diamond_triples(r, m)
    s_vals = sub.diamond(r, m)
    m_vals = [[minor(M, t) for t in row] for row in triples]
    entrywise = all(s == 2 * mv for srow, mrow in zip(s_vals, m_vals) for s, mv in zip(srow, mrow))
    return SDiamondEntry(anchor, det(s_vals), det(m_vals), entrywise)


def check_s_diamonds(P: Polygon, variant: str = "s-primary", workers: int = 1) -> SDiamondReport:
    """All 4 x 4 S-subfrieze diamonds, each paired with its minor-frieze diamond."""
    if P.n < 5:
        raise ValueError(f"4x4 diamonds need n >= 5, got n={P.n}")
    sub = build_s_subfrieze(build_polygonal_frieze(P), variant)
    M = coordinate_matrix(P)
    anchors = [(r, m) for r in range(1, P.n + 1) for m in range(1, P.n + 1)]
    report = SDiamondReport(variant, P.n)
    report.entries = _map(partial(_s_diamond, sub=sub, M=M), anchors, workers)
    return report


def check_minor_diamonds(P: Polygon, size: int = 4) -> DeterminantReport:
    mf = build_minor_frieze(P)
    report = DeterminantReport("minor", 3, P.n, size, size == 4)
    for r in range(1, P.n + 1):
        for m in range(1, P.n + 1):
            report.entries.append(DeterminantEntry((r, m), size, det(mf.diamond(r, m, size))))
    return report


def grid_to_json(kind: str, n: int, k: int, entries: List[dict], determinants: List[dict]) -> dict:
    return {"kind": kind, "k": k, "n": n, "entries": entries, "determinant_report": determinants}


def plucker_grid_entries(Fz: PluckerFrieze, M: Optional[CoordinateMatrix] = None) -> List[dict]:
    out = []
    for r in range(1, Fz.n + 1):
        for m in range(1, Fz.height + 1):
            item = {"r": r, "m": m, "tuple": list(Fz.raw_entry(r, m))}
            if M is not None:
                item["value"] = format_rational(Fz.value(r, m, M))
            out.append(item)
    return out


def minor_grid_entries(mf: HeronianMinorFrieze) -> List[dict]:
    return [{"r": a, "m": b, "tuple": list(mf.triple(a, b)), "value": format_rational(v)}
            for (a, b), v in sorted(mf.entries.items())]


def s_grid_entries(sub: SSubfrieze) -> List[dict]:
    return [{"r": a, "m": b, "tuple": list(sub.triple(a, b)), "value": format_rational(v)}
            for (a, b), v in sorted(sub.entries.items())]
