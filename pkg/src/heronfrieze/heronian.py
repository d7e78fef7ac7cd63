"""Heronian diamonds and polygonal Heronian friezes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .geometry import (
    InputError,
    Polygon,
    format_rational,
    signed_area4,
    squared_distance,
    to_rational,
    wrap,
)

EQUATIONS = ("eq1", "eq2", "eq3", "eq4", "eq5", "eq6", "eq7")


def heron_H(x, y, z) -> Fraction:
    """Heron's polynomial; equals 16 * area**2 when x, y, z are squared side lengths."""
    return -x * x - y * y - z * z + 2 * x * y + 2 * x * z + 2 * y * z


@dataclass(frozen=True)
class HeronianDiamond:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction
    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction

    @classmethod
    def from_tuple(cls, values) -> "HeronianDiamond":
        values = tuple(Fraction(v) for v in values)
        if len(values) != 10:
            raise ValueError(f"a diamond has 10 components, got {len(values)}")
        return cls(*values)

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.e, self.f, self.p, self.q, self.r, self.s)


@dataclass(frozen=True)
class DiamondReport:
    """Residual (left minus right) of each of the seven diamond equations."""

    residuals: Tuple[Fraction, ...]

    @property
    def ok(self) -> bool:
        return all(r == 0 for r in self.residuals)

    def failures(self) -> List[Tuple[str, Fraction]]:
        return [(name, r) for name, r in zip(EQUATIONS, self.residuals) if r != 0]


def is_heronian_diamond(D: HeronianDiamond) -> DiamondReport:
    a, b, c, d, e, f, p, q, r, s = D.as_tuple()
    return DiamondReport((
        p * p - heron_H(b, c, e),
        q * q - heron_H(a, d, e),
        r * r - heron_H(a, f, b),
        s * s - heron_H(c, f, d),
        (r + s) - (p + q),
        4 * e * f - ((p + q) ** 2 + (a - b + c - d) ** 2),
        e * (r - s) - (p * (a - d) + q * (b - c)),
    ))


def is_frieze_triple(t: Tuple[int, int, int], n: int) -> bool:
    """True if ``t`` has one of the stored frieze forms (a, a+1, b) or (a, b, b+1) mod n."""
    i, j, k = t
    return wrap(i + 1, n) == j or wrap(j + 1, n) == k


@dataclass(frozen=True)
class FriezeFailure:
    label: Tuple[int, int, int, int]
    equation: str
    residual: Fraction

    def to_json(self) -> dict:
        return {"diamond": list(self.label), "equation": self.equation,
                "residual": format_rational(self.residual)}


@dataclass(frozen=True)
class BoundaryFailure:
    entry: str
    index: Tuple[int, ...]
    value: Fraction

    def to_json(self) -> dict:
        return {"entry": self.entry, "index": list(self.index),
                "value": format_rational(self.value)}


@dataclass
class FriezeReport:
    n: int
    diamonds_checked: int
    failures: List[FriezeFailure] = field(default_factory=list)
    boundary_failures: List[BoundaryFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.boundary_failures

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "diamonds_checked": self.diamonds_checked,
            "ok": self.ok,
            "diamond_failures": [f.to_json() for f in self.failures],
            "boundary_failures": [b.to_json() for b in self.boundary_failures],
        }


class HeronianFrieze:
    """Sparse store of the entries of a Heronian frieze of order ``n``.

    ``z`` is keyed by unordered pairs (stored as ``(min, max)``), so symmetry
    holds by construction. ``S`` accepts only the triples of the two frieze
    forms ``(a, a+1, b)`` and ``(a, b, b+1)``.
    """

    def __init__(self, n: int, z: Dict, S: Dict):
        if n < 3:
            raise ValueError(f"frieze order must be at least 3, got {n}")
        self.n = n
        self._z: Dict[Tuple[int, int], Fraction] = {}
        self._S: Dict[Tuple[int, int, int], Fraction] = {}
        for (i, j), v in z.items():
            self._set_z(i, j, v)
        for (i, j, k), v in S.items():
            self._set_S(i, j, k, v)

    def _check(self, *idx: int) -> None:
        for i in idx:
            if not isinstance(i, int) or not 1 <= i <= self.n:
                raise IndexError(f"frieze index {i!r} outside 1..{self.n}")

    def _set_z(self, i: int, j: int, v) -> None:
        self._check(i, j)
        key = (min(i, j), max(i, j))
        v = Fraction(v)
        if key in self._z and self._z[key] != v:
            raise InputError(f"z[{i},{j}]: conflicting values {self._z[key]} and {v}")
        self._z[key] = v

    def _set_S(self, i: int, j: int, k: int, v) -> None:
        self._check(i, j, k)
        if not is_frieze_triple((i, j, k), self.n):
            raise InputError(f"S[{i},{j},{k}]: not of the form (a,a+1,b) or (a,b,b+1) mod {self.n}")
        self._S[(i, j, k)] = Fraction(v)

    def z(self, i: int, j: int) -> Fraction:
        i, j = wrap(i, self.n), wrap(j, self.n)
        return self._z[(min(i, j), max(i, j))]

    def S(self, i: int, j: int, k: int) -> Fraction:
        key = (wrap(i, self.n), wrap(j, self.n), wrap(k, self.n))
        return self._S[key]

    def has_S(self, i: int, j: int, k: int) -> bool:
        return (wrap(i, self.n), wrap(j, self.n), wrap(k, self.n)) in self._S

    @property
    def z_entries(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._z)

    @property
    def S_entries(self) -> Dict[Tuple[int, int, int], Fraction]:
        return dict(self._S)

    def perturbed(self, key: tuple, delta=1) -> "HeronianFrieze":
        """Copy of this frieze with one z- or S-entry shifted by ``delta``."""
        z, S = dict(self._z), dict(self._S)
        if len(key) == 2:
            key = (min(key), max(key))
            z[key] = z[key] + delta
        else:
            S[key] = S[key] + delta
        return HeronianFrieze(self.n, z, S)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeronianFrieze):
            return NotImplemented
        return self.n == other.n and self._z == other._z and self._S == other._S

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "z": [{"i": i, "j": j, "value": format_rational(v)}
                  for (i, j), v in sorted(self._z.items())],
            "S": [{"i": i, "j": j, "k": k, "value": format_rational(v)}
                  for (i, j, k), v in sorted(self._S.items())],
        }

    @classmethod
    def from_json(cls, data) -> "HeronianFrieze":
        if not isinstance(data, dict):
            raise InputError("frieze: top level must be a JSON object")
        for key in ("n", "z", "S"):
            if key not in data:
                raise InputError(f"frieze: missing field {key!r}")
        n = data["n"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 3:
            raise InputError("frieze.n: expected an integer >= 3")
        z, S = {}, {}
        for idx, item in enumerate(data["z"]):
            where = f"frieze.z[{idx}]"
            i, j = _int_field(item, "i", where), _int_field(item, "j", where)
            z[(i, j)] = to_rational(item.get("value"), field=f"{where}.value")
        for idx, item in enumerate(data["S"]):
            where = f"frieze.S[{idx}]"
            t = tuple(_int_field(item, c, where) for c in "ijk")
            S[t] = to_rational(item.get("value"), field=f"{where}.value")
        try:
            return cls(n, z, S)
        except IndexError as exc:
            raise InputError(f"frieze: {exc}") from exc


def _int_field(item, name: str, where: str) -> int:
    if not isinstance(item, dict):
        raise InputError(f"{where}: expected an object")
    v = item.get(name)
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{where}.{name}: expected an integer index")
    return v


def load_frieze(path: Union[str, Path]) -> HeronianFrieze:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror or exc})") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return HeronianFrieze.from_json(data)


def frieze_triples(n: int) -> Iterator[Tuple[int, int, int]]:
    """All S-keys of a frieze of order n, in sorted order."""
    seen = set()
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            seen.add((a, wrap(a + 1, n), b))
            seen.add((a, b, wrap(b + 1, n)))
    return iter(sorted(seen))


def build_polygonal_frieze(P: Polygon) -> HeronianFrieze:
    n = P.n
    z = {(i, j): squared_distance(P, i, j) for i in range(1, n + 1) for j in range(i, n + 1)}
    S = {t: signed_area4(P, *t) for t in frieze_triples(n)}
    return HeronianFrieze(n, z, S)


def diamond_labels(n: int) -> List[Tuple[int, int, int, int]]:
    """Labels (b, b+1, c, c+1) of every diamond, including the degenerate b == c ones."""
    return [(b, wrap(b + 1, n), c, wrap(c + 1, n))
            for b in range(1, n + 1) for c in range(1, n + 1)]


def extract_diamond(F: HeronianFrieze, L: Tuple[int, int, int, int]) -> HeronianDiamond:
    """Measurement 10-tuple of the diamond labelled ``ijkl``.

    The label must be of the form (b, b+1, c, c+1) so that the four S-entries
    exist in the frieze.
    """
    i, j, k, l = (wrap(x, F.n) for x in L)
    if j != wrap(i + 1, F.n) or l != wrap(k + 1, F.n):
        raise ValueError(f"diamond label {tuple(L)} is not of the form (b, b+1, c, c+1) mod {F.n}")
    return HeronianDiamond(
        F.z(i, l), F.z(i, j), F.z(j, k), F.z(k, l), F.z(i, k), F.z(j, l),
        F.S(i, j, k), F.S(i, k, l), F.S(i, j, l), F.S(j, k, l),
    )


def boundary_failures(F: HeronianFrieze) -> List[BoundaryFailure]:
    out = []
    for i in range(1, F.n + 1):
        if F.z(i, i) != 0:
            out.append(BoundaryFailure("z", (i, i), F.z(i, i)))
    for t, v in sorted(F.S_entries.items()):
        if len(set(t)) < 3 and v != 0:
            out.append(BoundaryFailure("S", t, v))
    return out


def verify_frieze(F: HeronianFrieze, labels: Optional[List] = None) -> FriezeReport:
    labels = diamond_labels(F.n) if labels is None else sorted(labels)
    report = FriezeReport(F.n, len(labels))
    for L in labels:
        for eq, res in is_heronian_diamond(extract_diamond(F, L)).failures():
            report.failures.append(FriezeFailure(L, eq, res))
    report.boundary_failures = boundary_failures(F)
    return report


def is_equilateral(F: HeronianFrieze) -> bool:
    sides = {F.z(i, i + 1) for i in range(1, F.n + 1)}
    return len(sides) == 1
