"""Exact plane geometry over the rationals.

Points carry :class:`fractions.Fraction` coordinates, polygons are indexed
from 1 with cyclic index arithmetic, and the two measurements used by every
frieze construction are provided: squared distances and four times the
signed triangle area.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class InputError(ValueError):
    """Malformed external input (rationals, polygon or frieze files)."""


def to_rational(value: RationalLike, *, field: str = "value") -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Only decimal-integer fraction strings are accepted; floats are rejected
    because they cannot round-trip exactly.
    """
    if isinstance(value, bool):
        raise InputError(f"{field}: booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise InputError(f"{field}: {value!r} is not of the form 'p' or 'p/q'")
        num, den = m.group(1), m.group(2)
        den_int = 1 if den is None else int(den)
        if den_int == 0:
            raise InputError(f"{field}: zero denominator in {value!r}")
        return Fraction(int(num), den_int)
    raise InputError(f"{field}: expected a fraction string, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def wrap(index: int, n: int) -> int:
    """Reduce ``index`` modulo ``n`` into the representatives 1..n."""
    return (index - 1) % n + 1


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x, field="x"))
        object.__setattr__(self, "y", to_rational(self.y, field="y"))


@dataclass(frozen=True)
class Polygon:
    """A labeled n-gon; vertex ``A_i`` is ``polygon[i]`` for ``1 <= i <= n``.

    Repeated and collinear vertices are allowed.
    """

    vertices: tuple

    def __post_init__(self):
        verts = tuple(v if isinstance(v, Point) else Point(*v) for v in self.vertices)
        if len(verts) < 3:
            raise ValueError(f"a polygon needs at least 3 vertices, got {len(verts)}")
        object.__setattr__(self, "vertices", verts)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> Point:
        self.check_index(i)
        return self.vertices[i - 1]

    def check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.n:
            raise IndexError(f"vertex index {i!r} outside 1..{self.n}")

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[RationalLike]]) -> "Polygon":
        return cls(tuple(Point(to_rational(x), to_rational(y)) for x, y in coords))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [[format_rational(p.x), format_rational(p.y)] for p in self.vertices],
        }

    @classmethod
    def from_json(cls, data) -> "Polygon":
        if not isinstance(data, dict):
            raise InputError("polygon: top level must be a JSON object")
        if "vertices" not in data:
            raise InputError("polygon: missing field 'vertices'")
        verts = data["vertices"]
        if not isinstance(verts, list):
            raise InputError("polygon.vertices: expected an array")
        points = []
        for idx, v in enumerate(verts):
            if not isinstance(v, list) or len(v) != 2:
                raise InputError(f"polygon.vertices[{idx}]: expected a pair [x, y]")
            x = to_rational(v[0], field=f"polygon.vertices[{idx}][0]")
            y = to_rational(v[1], field=f"polygon.vertices[{idx}][1]")
            points.append(Point(x, y))
        n = data.get("n", len(points))
        if isinstance(n, bool) or not isinstance(n, int):
            raise InputError("polygon.n: expected an integer")
        if n != len(points):
            raise InputError(f"polygon.n: declared {n} but {len(points)} vertices given")
        if n < 3:
            raise InputError(f"polygon.n: need at least 3 vertices, got {n}")
        return cls(tuple(points))


def load_polygon(path: Union[str, Path]) -> Polygon:
    """Read a polygon file; raises :class:`InputError` with a location on failure."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror or exc})") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return Polygon.from_json(data)


def squared_distance(P: Polygon, i: int, j: int) -> Fraction:
    a, b = P[i], P[j]
    return (b.x - a.x) ** 2 + (b.y - a.y) ** 2


def signed_area4(P: Polygon, i: int, j: int, k: int) -> Fraction:
    """Four times the signed area of triangle ``A_i A_j A_k`` (positive if ccw)."""
    a, b, c = P[i], P[j], P[k]
    return 2 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


def random_polygon(n: int, seed: int, bound: int = 10) -> Polygon:
    """Deterministic random polygon with coordinates ``p/q``, ``|p| <= bound``, ``1 <= q <= bound``.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``seed``.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    rng = random.Random(seed)

    def coord() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return Polygon(tuple(Point(coord(), coord()) for _ in range(n)))
