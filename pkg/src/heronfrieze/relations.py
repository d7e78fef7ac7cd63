"""Heronian minor relations of Gr(3, n).

A Plücker relation for Gr(3, n) whose eight minors are all Heronian (up to
sign) translates, through ``S = 2m``, into a quadratic identity among the
S-entries of every polygonal Heronian frieze. This module classifies those
relations with an explicit table of case clauses, checks the result
against an exhaustive scan, and converts relations into S-relations.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .geometry import Polygon, format_rational, signed_area4, wrap
from .grassmannian import CoordinateMatrix, PluckerRelation, minor, plucker_normalize
from .heronian import HeronianFrieze, build_polygonal_frieze

Pair = Tuple[int, int]
Quad = Tuple[int, int, int, int]
Triple = Tuple[int, int, int]


class MinorStatus(enum.Enum):
    HERONIAN = "Heronian"
    NEGATED_HERONIAN = "NegatedHeronian"
    NOT_HERONIAN = "NotHeronian"


def _rotations(t: Sequence[int]) -> List[Triple]:
    a, b, c = t
    return [(a, b, c), (b, c, a), (c, a, b)]


def minor_status(t: Sequence[int], n: int) -> MinorStatus:
    """Classify the minor ``m_t`` of a coordinate matrix of order ``n``.

    ``m_t`` is Heronian when one of its cyclic rotations (which leave the
    minor unchanged) reads ``(a, a+1, b)`` mod n. It is a negated Heronian
    minor when instead a rotation reads ``(1, n, b)``, since
    ``m_{1,n,b} = -m_{n,1,b}``.
    """
    t = tuple(t)
    if len(t) != 3:
        raise ValueError(f"expected a 3-tuple, got {t}")
    rots = _rotations(t)
    if any(wrap(x + 1, n) == y for x, y, _ in rots):
        return MinorStatus.HERONIAN
    if any((x, y) == (1, n) for x, y, _ in rots):
        return MinorStatus.NEGATED_HERONIAN
    return MinorStatus.NOT_HERONIAN


def frieze_form(t: Sequence[int], n: int) -> Triple:
    """Rotate ``t`` to a form stored in the frieze, (a, a+1, b) or (a, b, b+1).

    Returns ``t`` unchanged when no rotation has either form.
    """
    t = tuple(t)
    for r in _rotations(t):
        if wrap(r[0] + 1, n) == r[1] or wrap(r[1] + 1, n) == r[2]:
            return r
    return t


def relation_minors(i: Pair, j: Quad) -> List[Tuple[int, Triple, Triple]]:
    """The four signed summands (sign, i-side triple, j-side triple)."""
    return [((-1) ** r, (i[0], i[1], j[r]), j[:r] + j[r + 1:]) for r in range(4)]


def trivial_pairs(j: Quad) -> List[Pair]:
    return [(j[0], j[1]), (j[1], j[2]), (j[2], j[3]), (j[0], j[3])]


def identity_polynomial(i: Pair, j: Quad) -> Dict[Tuple[Triple, Triple], int]:
    """The relation as a polynomial in sorted Plücker coordinates."""
    poly: Dict[Tuple[Triple, Triple], int] = {}
    for sign, left, right in relation_minors(i, j):
        ls, lsg = plucker_normalize(left)
        rs, rsg = plucker_normalize(right)
        if lsg == 0 or rsg == 0:
            continue
        mono = tuple(sorted((ls, rs)))
        poly[mono] = poly.get(mono, 0) + sign * lsg * rsg
    return {m: c for m, c in poly.items() if c}


def identity_key(i: Pair, j: Quad) -> tuple:
    """Key equal for two realizations iff they give the same identity up to overall sign."""
    poly = identity_polynomial(i, j)
    if not poly:
        return ()
    lead = min(poly)
    s = 1 if poly[lead] > 0 else -1
    return tuple(sorted((m, s * c) for m, c in poly.items()))


# -- classification clauses --------------------------------------------------

@dataclass(frozen=True)
class Clause:
    """One case clause of the classification.

    ``overlap`` is the position r in j with {i1, i2} & j == {j_r}, or None for
    an empty intersection. ``build`` maps free parameters to a candidate
    (i, j); ``cond`` holds the bullet's range and side conditions.
    """

    tag: str
    overlap: Optional[int]
    arity: int
    build: Callable[..., Tuple[Pair, Quad]]
    cond: Callable[..., bool]


def _c(tag, overlap, arity, build, cond):
    return Clause(tag, overlap, arity, build, cond)


CLAUSES: Tuple[Clause, ...] = (
    _c("a1", None, 2,
       lambda n, j0, j2: ((1, n), (j0, j0 + 1, j2, j2 + 1)),
       lambda n, j0, j2: j0 < j2 - 1),
    _c("a2", None, 3,
       lambda n, i1, j0, j2: ((i1, i1 + 1), (j0, j0 + 1, j2, j2 + 1)),
       lambda n, i1, j0, j2: 1 <= i1 <= n - 1 and j0 < j2 - 1),
    _c("a3", None, 2,
       lambda n, i1, j1: ((i1, i1 + 1), (1, j1, j1 + 1, n)),
       lambda n, i1, j1: 1 < i1 < n - 1 and 1 < j1 < n),
    _c("b1", 0, 1,
       lambda n, j1: ((1, 2), (1, j1, j1 + 1, n)),
       lambda n, j1: 1 < j1 < n),
    _c("b2", 0, 1,
       lambda n, j2: ((1, n), (1, 2, j2, j2 + 1)),
       lambda n, j2: 2 < j2 < n),
    _c("b3", 0, 2,
       lambda n, i1, j2: ((i1, i1 + 1), (i1 + 1, i1 + 2, j2, j2 + 1)),
       lambda n, i1, j2: 1 <= i1 <= n - 1 and i1 + 2 < j2 < n),
    _c("c1", 1, 1,
       lambda n, i1: ((i1, i1 + 1), (1, i1 + 1, i1 + 2, n)),
       lambda n, i1: 1 < i1 < n - 1),
    _c("c2", 1, 2,
       lambda n, i1, j2: ((i1, i1 + 1), (i1 - 1, i1, j2, j2 + 1)),
       lambda n, i1, j2: 1 < i1 <= n - 1 and i1 < j2),
    _c("d1", 2, 1,
       lambda n, i1: ((i1, i1 + 1), (1, i1 - 1, i1, n)),
       lambda n, i1: 1 < i1 < n - 1),
    _c("d2", 2, 2,
       lambda n, i1, j0: ((i1, i1 + 1), (j0, j0 + 1, i1 + 1, i1 + 2)),
       lambda n, i1, j0: 1 <= i1 < n - 1 and j0 < i1),
    _c("e1", 3, 1,
       lambda n, j1: ((n - 1, n), (1, j1, j1 + 1, n)),
       lambda n, j1: 1 < j1 < n),
    _c("e2", 3, 1,
       lambda n, j0: ((1, n), (j0, j0 + 1, n - 1, n)),
       lambda n, j0: j0 < n - 2),
    _c("e3", 3, 2,
       lambda n, i1, j0: ((i1, i1 + 1), (j0, j0 + 1, i1 - 1, i1)),
       lambda n, i1, j0: 1 < i1 <= n - 1 and j0 < i1 - 2),
)

CLAUSE_TAGS = tuple(c.tag for c in CLAUSES)


def overlap_of(i: Pair, j: Quad) -> Tuple[int, ...]:
    """Positions r of j with j_r in {i1, i2}."""
    return tuple(r for r in range(4) if j[r] in i)


def admissible(i: Pair, j: Quad, n: int) -> bool:
    """Well-formed tuples in range, with the trivial adjacent pairs excluded."""
    if not (1 <= i[0] < i[1] <= n):
        return False
    if not (1 <= j[0] and all(a < b for a, b in zip(j, j[1:])) and j[3] <= n):
        return False
    return i not in trivial_pairs(j)


def clause_candidates(clause: Clause, n: int, respect_side: bool = True) -> List[Tuple[Pair, Quad]]:
    """Admissible (i, j) produced by a clause whose intersection premise holds.

    With ``respect_side=False`` the bullet's range/side conditions are ignored,
    which is how the side conditions themselves get tested.
    """
    out = set()
    for params in _param_grid(clause.arity, n):
        i, j = clause.build(n, *params)
        if not admissible(i, j, n):
            continue
        expected = () if clause.overlap is None else (clause.overlap,)
        if overlap_of(i, j) != expected:
            continue
        if respect_side and not clause.cond(n, *params):
            continue
        out.add((i, j))
    return sorted(out)


def _param_grid(arity: int, n: int):
    # parameters only ever need the range 0..n+1 before admissibility filtering
    rng = range(0, n + 2)
    if arity == 1:
        return ((a,) for a in rng)
    if arity == 2:
        return ((a, b) for a in rng for b in rng)
    return ((a, b, c) for a in rng for b in rng for c in rng)


@lru_cache(maxsize=None)
def _clause_table(n: int) -> Dict[Tuple[Pair, Quad], Tuple[str, ...]]:
    table: Dict[Tuple[Pair, Quad], List[str]] = {}
    for clause in CLAUSES:
        for key in clause_candidates(clause, n):
            table.setdefault(key, []).append(clause.tag)
    return {k: tuple(v) for k, v in table.items()}


def matching_clauses(i: Sequence[int], j: Sequence[int], n: int) -> Tuple[str, ...]:
    """Every clause tag that produces (i, j); usually zero or one."""
    return _clause_table(n).get((tuple(i), tuple(j)), ())


def classify(i: Sequence[int], j: Sequence[int], n: int) -> Optional[str]:
    tags = matching_clauses(i, j, n)
    return tags[0] if tags else None


# -- relations ---------------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    i_pair: Pair
    j_tuple: Quad
    tags: Tuple[str, ...] = ()


@dataclass(frozen=True)
class HeronianMinorRelation:
    """One Heronian minor relation, stored once per distinct identity.

    ``aliases`` holds the other (i, j) choices that spell the same identity up
    to an overall sign; ``tags`` every clause matching the representative.
    Relations from the brute-force scan carry no tags.
    """

    n: int
    i_pair: Pair
    j_tuple: Quad
    case_tag: Optional[str]
    tags: Tuple[str, ...] = ()
    overlap: Tuple[int, ...] = ()
    aliases: Tuple[Realization, ...] = ()

    @property
    def key(self) -> Tuple[Pair, Quad]:
        return (self.i_pair, self.j_tuple)

    @property
    def realizations(self) -> Tuple[Tuple[Pair, Quad], ...]:
        return (self.key,) + tuple((a.i_pair, a.j_tuple) for a in self.aliases)

    @property
    def plucker(self) -> PluckerRelation:
        return PluckerRelation(self.i_pair, self.j_tuple)

    def minor_terms(self) -> List[Tuple[int, Triple, Triple]]:
        return relation_minors(self.i_pair, self.j_tuple)

    def evaluate(self, M: CoordinateMatrix) -> Fraction:
        return sum((s * minor(M, l) * minor(M, r) for s, l, r in self.minor_terms()), Fraction(0))


def is_heronian_realization(i: Pair, j: Quad, n: int) -> bool:
    """All eight minors of the relation are Heronian up to sign."""
    return all(minor_status(left, n) is not MinorStatus.NOT_HERONIAN
               and minor_status(right, n) is not MinorStatus.NOT_HERONIAN
               for _, left, right in relation_minors(i, j))


def _representative_order(r: Realization):
    # prefer a consecutive pair over the wrap-around pair (1, n), then lexicographic
    return (r.i_pair[1] - r.i_pair[0] > 1, r.i_pair, r.j_tuple)


def group_realizations(n: int, realizations: Iterable[Realization]) -> List[HeronianMinorRelation]:
    groups: Dict[tuple, List[Realization]] = {}
    for real in realizations:
        groups.setdefault(identity_key(real.i_pair, real.j_tuple), []).append(real)
    out = []
    for members in groups.values():
        members.sort(key=_representative_order)
        rep, rest = members[0], members[1:]
        out.append(HeronianMinorRelation(
            n=n, i_pair=rep.i_pair, j_tuple=rep.j_tuple,
            case_tag=rep.tags[0] if rep.tags else None, tags=rep.tags,
            overlap=tuple(rep.j_tuple[r] for r in overlap_of(rep.i_pair, rep.j_tuple)),
            aliases=tuple(sorted(rest, key=lambda a: (a.i_pair, a.j_tuple))),
        ))
    out.sort(key=lambda r: r.key)
    return out


def enumerate_realizations(n: int) -> List[Realization]:
    """Every (i, j) produced by some clause, each with all its tags."""
    return [Realization(i, j, tags) for (i, j), tags in sorted(_clause_table(n).items())]


def brute_force_realizations(n: int) -> List[Realization]:
    """Exhaustive scan over every pair and 4-tuple, condition I not assumed."""
    out = []
    for i in combinations(range(1, n + 1), 2):
        for j in combinations(range(1, n + 1), 4):
            if i in trivial_pairs(j):
                continue
            if is_heronian_realization(i, j, n):
                out.append(Realization(i, j))
    return out


def enumerate_relations(n: int) -> List[HeronianMinorRelation]:
    if n < 4:
        warnings.warn(f"no 4-element j-tuple exists for n={n}; no relations", RuntimeWarning)
        return []
    return group_realizations(n, enumerate_realizations(n))


def brute_force_relations(n: int) -> List[HeronianMinorRelation]:
    if n < 4:
        return []
    return group_realizations(n, brute_force_realizations(n))


def canonical_set(relations: Iterable[HeronianMinorRelation]) -> frozenset:
    """Tag-free canonical form used to compare enumerations."""
    return frozenset((r.key, frozenset(r.realizations)) for r in relations)


# -- S-relations -------------------------------------------------------------

@dataclass(frozen=True)
class STerm:
    sign: int
    left: Triple
    right: Triple

    @property
    def vanishes(self) -> bool:
        """Symbolically zero (a repeated vertex in a factor)."""
        return len(set(self.left)) < 3 or len(set(self.right)) < 3

    def to_json(self) -> dict:
        return {"sign": self.sign, "left": list(self.left), "right": list(self.right)}

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "+") + "S" + "".join(map(str, self.left)) \
            + "*S" + "".join(map(str, self.right))


@dataclass(frozen=True)
class SRelation:
    n: int
    variant: str  # "one-n" for (i1, i2) = (1, n), else "consecutive"
    terms: Tuple[STerm, ...]

    def surviving_terms(self) -> Tuple[STerm, ...]:
        return tuple(t for t in self.terms if not t.vanishes)

    def to_json(self) -> List[dict]:
        return [t.to_json() for t in self.terms]

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.terms) + " = 0"


def to_s_relation(R: Union[HeronianMinorRelation, Tuple[Pair, Quad]], n: Optional[int] = None) -> SRelation:
    """Rewrite the relation in frieze S-entries (S = 2m, scaled by 4).

    In the (1, n) case the i-side factors become S_{n,1,j} with a sign flip.
    Every factor is rotated into a form the frieze stores; vanishing terms
    are kept so the pattern stays visible.
    """
    if isinstance(R, HeronianMinorRelation):
        i, j, n = R.i_pair, R.j_tuple, R.n
    else:
        (i, j), n = R, n
        if n is None:
            raise ValueError("order n required")
    one_n = tuple(i) == (1, n)
    terms = []
    for sign, left, right in relation_minors(tuple(i), tuple(j)):
        if one_n:
            sign, left = -sign, (n, 1, left[2])
        terms.append(STerm(sign, frieze_form(left, n), frieze_form(right, n)))
    return SRelation(n, "one-n" if one_n else "consecutive", tuple(terms))


def verify_s_relation(source: Union[Polygon, HeronianFrieze], S: SRelation) -> Fraction:
    """Exact residual of an S-relation.

    Entries are read from the frieze; with a polygon source, triples outside
    the stored forms are measured directly.
    """
    if isinstance(source, Polygon):
        frieze, polygon = build_polygonal_frieze(source), source
    else:
        frieze, polygon = source, None

    def value(t: Triple) -> Fraction:
        if frieze.has_S(*t):
            return frieze.S(*t)
        if polygon is None:
            raise KeyError(f"S{t} is not a frieze entry")
        return signed_area4(polygon, *(wrap(x, polygon.n) for x in t))

    return sum((t.sign * value(t.left) * value(t.right) for t in S.terms), Fraction(0))


@dataclass(frozen=True)
class PositionReport:
    diagonal: Pair
    diagonal_entries: Tuple[Triple, ...]
    diamond: Quad
    diamond_entries: Tuple[Triple, ...]
    pairs: Tuple[Tuple[Triple, Triple], ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "diagonal": list(self.diagonal),
            "diagonal_entries": [list(t) for t in self.diagonal_entries],
            "diamond": list(self.diamond),
            "diamond_entries": [list(t) for t in self.diamond_entries],
            "pairs": [[list(a), list(b)] for a, b in self.pairs],
        }


def relation_positions(R: Union[HeronianMinorRelation, Tuple[Pair, Quad]], n: Optional[int] = None) -> PositionReport:
    """Frieze positions of an S-relation: one dashed diagonal and one diamond.

    Summand r pairs the diagonal entry S_{i1 i2 j_r} with the diamond entry
    on the complementary triple.
    """
    if isinstance(R, HeronianMinorRelation):
        i, j, n = R.i_pair, R.j_tuple, R.n
    else:
        (i, j) = R
    j0, j1, j2, j3 = j
    if j1 == j0 + 1 and j3 == j2 + 1:
        diamond = (j0, j1, j2, j3)
    elif j0 == 1 and j3 == n and j2 == j1 + 1:
        diamond = (j1, j2, n, 1)
    else:
        raise ValueError(f"j-tuple {tuple(j)} is not a frieze diamond for n={n}")
    S = to_s_relation((tuple(i), tuple(j)), n)
    diag = tuple(t.left for t in S.terms)
    diam = tuple(t.right for t in S.terms)
    return PositionReport(tuple(i), diag, diamond, diam, tuple(zip(diag, diam)))


def relation_to_json(R: HeronianMinorRelation, polygon: Optional[Polygon] = None,
                     matrix: Optional[CoordinateMatrix] = None) -> dict:
    S = to_s_relation(R)
    out = {
        "i": list(R.i_pair),
        "j": list(R.j_tuple),
        "case": R.case_tag,
        "tags": list(R.tags),
        "aliases": [{"i": list(a.i_pair), "j": list(a.j_tuple), "tags": list(a.tags)}
                    for a in R.aliases],
        "minor_terms": [{"sign": s, "left": list(l), "right": list(r)}
                        for s, l, r in R.minor_terms()],
        "s_terms": S.to_json(),
    }
    if polygon is not None:
        out["residual"] = format_rational(verify_s_relation(polygon, S))
        if matrix is not None:
            out["minor_residual"] = format_rational(R.evaluate(matrix))
    return out
