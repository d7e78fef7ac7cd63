from __future__ import annotations

import random
import warnings
from fractions import Fraction

import pytest
from reference_data import DISPLAYED_OCTAGON_S_DIAMOND, DISPLAYED_P36_DIAMOND, P36_FRAGMENT

from heronfrieze.geometry import random_polygon
from heronfrieze.grassmannian import CoordinateMatrix, coordinate_matrix, det, minor
from heronfrieze.grids import (
    PluckerFrieze,
    build_minor_frieze,
    build_s_subfrieze,
    check_diamond_determinants,
    check_minor_diamonds,
    check_s_diamonds,
    diamond_offsets,
    extract_plucker_diamond,
    grid_to_json,
    plucker_frieze,
    plucker_grid_entries,
    plucker_index,
)
from heronfrieze.heronian import build_polygonal_frieze


def random_matrix(k, n, seed):
    rng = random.Random(seed)
    return CoordinateMatrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
                             for _ in range(k)])


def test_p36_fragment_matches():
    Fz = PluckerFrieze(3, 6)
    for token in P36_FRAGMENT.replace("\n", " ").split(";"):
        if not token.strip():
            continue
        x, y, label = token.split()
        x, y = Fraction(x), Fraction(y)
        m, r = int(2 * y - 4), int(x - y + 3)
        expected = None if label == "0" else tuple(map(int, label))
        assert Fz.entry(r, m) == expected, (x, y)


def test_displayed_p36_diamond():
    D = extract_plucker_diamond(plucker_frieze(3, 6), 1, 4, 4)
    assert [list(row) for row in D.entries] == DISPLAYED_P36_DIAMOND
    for seed in range(5):
        assert D.determinant(coordinate_matrix(random_polygon(6, seed))) == 0


@pytest.mark.parametrize("k,n", [(2, 4), (2, 7), (3, 6), (3, 8), (4, 9)])
def test_boundary_rows_are_zero(k, n):
    Fz = plucker_frieze(k, n)
    for r in range(1, n + 1):
        edge = list(range(1, k)) + list(range(n + 1, n + k))
        assert all(Fz.entry(r, m) is None for m in edge)
        assert all(Fz.entry(r, m) is not None for m in range(k, n + 1))


def test_first_row_of_p3n():
    Fz = plucker_frieze(3, 7)
    assert [Fz.entry(1, m) for m in range(3, 8)] == [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 2, 7)]


def test_plucker_frieze_parameters():
    with pytest.raises(ValueError):
        plucker_frieze(1, 6)
    with pytest.warns(RuntimeWarning):
        plucker_frieze(4, 6)


def test_diamond_sizes_and_window():
    Fz = plucker_frieze(3, 6)
    one = extract_plucker_diamond(Fz, 2, 5, 1)
    assert one.entries == ((plucker_index(2, 5, 3, 6),),)
    # for size k the admissible offsets are exactly m - r in [k-1, n-1]
    assert diamond_offsets(3, 6, 3) == [2, 3, 4, 5]
    extract_plucker_diamond(Fz, 1, 3, 3)
    with pytest.raises(ValueError):
        extract_plucker_diamond(Fz, 1, 2, 3)
    with pytest.raises(ValueError):
        extract_plucker_diamond(Fz, 1, 1, 0)


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", range(4, 9))
def test_k_plus_one_diamonds_vanish(k, n):
    for seed in range(2):
        for M in (random_matrix(k, n, seed), coordinate_matrix(random_polygon(n, seed)).rows(*range(4 - k, 4))):
            report = check_diamond_determinants(M, k)
            assert report.vanishing_asserted and report.ok
            # a (k+1)-diamond fits in the grid only once n >= k + 2
            assert bool(report.entries) == (n >= k + 2)


@pytest.mark.parametrize("k,n", [(2, 6), (3, 6), (3, 8)])
def test_k_by_k_diamonds_generically_nonzero(k, n):
    report = check_diamond_determinants(random_matrix(k, n, 3), k, size=k)
    assert not report.vanishing_asserted and report.ok
    assert report.nonzero


def test_report_sorted_and_parallel_identical():
    M = coordinate_matrix(random_polygon(7, 4))
    serial = check_diamond_determinants(M, 3)
    parallel = check_diamond_determinants(M, 3, workers=2)
    assert serial.entries == parallel.entries
    assert [e.anchor for e in serial.entries] == sorted(e.anchor for e in serial.entries)


def test_minor_frieze_unit_square(unit_square):
    mf = build_minor_frieze(unit_square)
    assert mf[1, 3] == 1 and mf[1, 2] == 0
    assert mf.row(1)[0] == 0


@pytest.mark.parametrize("n", range(5, 9))
def test_minor_frieze_diamonds_vanish(n):
    assert check_minor_diamonds(random_polygon(n, n)).ok


def test_s_subfrieze_rows(octagon):
    F = build_polygonal_frieze(octagon)
    primary = build_s_subfrieze(F, "s-primary")
    assert {(1, 2, 5), (1, 2, 6), (1, 2, 7), (1, 2, 8)} <= set(primary.row(1))
    for a in range(1, 9):
        first = primary.row(a)[0]
        assert first[1] == first[2] and primary[a, a + 1] == 0
    alternate = build_s_subfrieze(F, "s-alternate")
    assert alternate.row(2)[:3] == [(2, 2, 3), (2, 3, 4), (2, 4, 5)]
    with pytest.raises(ValueError):
        build_s_subfrieze(F, "diagonal")


def test_s_subfrieze_is_twice_minor_frieze(octagon):
    sub = build_s_subfrieze(build_polygonal_frieze(octagon), "s-primary")
    mf = build_minor_frieze(octagon)
    assert all(sub[a, b] == 2 * mf[a, b] for a in range(1, 9) for b in range(1, 9))


def test_displayed_octagon_s_diamond(octagon):
    sub = build_s_subfrieze(build_polygonal_frieze(octagon), "s-primary")
    assert sub.diamond_triples(1, 5) == DISPLAYED_OCTAGON_S_DIAMOND
    assert det(sub.diamond(1, 5)) == 0
    report = check_s_diamonds(octagon, "s-primary")
    entry = next(e for e in report.entries if e.anchor == (1, 5))
    assert entry.s_det == 0 and entry.ok


@pytest.mark.parametrize("variant", ["s-primary", "s-alternate"])
@pytest.mark.parametrize("n", range(5, 11))
def test_s_diamonds_vanish(variant, n):
    report = check_s_diamonds(random_polygon(n, 100 + n), variant)
    assert report.ok and len(report.entries) == n * n
    assert all(e.s_det == 16 * e.m_det == 0 and e.entrywise_ok for e in report.entries)


def test_alternate_is_transposed_plucker_diamond(octagon):
    n = 8
    M = coordinate_matrix(octagon)
    sub = build_s_subfrieze(build_polygonal_frieze(octagon), "s-alternate")
    for r in range(1, n + 1):
        for m in range(1, n + 1):
            S = sub.diamond(r, m)
            for i in range(4):
                for j in range(4):
                    idx = plucker_index(m + j, r + i, 3, n)
                    p = Fraction(0) if idx is None else M.sorted_minor(idx)
                    assert S[i][j] == 2 * p


def test_s_diamonds_need_five_vertices():
    with pytest.raises(ValueError):
        check_s_diamonds(random_polygon(4, 0))


def test_not_all_3x3_s_minors_vanish(octagon):
    sub = build_s_subfrieze(build_polygonal_frieze(octagon), "s-primary")
    assert any(det(sub.diamond(r, m, 3)) != 0 for r in range(1, 9) for m in range(1, 9))


def test_grid_json_shape():
    M = coordinate_matrix(random_polygon(6, 1))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        entries = plucker_grid_entries(plucker_frieze(3, 6), M)
    report = check_diamond_determinants(M, 3)
    data = grid_to_json("plucker", 6, 3, entries, report.to_json())
    assert set(data) == {"kind", "k", "n", "entries", "determinant_report"}
    assert set(data["entries"][0]) == {"r", "m", "tuple", "value"}
    assert set(data["determinant_report"][0]) == {"anchor", "size", "value"}
    assert minor(M, (1, 2, 3)) == Fraction(data["entries"][2]["value"])
