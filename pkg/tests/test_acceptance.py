"""Exit criteria. Every comparison is exact rational equality.

Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion in the terminal summary.
"""

import random
from fractions import Fraction as F
from math import comb, lcm

import pytest

from conftest import random_polygons

from ehrhart.characterization import check_boundary_linear, check_pick, theorem3_report
from ehrhart.constructions import example_triangle, pentagon, prism, stanley_pyramid, triangle
from ehrhart.engine import fit_polytope, period_report, segment_constituents, verify_reciprocity
from ehrhart.enumeration import (
    count_boundary,
    count_boundary_edge_walk,
    count_closed,
    count_halfopen_parallelogram,
    count_interior,
    lattice_points,
)
from ehrhart.polytope import RationalPolytope, area_2d, contains, denominator, dilate
from ehrhart.quasipoly import Polynomial, qp_eval, qp_minimal_period

pytestmark = pytest.mark.acceptance


def criterion(number, title):
    def mark(fn):
        fn.criterion = (number, title)
        return fn
    return mark


def all_constructions():
    return (
        [triangle(D) for D in range(2, 13)]
        + [pentagon(6, s) for s in (1, 2, 3, 6)]
        + [pentagon(4, s) for s in (1, 2, 4)]
        + [prism(2, 2, 3), prism(3, 1, 4)]
        + [stanley_pyramid()]
        + [example_triangle(i) for i in (1, 2, 3)]
    )


@criterion(1, "triangle family D = 2..12: denominator D, minimal period 1, exact polynomial")
def test_triangle_family():
    for D in range(2, 13):
        r = period_report(triangle(D).polytope)
        assert r.denominator == D
        assert r.minimal_period == 1
        assert r.quasipolynomial.constituents == (
            Polynomial.of(1, F(D + 1, 2), F(D - 1, 2)),)


@criterion(2, "pentagon D = 6, s in {1,2,3,6}: period s, strip count floor(n/s)(6n+1)")
def test_pentagon_family():
    tri = triangle(6).polytope
    for s in (1, 2, 3, 6):
        P = pentagon(6, s).polytope
        r = period_report(P)
        assert (r.denominator, r.minimal_period) == (6, s)
        for n in range(1, 19):
            assert count_closed(P, n) == count_closed(tri, n) + (n // s) * (6 * n + 1)


@criterion(3, "prisms (2,2,3), (3,1,4): full enumeration = (n+1)^(d-2) pentagon count; period s")
def test_prism_family():
    for D, s, d in [(2, 2, 3), (3, 1, 4)]:
        P = prism(D, s, d).polytope
        base = pentagon(D, s).polytope
        for n in range(1, 9):
            full = count_closed(P, n, use_structure=False)
            assert full == (n + 1) ** (d - 2) * count_closed(base, n)
        assert period_report(P).minimal_period == s


@criterion(4, "100 random segments: full period, closed form = fit, constant term 1 iff j = D")
def test_segments_full_period():
    rng = random.Random(4)
    done = 0
    while done < 100:
        a = F(rng.randint(-50, 50), rng.randint(1, 12))
        b = F(rng.randint(-50, 50), rng.randint(1, 12))
        if a >= b:
            continue
        done += 1
        seg = RationalPolytope.segment(a, b)
        D = lcm(a.denominator, b.denominator)
        r = period_report(seg)
        assert r.minimal_period == D == denominator(seg) == r.denominator
        closed = segment_constituents(a, b)
        assert closed == fit_polytope(seg)
        for j, f in enumerate(closed.constituents, 1):
            assert (f.coefficient(0) == 1) == (j == D)


@criterion(5, "half-open parallelogram: (D-1)n^2, each translate holds D-1 points, closure")
def test_halfopen_parallelogram():
    for D in range(2, 9):
        for n in range(1, 9):
            assert count_halfopen_parallelogram(D, n, 0) == (D - 1) * n * n
            assert count_halfopen_parallelogram(D, n, 0, closed=True) == (D - 1) * n * n + n + 1
        for t in range(D):
            assert count_halfopen_parallelogram(D, 1, t) == D - 1


@criterion(6, "pyramid: C(n+3,3) for n = 1..10, denominator 2, minimal period 1")
def test_pyramid():
    P = stanley_pyramid().polytope
    assert [count_closed(P, n) for n in range(1, 11)] == [comb(n + 3, 3) for n in range(1, 11)]
    r = period_report(P)
    assert (r.denominator, r.minimal_period) == (2, 1)


@criterion(7, "coefficient periods [1, 2, 1] for the period-2 triangle (s1 > s0)")
def test_coefficient_period_counterexample():
    r = period_report(example_triangle(2).polytope)
    assert r.quasipolynomial.constituents == (Polynomial.of(1, 0, 1), Polynomial.of(1, 1, 1))
    assert list(r.coefficient_periods) == [1, 2, 1]
    assert r.coefficient_periods[1] > r.coefficient_periods[0]


@criterion(8, "triangle (0,0),(1,0),(0,1/2): constituents; linear boundary holds, Pick fails at 1")
def test_pick_fails_linear_holds():
    P = example_triangle(3).polytope
    r = period_report(P)
    assert r.quasipolynomial.constituents == (
        Polynomial.of(F(3, 4), 1, F(1, 4)), Polynomial.of(1, 1, F(1, 4)))
    assert all(check_boundary_linear(P, n).holds for n in (1, 2))
    assert not check_pick(P, 1).holds


@criterion(9, "reciprocity on every construction and 50 random polygons, n = 1..2D")
def test_reciprocity():
    fixtures = [c.polytope for c in all_constructions()] + random_polygons(909, 50)
    for P in fixtures:
        q = fit_polytope(P)
        sign = (-1) ** P.ambient_dim
        for n in range(1, 2 * denominator(P) + 1):
            assert count_interior(P, n) == sign * qp_eval(q, -n)
        assert verify_reciprocity(P, q, 2 * denominator(P)).ok


@criterion(10, "200 random polygons: finite Pick/linear test, period 1 and An^2+b/2 n+1 agree")
def test_polynomiality_equivalence(capsys):
    polynomial = collapsed = 0
    for P in random_polygons(10, 200):
        D = denominator(P)
        A = area_2d(P)
        b1 = count_boundary(P, 1)
        conditions = all(check_pick(P, n).holds and check_boundary_linear(P, n).holds
                         for n in range(1, D + 1))
        q = fit_polytope(P)
        period_one = qp_minimal_period(q) == 1
        predicted = Polynomial.of(1, F(b1, 2), A)
        matches = all(f == predicted for f in q.constituents)
        assert conditions == period_one == matches
        report = theorem3_report(P)  # raises on internal disagreement
        assert report.verdict_polynomial == period_one
        polynomial += period_one
        collapsed += period_one and D > 1
    with capsys.disabled():
        print(f"\n  criterion 10: {polynomial}/200 polynomial, {collapsed} with D > 1")


@criterion(11, "degree = dim, leading coefficient = area, value 1 at 0, closed = interior + boundary")
def test_structural_invariants():
    fixtures = [c.polytope for c in all_constructions()] + random_polygons(1111, 30)
    for P in fixtures:
        q = fit_polytope(P)
        d = P.ambient_dim
        assert all(f.degree == d for f in q.constituents)
        if d == 2:
            assert all(f.coefficient(2) == area_2d(P) for f in q.constituents)
        assert qp_eval(q, 0) == 1
        if d == 2:
            # boundary counted edge by edge, independently of the half-space counters
            for n in range(1, 2 * denominator(P) * (d + 1) + 1):
                closed, interior = count_closed(P, n), count_interior(P, n)
                assert closed == interior + count_boundary_edge_walk(P, n)
        else:
            for n in range(1, 4):
                cells = list(lattice_points(P, n))
                inner = list(lattice_points(P, n, "open"))
                boundary = sum(1 for x in cells if not contains(dilate(P, n), x, "open"))
                assert count_closed(P, n) == len(cells) == len(inner) + boundary
                assert count_interior(P, n) == len(inner)
