from fractions import Fraction as F

import pytest

from conftest import random_polygons

from ehrhart.characterization import check_boundary_linear, check_pick, theorem3_report
from ehrhart.constructions import example_triangle, pentagon, stanley_pyramid, triangle
from ehrhart.polytope import PolytopeError, RationalPolytope
from ehrhart.quasipoly import Polynomial

SQUARE = RationalPolytope.polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
E2 = example_triangle(2).polytope
E3 = example_triangle(3).polytope


def test_pick_examples():
    c = check_pick(E2, 1)
    assert c.holds and (c.count, c.boundary) == (2, 0)
    c = check_pick(E3, 1)
    assert not c.holds and c.residual == F(-1, 4)
    assert all(check_pick(SQUARE, n).holds for n in range(1, 6))


def test_boundary_linear_examples():
    c = check_boundary_linear(E2, 2)
    assert not c.holds and (c.boundary, c.scaled) == (4, 0)
    c = check_boundary_linear(E3, 2)
    assert c.holds and (c.boundary, c.scaled) == (4, 4)
    assert all(check_boundary_linear(triangle(3).polytope, n).holds for n in (1, 2, 3))


def test_report_triangle():
    r = theorem3_report(triangle(4).polytope)
    assert r.verdict_polynomial and r.verdict_conditions and r.matches_predicted
    assert r.predicted == Polynomial.of(1, F(5, 2), F(3, 2))
    assert r.fitted.constituents == (r.predicted,)
    assert r.rows[0].boundary == 5  # D + 1


def test_report_example2():
    r = theorem3_report(E2)
    assert [row.pick_holds for row in r.rows] == [True, True]
    assert [row.linear_holds for row in r.rows] == [True, False]
    assert not r.verdict_polynomial and r.minimal_period == 2


def test_report_example3():
    r = theorem3_report(E3)
    assert [row.linear_holds for row in r.rows] == [True, True]
    assert r.rows[0].pick_holds is False
    assert not r.verdict_polynomial


def test_report_pentagon_not_polynomial():
    r = theorem3_report(pentagon(6, 2).polytope)
    assert not r.verdict_conditions and r.minimal_period == 2


@pytest.mark.parametrize("P", random_polygons(2024, 30))
def test_condition_four_implies_three(P):
    r = theorem3_report(P)
    if r.verdict_conditions:
        for n in range(r.denominator + 1, 3 * r.denominator + 1):
            assert check_pick(P, n).holds
            assert check_boundary_linear(P, n).holds


def test_integral_polygons_always_polynomial():
    for P in random_polygons(88, 15, max_den=1):
        r = theorem3_report(P)
        assert r.verdict_polynomial
        assert all(check_boundary_linear(P, n).holds for n in range(1, 5))


def test_polygons_only():
    with pytest.raises(PolytopeError):
        theorem3_report(stanley_pyramid().polytope)
