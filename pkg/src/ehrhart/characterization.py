"""Decide whether a rational polygon has a polynomial Ehrhart function.

A polygon's counting function is a polynomial exactly when, for
n = 1..D(P), every dilate obeys Pick's formula and the boundary count grows
linearly. The report checks that finite condition and, separately, fits the
quasi-polynomial and compares; disagreement means a bug somewhere below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import default_horizon, fit_quasipolynomial, period_report_from_qp, sample_counts
from .enumeration import count_boundary, count_closed
from .polytope import PolytopeError, RationalPolytope, area_2d, denominator
from .quasipoly import Polynomial, QuasiPolynomial


class InconsistencyError(AssertionError):
    """Two routes to the same verdict disagree."""


@dataclass(frozen=True)
class PickCheck:
    holds: bool
    residual: Fraction  # count - (A n^2 + boundary/2 + 1)
    count: int
    boundary: int


@dataclass(frozen=True)
class LinearCheck:
    holds: bool
    boundary: int  # boundary count of nP
    scaled: int    # n times the boundary count of P


@dataclass(frozen=True)
class DilateRow:
    n: int
    count: int
    boundary: int
    pick_holds: bool
    linear_holds: bool


@dataclass(frozen=True)
class CharacterizationReport:
    area: Fraction
    denominator: int
    rows: tuple[DilateRow, ...]
    verdict_conditions: bool
    verdict_polynomial: bool
    matches_predicted: bool
    predicted: Polynomial
    fitted: QuasiPolynomial  # reduced to its minimal period

    @property
    def minimal_period(self) -> int:
        return self.fitted.period


def _require_polygon(P: RationalPolytope) -> None:
    if P.ambient_dim != 2 or P.is_product:
        raise PolytopeError("characterization applies to polygons only")


def check_pick(P: RationalPolytope, n: int, limit: int | None = None) -> PickCheck:
    _require_polygon(P)
    count = count_closed(P, n, limit)
    boundary = count_boundary(P, n, limit)
    residual = count - (area_2d(P) * n * n + Fraction(boundary, 2) + 1)
    return PickCheck(residual == 0, residual, count, boundary)


def check_boundary_linear(P: RationalPolytope, n: int, limit: int | None = None) -> LinearCheck:
    _require_polygon(P)
    boundary = count_boundary(P, n, limit)
    scaled = n * count_boundary(P, 1, limit)
    return LinearCheck(boundary == scaled, boundary, scaled)


def theorem3_report(P: RationalPolytope, limit: int | None = None) -> CharacterizationReport:
    """Per-dilate Pick/linearity checks for n = 1..D plus the fitted verdict.

    Raises :class:`InconsistencyError` if the finite checks, the minimal
    period and the comparison with ``A n^2 + (boundary of P)/2 n + 1`` do not
    all agree.
    """
    _require_polygon(P)
    A = area_2d(P)
    D = denominator(P)
    series = sample_counts(P, default_horizon(D, 2), limit)
    boundary_1 = count_boundary(P, 1, limit)
    rows = []
    for n in range(1, D + 1):
        count = series.at(n)
        boundary = count_boundary(P, n, limit)
        pick = count == A * n * n + Fraction(boundary, 2) + 1
        rows.append(DilateRow(n, count, boundary, pick, boundary == n * boundary_1))
    predicted = Polynomial.of(1, Fraction(boundary_1, 2), A)
    report = period_report_from_qp(D, fit_quasipolynomial(series, 2, D))
    fitted = report.quasipolynomial
    verdict_conditions = all(r.pick_holds and r.linear_holds for r in rows)
    verdict_polynomial = fitted.period == 1
    matches = all(f == predicted for f in fitted.constituents)
    if not verdict_conditions == verdict_polynomial == matches:
        raise InconsistencyError(
            f"verdicts disagree: conditions={verdict_conditions}, "
            f"polynomial={verdict_polynomial}, matches predicted={matches}"
        )
    return CharacterizationReport(
        A, D, tuple(rows), verdict_conditions, verdict_polynomial, matches, predicted, fitted
    )
