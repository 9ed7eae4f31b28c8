"""Fit Ehrhart quasi-polynomials from counts and analyse their periods."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm

from .enumeration import CountSeries, count_closed, count_interior
from .polytope import RationalPolytope, denominator
from .quasipoly import (
    Polynomial,
    QuasiPolynomial,
    RationalLike,
    as_rational,
    lagrange_interpolate,
    lcm_all,
    qp_coefficient_periods,
    qp_eval,
    qp_minimal_period,
    qp_reduce,
)


class FitError(ValueError):
    """Samples are inconsistent with a quasi-polynomial of the given shape."""


def sample_counts(
    P: RationalPolytope, N: int, limit: int | None = None, use_structure: bool = True
) -> CountSeries:
    if N < 1:
        raise ValueError("sample horizon must be positive")
    return CountSeries(
        tuple(count_closed(P, n, limit, use_structure) for n in range(1, N + 1)),
        kind="closed",
    )


def default_horizon(D: int, dim: int) -> int:
    """Samples needed to fit (D per degree of freedom) plus D validation extras."""
    return D * (dim + 1) + D


def fit_quasipolynomial(series: CountSeries, dim: int, period_hint: int) -> QuasiPolynomial:
    """Interpolate one degree-``dim`` constituent per residue class mod ``period_hint``.

    Constituent ``j`` passes through ``n = j, j + D, ..., j + dim*D``; every
    sample beyond those is checked against the result.
    """
    D = period_hint
    if D < 1:
        raise ValueError("period hint must be positive")
    if series.kind != "closed":
        raise ValueError("fitting needs closed counts")
    if len(series) < D * (dim + 1):
        raise ValueError(
            f"need at least {D * (dim + 1)} samples for period {D} and degree {dim}, "
            f"got {len(series)}"
        )
    constituents = []
    for j in range(1, D + 1):
        nodes = [j + i * D for i in range(dim + 1)]
        constituents.append(lagrange_interpolate([(n, series.at(n)) for n in nodes]))
    q = QuasiPolynomial(D, tuple(constituents), dim)
    for n in range(1, len(series) + 1):
        if qp_eval(q, n) != series.at(n):
            raise FitError(
                f"period hint too small or not an Ehrhart series: sample n = {n} is "
                f"{series.at(n)}, fit predicts {qp_eval(q, n)}"
            )
    return q


def segment_constituents(lo: RationalLike, hi: RationalLike) -> QuasiPolynomial:
    """Closed-form Ehrhart quasi-polynomial of the segment ``[lo, hi]``.

    ``f_j(n) = (hi - lo) n + 1 - ({-j lo}) - ({j hi})`` with ``{x}`` the
    fractional part, period ``lcm`` of the two denominators.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if lo >= hi:
        raise ValueError(f"segment [{lo}, {hi}] is empty or a point")
    D = lcm(lo.denominator, hi.denominator)
    length = hi - lo
    constituents = []
    for j in range(1, D + 1):
        const = 1 - (ceil(j * lo) - j * lo) - (j * hi - floor(j * hi))
        constituents.append(Polynomial.of(const, length))
    return QuasiPolynomial(D, tuple(constituents), 1)


@dataclass(frozen=True)
class ReciprocityResult:
    ok: bool
    failures: tuple[tuple[int, int, Fraction], ...]  # (n, interior count, (-1)^d q(-n))

    def __bool__(self) -> bool:
        return self.ok


def verify_reciprocity(
    P: RationalPolytope, q: QuasiPolynomial, N: int, limit: int | None = None
) -> ReciprocityResult:
    sign = -1 if P.ambient_dim % 2 else 1
    failures = []
    for n in range(1, N + 1):
        lhs = count_interior(P, n, limit)
        rhs = sign * qp_eval(q, -n)
        if lhs != rhs:
            failures.append((n, lhs, rhs))
    return ReciprocityResult(not failures, tuple(failures))


@dataclass(frozen=True)
class PeriodReport:
    denominator: int
    minimal_period: int
    coefficient_periods: tuple[int, ...]
    quasipolynomial: QuasiPolynomial  # stored with the minimal period

    def __post_init__(self):
        object.__setattr__(self, "coefficient_periods", tuple(self.coefficient_periods))
        if self.denominator % self.minimal_period:
            raise AssertionError("minimal period must divide the denominator")
        if lcm_all(self.coefficient_periods) != self.minimal_period:
            raise AssertionError("coefficient periods must have lcm = minimal period")
        if self.quasipolynomial.period != self.minimal_period:
            raise AssertionError("report quasi-polynomial must be reduced")

    @property
    def collapse(self) -> bool:
        return self.minimal_period < self.denominator


def period_report_from_qp(D: int, q: QuasiPolynomial) -> PeriodReport:
    reduced = qp_reduce(q)
    return PeriodReport(D, reduced.period, tuple(qp_coefficient_periods(reduced)), reduced)


def fit_polytope(
    P: RationalPolytope, N: int | None = None, limit: int | None = None
) -> QuasiPolynomial:
    """Sample counts of ``P`` and fit with the denominator as period."""
    D = denominator(P)
    d = P.ambient_dim
    N = default_horizon(D, d) if N is None else N
    return fit_quasipolynomial(sample_counts(P, N, limit), d, D)


def period_report(P: RationalPolytope, limit: int | None = None) -> PeriodReport:
    q = fit_polytope(P, limit=limit)
    return period_report_from_qp(denominator(P), q)


def minimal_period(P: RationalPolytope, limit: int | None = None) -> int:
    return qp_minimal_period(fit_polytope(P, limit=limit))
