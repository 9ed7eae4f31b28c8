"""Ehrhart quasi-polynomials of rational polytopes, computed exactly.

Counts lattice points in dilates, fits quasi-polynomials by interpolation,
and reports minimal and per-coefficient periods.
"""

from .characterization import CharacterizationReport, check_boundary_linear, check_pick, theorem3_report
from .constructions import ConstructionSpec, example_triangle, pentagon, prism, stanley_pyramid, triangle
from .engine import (
    FitError,
    PeriodReport,
    fit_quasipolynomial,
    period_report,
    sample_counts,
    segment_constituents,
    verify_reciprocity,
)
from .enumeration import (
    CountSeries,
    EnumerationLimitError,
    count_boundary,
    count_closed,
    count_halfopen_parallelogram,
    count_interior,
    count_segment_1d,
)
from .polytope import (
    HalfSpace,
    RationalPolytope,
    area_2d,
    contains,
    denominator,
    dilate,
    hull_order_2d,
    product_with_box,
    vrep_to_hrep_2d,
)
from .quasipoly import (
    Polynomial,
    QuasiPolynomial,
    poly_eval,
    qp_coefficient_periods,
    qp_eval,
    qp_minimal_period,
    qp_reduce,
)

__version__ = "0.1.0"
