"""Exact lattice-point counting in dilates of rational polytopes.

Counting walks the integer bounding box of ``nP``. All coordinates but the
last are enumerated; along the last axis the admissible integer range is
solved from the facet inequalities in integer arithmetic, which is the same
as testing every cell of the column for membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from math import ceil, floor, lcm, prod
from typing import Iterator, Sequence

from .polytope import (
    HalfSpace,
    Point,
    PolytopeError,
    RationalPolytope,
    contains,
    dilate,
    hull_order_2d,
)
from .quasipoly import RationalLike, as_rational

DEFAULT_CELL_LIMIT = 10**8

KINDS = ("closed", "interior", "boundary")


class EnumerationLimitError(RuntimeError):
    """The bounding box of the dilate has more cells than the configured limit."""


@dataclass(frozen=True)
class CountSeries:
    """``values[n - 1]`` is the count for the n-th dilate, n = 1..len(values)."""

    values: tuple[int, ...]
    kind: str = "closed"
    method: str = "enumeration"

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.kind not in KINDS:
            raise ValueError(f"unknown count kind {self.kind!r}")
        if self.method not in ("enumeration", "formula"):
            raise ValueError(f"unknown count method {self.method!r}")
        if any(v < 0 for v in self.values):
            raise ValueError("lattice-point counts are nonnegative")

    def __len__(self) -> int:
        return len(self.values)

    def at(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"no sample for n = {n}")
        return self.values[n - 1]


def bounding_box(vertices: Sequence[Point]) -> list[range]:
    """Integer ranges covering the vertices' coordinate extremes."""
    dim = len(vertices[0])
    out = []
    for i in range(dim):
        coords = [v[i] for v in vertices]
        out.append(range(ceil(min(coords)), floor(max(coords)) + 1))
    return out


def _check_limit(box: Sequence[range], limit: int | None) -> None:
    limit = DEFAULT_CELL_LIMIT if limit is None else limit
    cells = prod(len(r) for r in box)
    if cells > limit:
        raise EnumerationLimitError(
            f"bounding box has {cells} cells, above the limit of {limit}"
        )


def _integer_rows(constraints: Sequence[tuple[HalfSpace, bool]]):
    rows = []
    for h, strict in constraints:
        scale = h.offset.denominator
        for a in h.normal:
            scale = lcm(scale, a.denominator)
        a = [int(c * scale) for c in h.normal]
        b = int(h.offset * scale)
        # for integer points, a.x < b  <=>  a.x <= b - 1
        rows.append((a, b - 1 if strict else b))
    return rows


def count_in_halfspaces(
    constraints: Sequence[tuple[HalfSpace, bool]],
    box: Sequence[range],
    limit: int | None = None,
) -> int:
    """Integer points of ``box`` satisfying each ``(halfspace, strict)`` pair."""
    _check_limit(box, limit)
    if any(len(r) == 0 for r in box):
        return 0
    rows = _integer_rows(constraints)
    last = box[-1]
    total = 0
    for prefix in cartesian(*box[:-1]):
        lo, hi = last.start, last.stop - 1
        for a, b in rows:
            r = b - sum(ai * xi for ai, xi in zip(a, prefix))
            c = a[-1]
            if c > 0:
                hi = min(hi, r // c)
            elif c < 0:
                lo = max(lo, -((-r) // c))
            elif r < 0:
                lo, hi = 1, 0
            if lo > hi:
                break
        if hi >= lo:
            total += hi - lo + 1
    return total


def _count_dilated(Q: RationalPolytope, mode: str, limit: int | None, use_structure: bool) -> int:
    if Q.base is not None and use_structure:
        s = Q.box_scale
        per_axis = s + 1 if mode == "closed" else max(s - 1, 0)
        return _count_dilated(Q.base, mode, limit, use_structure) * per_axis**Q.box_dims
    strict = mode == "open"
    constraints = [(h, strict) for h in Q.halfspaces()]
    return count_in_halfspaces(constraints, bounding_box(Q.vertices), limit)


def count_closed(
    P: RationalPolytope, n: int, limit: int | None = None, use_structure: bool = True
) -> int:
    """Number of integer points in ``nP``.

    Products are counted as base count times box count unless
    ``use_structure`` is false, in which case the full product is enumerated.
    """
    return _count_dilated(dilate(P, n), "closed", limit, use_structure)


def count_interior(
    P: RationalPolytope, n: int, limit: int | None = None, use_structure: bool = True
) -> int:
    """Number of integer points in the interior of ``nP`` (P full-dimensional)."""
    return _count_dilated(dilate(P, n), "open", limit, use_structure)


def count_boundary(
    P: RationalPolytope, n: int, limit: int | None = None, use_structure: bool = True
) -> int:
    return count_closed(P, n, limit, use_structure) - count_interior(P, n, limit, use_structure)


def lattice_points(P: RationalPolytope, n: int, mode: str = "closed",
                   limit: int | None = None) -> Iterator[Point]:
    """Every integer point of ``nP``, by testing each cell of the bounding box.

    Slow; this is the reference path the faster counters are checked against.
    """
    Q = dilate(P, n)
    box = bounding_box(Q.vertices)
    _check_limit(box, limit)
    for x in cartesian(*box):
        pt = tuple(Fraction(c) for c in x)
        if contains(Q, pt, mode):
            yield pt


def _segment_lattice_points(a: Point, b: Point) -> int:
    """Integer points on the closed segment [a, b] in the plane."""
    if a[0] == b[0]:
        if a[0].denominator != 1:
            return 0
        lo, hi = sorted((a[1], b[1]))
        return max(0, floor(hi) - ceil(lo) + 1)
    slope = (b[1] - a[1]) / (b[0] - a[0])
    lo, hi = sorted((a[0], b[0]))
    return sum(
        1
        for x in range(ceil(lo), floor(hi) + 1)
        if (a[1] + (x - a[0]) * slope).denominator == 1
    )


def count_boundary_edge_walk(P: RationalPolytope, n: int) -> int:
    """Boundary count of ``nP`` for a polygon, edge by edge.

    Independent of the half-space counters: sums the integer points on each
    closed edge and subtracts the integral vertices, which were seen twice.
    """
    if P.ambient_dim != 2 or P.is_product:
        raise PolytopeError("edge walk needs an explicit polygon")
    hull = hull_order_2d(dilate(P, n).vertices)
    on_edges = sum(_segment_lattice_points(a, b) for a, b in zip(hull, hull[1:] + hull[:1]))
    integral_vertices = sum(1 for v in hull if all(c.denominator == 1 for c in v))
    return on_edges - integral_vertices


def count_segment_1d(lo: RationalLike, hi: RationalLike, n: int) -> int:
    """``floor(n hi) - ceil(n lo) + 1``: integer points of ``n [lo, hi]``."""
    lo, hi = as_rational(lo), as_rational(hi)
    if lo > hi:
        raise ValueError(f"empty segment [{lo}, {hi}]")
    return floor(n * hi) - ceil(n * lo) + 1


def parallelogram_vertices(D: int) -> list[Point]:
    """Corners of the tiling parallelogram for denominator ``D``.

    Order: (0,0), (1,(D-1)/D), (D,0), (D-1,-(D-1)/D).
    """
    h = Fraction(D - 1, D)
    return [
        (Fraction(0), Fraction(0)),
        (Fraction(1), h),
        (Fraction(D), Fraction(0)),
        (Fraction(D - 1), -h),
    ]


def count_halfopen_parallelogram(
    D: int, n: int, t: int = 0, closed: bool = False, limit: int | None = None
) -> int:
    """Integer points of ``nQ - (0, t/D)``.

    ``Q`` is the parallelogram of :func:`parallelogram_vertices` with both
    edges at the apex ``(1, (D-1)/D)`` removed (endpoints included), so
    ``(0,0)`` and ``(D,0)`` are not in ``Q``. With ``closed=True`` the
    closure is counted instead.
    """
    if D < 2:
        raise ValueError("D must be at least 2")
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= t < D:
        raise ValueError("t must lie in 0..D-1")
    shift = Fraction(t, D)
    corners = [(n * x, n * y - shift) for x, y in parallelogram_vertices(D)]
    apex = corners[1]
    hull = hull_order_2d(corners)
    constraints = []
    for a, b in zip(hull, hull[1:] + hull[:1]):
        dx, dy = b[0] - a[0], b[1] - a[1]
        h = HalfSpace.normalized((dy, -dx), 0)
        h = HalfSpace(h.normal, h.value(a))
        constraints.append((h, not closed and apex in (a, b)))
    return count_in_halfspaces(constraints, bounding_box(corners), limit)
