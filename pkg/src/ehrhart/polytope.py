"""Rational polytopes given by vertices, with facets where needed for membership.

Supported shapes:

* segments in R^1,
* full-dimensional polygons in R^2 (facets derived from the hull),
* explicit polytopes in R^d, d >= 3, whose facets are supplied by the caller,
* products ``base x [0, scale]^k`` kept structurally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from math import gcd, lcm
from typing import Iterable, Sequence

from .quasipoly import RationalLike, as_rational, format_rational, parse_rational

Point = tuple[Fraction, ...]


class PolytopeError(ValueError):
    """Invalid polytope input."""


class DegenerateError(PolytopeError):
    """Input is not full-dimensional (collinear points, zero area, ...)."""


class PolytopeFormatError(PolytopeError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def as_point(coords: Iterable[RationalLike]) -> Point:
    return tuple(as_rational(c) for c in coords)


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class HalfSpace:
    """The constraint ``normal . x <= offset``."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", as_point(self.normal))
        object.__setattr__(self, "offset", as_rational(self.offset))
        if all(a == 0 for a in self.normal):
            raise PolytopeError("half-space normal must be nonzero")

    @classmethod
    def normalized(cls, normal: Sequence[RationalLike], offset: RationalLike) -> "HalfSpace":
        """Rescale by a positive factor so the normal has coprime integer entries."""
        normal = as_point(normal)
        offset = as_rational(offset)
        scale = 1
        for a in normal:
            scale = lcm(scale, a.denominator)
        ints = [int(a * scale) for a in normal]
        g = 0
        for a in ints:
            g = gcd(g, a)
        if g == 0:
            raise PolytopeError("half-space normal must be nonzero")
        return cls(tuple(Fraction(a // g) for a in ints), offset * scale / g)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return _dot(self.normal, x)

    def holds(self, x: Sequence[Fraction], strict: bool = False) -> bool:
        v = self.value(x)
        return v < self.offset if strict else v <= self.offset

    def is_tight(self, x: Sequence[Fraction]) -> bool:
        return self.value(x) == self.offset

    def scaled(self, n: RationalLike) -> "HalfSpace":
        return HalfSpace(self.normal, self.offset * as_rational(n))

    def padded(self, extra: int) -> "HalfSpace":
        return HalfSpace(self.normal + (Fraction(0),) * extra, self.offset)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_order_2d(points: Iterable[Sequence[RationalLike]]) -> list[Point]:
    """Convex hull vertices, counterclockwise from the lexicographically smallest.

    Points interior to the hull or to one of its edges are dropped. Raises
    :class:`DegenerateError` when all points are collinear.
    """
    pts = sorted(set(as_point(p) for p in points))
    if any(len(p) != 2 for p in pts):
        raise PolytopeError("hull_order_2d needs points in R^2")
    if len(pts) < 3:
        raise DegenerateError("need at least three non-collinear points")
    # Andrew's monotone chain; `<= 0` drops collinear points.
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateError("points are collinear")
    return hull


def _edges_to_halfspaces(hull: Sequence[Point]) -> list[HalfSpace]:
    out = []
    for a, b in zip(hull, hull[1:] + hull[:1]):
        dx, dy = b[0] - a[0], b[1] - a[1]
        # outward normal of a counterclockwise edge
        h = HalfSpace.normalized((dy, -dx), 0)
        out.append(HalfSpace(h.normal, h.value(a)))
    return out


@dataclass(frozen=True)
class RationalPolytope:
    """A rational polytope.

    Build instances with :meth:`segment`, :meth:`polygon`,
    :meth:`from_vertices` or :func:`product_with_box` rather than directly.
    For products, ``vertices`` and ``facets`` are materialized from ``base``.
    """

    ambient_dim: int
    vertices: tuple[Point, ...]
    facets: tuple[HalfSpace, ...] | None = None
    base: "RationalPolytope | None" = field(default=None, repr=False)
    box_dims: int = 0
    box_scale: int = 1

    @property
    def structure(self) -> str:
        return "product" if self.base is not None else "explicit"

    @property
    def is_product(self) -> bool:
        return self.base is not None

    # -- constructors -----------------------------------------------------

    @classmethod
    def segment(cls, lo: RationalLike, hi: RationalLike) -> "RationalPolytope":
        lo, hi = as_rational(lo), as_rational(hi)
        if lo >= hi:
            raise DegenerateError(f"segment [{lo}, {hi}] is empty or a point")
        facets = (HalfSpace((Fraction(1),), hi), HalfSpace((Fraction(-1),), -lo))
        return cls(1, ((lo,), (hi,)), facets)

    @classmethod
    def polygon(cls, points: Iterable[Sequence[RationalLike]]) -> "RationalPolytope":
        hull = hull_order_2d(points)
        return cls(2, tuple(hull), tuple(_edges_to_halfspaces(hull)))

    @classmethod
    def from_vertices(
        cls,
        vertices: Iterable[Sequence[RationalLike]],
        facets: Iterable[HalfSpace] | None = None,
    ) -> "RationalPolytope":
        """Dispatch on dimension. Facets are required (and validated) for d >= 3."""
        pts = [as_point(v) for v in vertices]
        if not pts:
            raise PolytopeError("polytope needs at least one vertex")
        dim = len(pts[0])
        if dim < 1 or any(len(p) != dim for p in pts):
            raise PolytopeError("vertices must share one positive dimension")
        facets = None if facets is None else [
            HalfSpace.normalized(h.normal, h.offset) for h in facets
        ]
        if dim == 1:
            xs = [p[0] for p in pts]
            poly = cls.segment(min(xs), max(xs))
        elif dim == 2:
            poly = cls.polygon(pts)
        else:
            if not facets:
                raise PolytopeError(
                    f"explicit polytopes in dimension {dim} need a facet list"
                )
            poly = cls(dim, tuple(dict.fromkeys(pts)), tuple(dict.fromkeys(facets)))
        if facets is not None:
            validate_facets(poly.vertices, facets, dim)
        return poly

    # -- queries ----------------------------------------------------------

    def halfspaces(self) -> tuple[HalfSpace, ...]:
        """Facet list; products get base facets plus the box bounds."""
        if self.base is None:
            if self.facets is None:
                raise PolytopeError("no facet representation available")
            return self.facets
        d0 = self.base.ambient_dim
        out = [h.padded(self.box_dims) for h in self.base.halfspaces()]
        for i in range(self.box_dims):
            e = [Fraction(0)] * self.ambient_dim
            e[d0 + i] = Fraction(-1)
            out.append(HalfSpace(tuple(e), 0))
            e[d0 + i] = Fraction(1)
            out.append(HalfSpace(tuple(e), self.box_scale))
        return tuple(out)


def validate_facets(vertices: Sequence[Point], facets: Sequence[HalfSpace], dim: int) -> None:
    """Every vertex satisfies every facet; every facet is tight at >= dim vertices."""
    for h in facets:
        if len(h.normal) != dim:
            raise PolytopeError("facet dimension does not match vertices")
        tight = 0
        for v in vertices:
            if not h.holds(v):
                raise PolytopeError(
                    f"vertex {_fmt_point(v)} violates facet {_fmt_halfspace(h)}"
                )
            tight += h.is_tight(v)
        if tight < dim:
            raise PolytopeError(
                f"facet {_fmt_halfspace(h)} is tight at only {tight} vertices"
            )


def _fmt_point(p: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(c) for c in p) + ")"


def _fmt_halfspace(h: HalfSpace) -> str:
    return " ".join(format_rational(a) for a in h.normal) + " <= " + format_rational(h.offset)


def denominator(P: RationalPolytope) -> int:
    """Least n with nP integral: lcm of the vertex coordinate denominators."""
    out = 1
    for v in P.vertices:
        for c in v:
            out = lcm(out, c.denominator)
    return out


def dilate(P: RationalPolytope, n: int) -> RationalPolytope:
    if n < 1:
        raise ValueError("dilation factor must be a positive integer")
    if P.base is not None:
        return product_with_box(dilate(P.base, n), P.box_dims, P.box_scale * n)
    facets = None if P.facets is None else tuple(h.scaled(n) for h in P.facets)
    vertices = tuple(tuple(c * n for c in v) for v in P.vertices)
    return RationalPolytope(P.ambient_dim, vertices, facets)


def vrep_to_hrep_2d(P: RationalPolytope) -> list[HalfSpace]:
    """One ``<=`` constraint per edge with coprime integer outward normal."""
    if P.ambient_dim != 2:
        raise PolytopeError("vrep_to_hrep_2d needs a polygon")
    return _edges_to_halfspaces(hull_order_2d(P.vertices))


def contains(P: RationalPolytope, x: Sequence[RationalLike], mode: str = "closed") -> bool:
    """Closed or open (strict) membership of the point ``x`` in ``P``."""
    if mode not in ("closed", "open"):
        raise ValueError(f"unknown containment mode {mode!r}")
    x = as_point(x)
    if len(x) != P.ambient_dim:
        raise ValueError("point dimension does not match polytope")
    strict = mode == "open"
    if P.base is not None:
        d0 = P.base.ambient_dim
        if not contains(P.base, x[:d0], mode):
            return False
        if strict:
            return all(0 < c < P.box_scale for c in x[d0:])
        return all(0 <= c <= P.box_scale for c in x[d0:])
    if P.facets is None:
        raise PolytopeError("no facet representation available for membership")
    return all(h.holds(x, strict) for h in P.facets)


def product_with_box(P: RationalPolytope, k: int, scale: int = 1) -> RationalPolytope:
    """``P x [0, scale]^k``; nested products are flattened onto the innermost base."""
    if k < 1:
        raise ValueError("box dimension must be positive")
    if P.base is not None:
        if P.box_scale != scale:
            raise PolytopeError("cannot merge boxes with different scales")
        return product_with_box(P.base, P.box_dims + k, scale)
    corners = list(cartesian((Fraction(0), Fraction(scale)), repeat=k))
    vertices = tuple(v + c for v in P.vertices for c in corners)
    return RationalPolytope(P.ambient_dim + k, vertices, None, P, k, scale)


def area_2d(P: RationalPolytope) -> Fraction:
    """Shoelace area of a polygon."""
    if P.ambient_dim != 2 or P.base is not None:
        raise PolytopeError("area_2d needs an explicit polygon")
    hull = hull_order_2d(P.vertices)
    twice = sum(
        (a[0] * b[1] - a[1] * b[0] for a, b in zip(hull, hull[1:] + hull[:1])),
        Fraction(0),
    )
    if twice == 0:
        raise DegenerateError("polygon has zero area")
    return abs(twice) / 2


# -- text file format ------------------------------------------------------


def parse_polytope(text: str) -> RationalPolytope:
    """Parse the ``dim`` / ``vertex`` / ``facet`` line format."""
    dim = None
    vertices: list[tuple[int, Point]] = []
    facets: list[HalfSpace] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *fields = line.split()

        def rationals(items):
            try:
                return [parse_rational(s) for s in items]
            except ValueError as exc:
                raise PolytopeFormatError(lineno, str(exc)) from None

        if keyword == "dim":
            if dim is not None:
                raise PolytopeFormatError(lineno, "duplicate dim line")
            if len(fields) != 1 or not fields[0].isdigit() or int(fields[0]) < 1:
                raise PolytopeFormatError(lineno, "dim needs one positive integer")
            dim = int(fields[0])
        elif keyword in ("vertex", "facet"):
            if dim is None:
                raise PolytopeFormatError(lineno, f"{keyword} before dim line")
            want = dim if keyword == "vertex" else dim + 1
            if len(fields) != want:
                raise PolytopeFormatError(
                    lineno, f"{keyword} needs {want} entries, got {len(fields)}"
                )
            values = rationals(fields)
            if keyword == "vertex":
                vertices.append((lineno, tuple(values)))
            else:
                try:
                    facets.append(HalfSpace.normalized(values[:-1], values[-1]))
                except PolytopeError as exc:
                    raise PolytopeFormatError(lineno, str(exc)) from None
        else:
            raise PolytopeFormatError(lineno, f"unknown keyword {keyword!r}")
    if dim is None:
        raise PolytopeFormatError(0, "missing dim line")
    if not vertices:
        raise PolytopeFormatError(0, "no vertex lines")
    return RationalPolytope.from_vertices([v for _, v in vertices], facets or None)


def format_polytope(P: RationalPolytope, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"dim {P.ambient_dim}")
    for v in P.vertices:
        lines.append("vertex " + " ".join(format_rational(c) for c in v))
    for h in P.halfspaces():
        lines.append(
            "facet " + " ".join(format_rational(a) for a in h.normal)
            + " " + format_rational(h.offset)
        )
    return "\n".join(lines) + "\n"
