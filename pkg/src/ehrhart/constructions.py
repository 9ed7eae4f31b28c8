"""Polytope families with known Ehrhart quasi-polynomials.

Each generator returns a :class:`ConstructionSpec` holding the polytope and
its expected quasi-polynomial in constituent form, so golden comparisons are
plain equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polytope import HalfSpace, RationalPolytope, denominator, product_with_box
from .quasipoly import Polynomial, QuasiPolynomial, qp_minimal_period


class ConstructionError(ValueError):
    """Invalid construction parameters."""


@dataclass(frozen=True)
class ConstructionSpec:
    name: str
    parameters: dict = field(compare=False)
    polytope: RationalPolytope
    expected: QuasiPolynomial
    claimed_denominator: int
    claimed_period: int

    def __post_init__(self):
        if denominator(self.polytope) != self.claimed_denominator:
            raise AssertionError(f"{self.name}: denominator mismatch")
        if qp_minimal_period(self.expected) != self.claimed_period:
            raise AssertionError(f"{self.name}: expected quasi-polynomial has wrong period")


def _check_D(D: int) -> None:
    if not isinstance(D, int) or D < 2:
        raise ConstructionError(f"D must be an integer >= 2, got {D!r}")


def _check_s(D: int, s: int) -> None:
    if not isinstance(s, int) or s < 1 or D % s:
        raise ConstructionError(f"s must be a positive divisor of D = {D}, got {s!r}")


def triangle_polynomial(D: int) -> Polynomial:
    return Polynomial.of(1, Fraction(D + 1, 2), Fraction(D - 1, 2))


def triangle(D: int) -> ConstructionSpec:
    """Triangle (0,0), (1,(D-1)/D), (D,0): denominator D but a polynomial count."""
    _check_D(D)
    P = RationalPolytope.polygon([(0, 0), (1, Fraction(D - 1, D)), (D, 0)])
    expected = QuasiPolynomial.polynomial(triangle_polynomial(D), 2)
    return ConstructionSpec("triangle", {"D": D}, P, expected, D, 1)


def _pentagon_expected(D: int, s: int) -> tuple[Polynomial, ...]:
    # floor(n/s) = (n - r)/s on the class n = r mod s
    tri = triangle_polynomial(D)
    strip = Polynomial.of(1, D)
    out = []
    for j in range(1, s + 1):
        r = j % s
        out.append(tri + Polynomial.of(Fraction(-r, s), Fraction(1, s)) * strip)
    return tuple(out)


def pentagon(D: int, s: int) -> ConstructionSpec:
    """The triangle with a strip of height 1/s glued below; minimum period s."""
    _check_D(D)
    _check_s(D, s)
    h = Fraction(-1, s)
    P = RationalPolytope.polygon([(0, 0), (1, Fraction(D - 1, D)), (D, 0), (D, h), (0, h)])
    expected = QuasiPolynomial(s, _pentagon_expected(D, s), 2)
    return ConstructionSpec("pentagon", {"D": D, "s": s}, P, expected, D, s)


def prism(D: int, s: int, d: int) -> ConstructionSpec:
    """``pentagon(D, s) x [0,1]^(d-2)``, a d-dimensional polytope with period s."""
    _check_D(D)
    _check_s(D, s)
    if not isinstance(d, int) or d < 3:
        raise ConstructionError(f"prism dimension must be an integer >= 3, got {d!r}")
    base = pentagon(D, s)
    P = product_with_box(base.polytope, d - 2)
    box = Polynomial.of(1, 1) ** (d - 2)
    expected = QuasiPolynomial(s, tuple(box * f for f in base.expected.constituents), d)
    return ConstructionSpec("prism", {"D": D, "s": s, "d": d}, P, expected, D, s)


# Facets of the pyramid over the unit square with apex (1/2, 0, 1/2),
# checked against the vertices on construction.
_PYRAMID_VERTICES = [
    (0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0),
    (Fraction(1, 2), 0, Fraction(1, 2)),
]
_PYRAMID_FACETS = [
    ((0, 0, -1), 0),   # z >= 0
    ((0, -1, 0), 0),   # y >= 0
    ((-1, 0, 1), 0),   # z <= x
    ((1, 0, 1), 1),    # x + z <= 1
    ((0, 1, 2), 1),    # y + 2z <= 1
]


def stanley_pyramid() -> ConstructionSpec:
    """3-dimensional pyramid with denominator 2 and count C(n+3, 3)."""
    facets = [HalfSpace.normalized(a, b) for a, b in _PYRAMID_FACETS]
    P = RationalPolytope.from_vertices(_PYRAMID_VERTICES, facets)
    expected = QuasiPolynomial.polynomial(
        Polynomial.of(1, 1) * Polynomial.of(2, 1) * Polynomial.of(3, 1) * Fraction(1, 6), 3
    )
    return ConstructionSpec("stanley", {}, P, expected, 2, 1)


def example_triangle(id: int, D: int = 3) -> ConstructionSpec:
    """Worked polygon examples.

    1: alias of :func:`triangle` with denominator ``D``.
    2: triangle (-1/2,-1/2), (1/2,-1/2), (0,3/2); odd n^2+1, even n^2+n+1.
    3: triangle (0,0), (1,0), (0,1/2); odd n^2/4+n+3/4, even n^2/4+n+1.
    """
    if id == 1:
        spec = triangle(D)
        return ConstructionSpec("example", {"id": 1, "D": D}, spec.polytope,
                                spec.expected, D, 1)
    if id == 2:
        half = Fraction(1, 2)
        P = RationalPolytope.polygon([(-half, -half), (half, -half), (0, Fraction(3, 2))])
        expected = QuasiPolynomial(2, (Polynomial.of(1, 0, 1), Polynomial.of(1, 1, 1)), 2)
        return ConstructionSpec("example", {"id": 2}, P, expected, 2, 2)
    if id == 3:
        P = RationalPolytope.polygon([(0, 0), (1, 0), (0, Fraction(1, 2))])
        quarter = Fraction(1, 4)
        expected = QuasiPolynomial(
            2,
            (Polynomial.of(Fraction(3, 4), 1, quarter), Polynomial.of(1, 1, quarter)),
            2,
        )
        return ConstructionSpec("example", {"id": 3}, P, expected, 2, 2)
    raise ConstructionError(f"example id must be 1, 2 or 3, got {id!r}")


CONSTRUCTIONS = ("triangle", "pentagon", "prism", "stanley", "example")


def build(name: str, D: int | None = None, s: int | None = None,
          dim: int | None = None, id: int | None = None) -> ConstructionSpec:
    """Look up a construction by name; missing required parameters raise."""

    def need(value, label):
        if value is None:
            raise ConstructionError(f"construction {name!r} needs --{label}")
        return value

    if name == "triangle":
        return triangle(need(D, "D"))
    if name == "pentagon":
        return pentagon(need(D, "D"), need(s, "s"))
    if name == "prism":
        return prism(need(D, "D"), need(s, "s"), need(dim, "dim"))
    if name == "stanley":
        return stanley_pyramid()
    if name == "example":
        ident = need(id, "id")
        if ident == 1:
            return example_triangle(1, need(D, "D"))
        return example_triangle(ident)
    raise ConstructionError(
        f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}"
    )
