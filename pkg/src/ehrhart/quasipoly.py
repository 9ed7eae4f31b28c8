"""Exact rationals, univariate polynomials and quasi-polynomials.

Rationals are :class:`fractions.Fraction` throughout; Fraction already keeps
itself in lowest terms with a positive denominator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer. Anything else (floats, ``1//2``) is rejected."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise ValueError("divisors() needs a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _minimal_repeat(seq: Sequence) -> int:
    """Smallest divisor p of len(seq) with seq[i] == seq[i % p] for all i."""
    for p in divisors(len(seq)):
        if all(seq[i] == seq[i % p] for i in range(p, len(seq))):
            return p
    return len(seq)  # unreachable: p = len(seq) always matches


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in one variable ``n``; ``coefficients[k]`` multiplies ``n**k``.

    Trailing zeros are stripped on construction, so two polynomials are equal
    exactly when their coefficient tuples are.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [as_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, *coefficients: RationalLike) -> "Polynomial":
        """``Polynomial.of(c0, c1, c2)`` is ``c0 + c1 n + c2 n^2``."""
        return cls(tuple(as_rational(c) for c in coefficients))

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls((as_rational(c),))

    @classmethod
    def linear_factor(cls, root: RationalLike) -> "Polynomial":
        """The monic polynomial ``n - root``."""
        return cls((-as_rational(root), Fraction(1)))

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else None

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def __call__(self, n: RationalLike) -> Fraction:
        return poly_eval(self, n)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", RationalLike]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = as_rational(other)
            return Polynomial(tuple(c * a for a in self.coefficients))
        if not self.coefficients or not other.coefficients:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def __str__(self) -> str:
        return format_polynomial(self)


def poly_eval(p: Polynomial, n: RationalLike) -> Fraction:
    """Horner evaluation, exact."""
    x = as_rational(n)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def format_polynomial(p: Polynomial) -> str:
    """Render highest degree first, e.g. ``1/2 n^2 + 3/2 n + 1``."""
    if not p.coefficients:
        return "0"
    parts: list[str] = []
    for k in range(len(p.coefficients) - 1, -1, -1):
        c = p.coefficients[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            var = "n" if k == 1 else f"n^{k}"
            body = var if mag == 1 else f"{format_rational(mag)} {var}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class QuasiPolynomial:
    """Quasi-polynomial with constituents indexed 1..period.

    ``constituents[j - 1]`` applies when ``n ≡ j (mod period)``; the last
    constituent serves ``n ≡ 0``.
    """

    period: int
    constituents: tuple[Polynomial, ...]
    dimension_hint: int | None = None

    def __post_init__(self):
        constituents = tuple(self.constituents)
        object.__setattr__(self, "constituents", constituents)
        if self.period < 1:
            raise ValueError("period must be a positive integer")
        if len(constituents) != self.period:
            raise ValueError(
                f"expected {self.period} constituents, got {len(constituents)}"
            )
        if self.dimension_hint is not None:
            for j, f in enumerate(constituents, start=1):
                if f.degree is not None and f.degree > self.dimension_hint:
                    raise ValueError(
                        f"constituent {j} has degree {f.degree} > {self.dimension_hint}"
                    )

    @classmethod
    def polynomial(cls, p: Polynomial, dimension_hint: int | None = None) -> "QuasiPolynomial":
        return cls(1, (p,), dimension_hint)

    def residue_index(self, n: int) -> int:
        """Constituent index in 1..period selected by ``n`` (any integer)."""
        r = n % self.period  # Python's % is already non-negative
        return r if r else self.period

    def constituent(self, j: int) -> Polynomial:
        if not 1 <= j <= self.period:
            raise IndexError(f"constituent index {j} outside 1..{self.period}")
        return self.constituents[j - 1]

    def __call__(self, n: int) -> Fraction:
        return qp_eval(self, n)

    @property
    def degree(self) -> int | None:
        degs = [f.degree for f in self.constituents if f.degree is not None]
        return max(degs) if degs else None

    def expand(self, m: int) -> "QuasiPolynomial":
        """Same function stored with period ``m * period``."""
        if m < 1:
            raise ValueError("expansion factor must be positive")
        return QuasiPolynomial(self.period * m, self.constituents * m, self.dimension_hint)

    def __str__(self) -> str:
        return format_quasipolynomial(self)


def qp_eval(q: QuasiPolynomial, n: int) -> Fraction:
    return poly_eval(q.constituents[q.residue_index(n) - 1], n)


def qp_minimal_period(q: QuasiPolynomial) -> int:
    return _minimal_repeat(q.constituents)


def qp_reduce(q: QuasiPolynomial) -> QuasiPolynomial:
    """Equivalent quasi-polynomial stored with its minimal period."""
    p = qp_minimal_period(q)
    return QuasiPolynomial(p, q.constituents[:p], q.dimension_hint)


def qp_coefficient_periods(q: QuasiPolynomial) -> list[int]:
    """Minimal period of each coefficient sequence ``c_{j,k}``, k = 0..d.

    ``d`` is the dimension hint when set, otherwise the largest constituent
    degree.
    """
    d = q.dimension_hint if q.dimension_hint is not None else (q.degree or 0)
    return [
        _minimal_repeat([f.coefficient(k) for f in q.constituents]) for k in range(d + 1)
    ]


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = lcm(out, v)
    return out


def format_quasipolynomial(q: QuasiPolynomial) -> str:
    return "\n".join(
        f"{j}: {format_polynomial(f)}" for j, f in enumerate(q.constituents, start=1)
    )


def lagrange_interpolate(points: Sequence[tuple[RationalLike, RationalLike]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points``, exactly."""
    xs = [as_rational(x) for x, _ in points]
    ys = [as_rational(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Polynomial.constant(1)
        scale = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial.linear_factor(xj)
                scale *= xi - xj
        result = result + basis * (yi / scale)
    return result
