"""Exact arithmetic on Z^2 vectors and rational lines in a flat.

Vectors are plain ``Vec`` named tuples of Python ints, so there is no
overflow to worry about.  Rationals are :class:`fractions.Fraction`, which
are always reduced with a positive denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Union

from .errors import ZeroVector

Rational = Union[int, Fraction]


class Vec(NamedTuple):
    x: int
    y: int

    def __neg__(self) -> "Vec":
        return Vec(-self.x, -self.y)

    def scale(self, n: int) -> "Vec":
        return Vec(n * self.x, n * self.y)

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"


def vec(v: Iterable[int]) -> Vec:
    x, y = v
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise TypeError(f"integer coordinates required, got {v!r}")
    return Vec(x, y)


def det(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def intersection_number(a, b) -> int:
    """Geometric intersection number of two torus curves, ``|det(a, b)|``."""
    return abs(det(a, b))


def intersection_number_set(a, curves) -> int:
    return sum(abs(det(a, b)) for b in curves)


def parallel(a, b) -> bool:
    return det(a, b) == 0


def is_primitive(a) -> bool:
    return gcd(a[0], a[1]) == 1


def primitive_decomposition(a) -> tuple[int, Vec]:
    """Split ``a`` as ``n * a0`` with ``a0`` primitive and pointing the same way."""
    if a[0] == 0 and a[1] == 0:
        raise ZeroVector("the zero vector has no primitive decomposition")
    n = gcd(a[0], a[1])
    return n, Vec(a[0] // n, a[1] // n)


def canonical_direction(a) -> tuple[Vec, int]:
    """Primitive direction of ``a`` with first nonzero coordinate positive.

    Returns the direction and the sign ``s`` with ``primitive(a) == s * direction``.
    """
    _, a0 = primitive_decomposition(a)
    if a0.x > 0 or (a0.x == 0 and a0.y > 0):
        return a0, 1
    return -a0, -1


def bezout_partner(a) -> Vec:
    """An integer vector ``u`` with ``det(a, u) == 1``; ``a`` must be primitive."""
    x, y = a
    # extended Euclid on (x, y): s*x + t*y = 1  =>  det((x, y), (-t, s)) = 1
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r != 1:
        raise ValueError(f"{a!r} is not primitive")
    u = Vec(-old_t, old_s)
    assert det(a, u) == 1
    return u


def frac(q: Rational) -> Fraction:
    """Fractional part in [0, 1)."""
    q = Fraction(q)
    return q - (q.numerator // q.denominator)


def floor(q: Rational) -> int:
    q = Fraction(q)
    return q.numerator // q.denominator


@dataclass(frozen=True)
class RationalLine:
    """The line ``{p : det(direction, p) == level}`` with canonical direction."""

    direction: Vec
    level: Fraction

    @classmethod
    def make(cls, direction, level: Rational) -> "RationalLine":
        n, _ = primitive_decomposition(direction)
        d, s = canonical_direction(direction)
        # det(n*s*d, p) = level  <=>  det(d, p) = s*level/n
        return cls(d, Fraction(level) * s / n)

    @classmethod
    def through(cls, direction, point) -> "RationalLine":
        d, _ = canonical_direction(direction)
        return cls(d, Fraction(det(d, point)))

    def value(self, point) -> Fraction:
        """Signed offset of ``point`` from the line, in level units."""
        return Fraction(det(self.direction, point)) - self.level

    def contains(self, point) -> bool:
        return self.value(point) == 0

    def parallel_to(self, other: "RationalLine") -> bool:
        return self.direction == other.direction

    def intersection(self, other: "RationalLine") -> tuple[Fraction, Fraction]:
        """Intersection point of two non-parallel lines."""
        (a, b), (c, d) = self.direction, other.direction
        dd = det(self.direction, other.direction)
        if dd == 0:
            raise ValueError("parallel lines do not meet in a point")
        # a*y - b*x = l1 ; c*y - d*x = l2
        l1, l2 = self.level, other.level
        x = Fraction(c * l1 - a * l2) / dd
        y = Fraction(d * l1 - b * l2) / dd
        return x, y
