"""The quartic surface F(p, q, r, s) = 2(p^2 - q^2)pq - (r^2 - s^2)rs.

Integer points give perfect hexahedra with trapezoid generator ``(p, q)`` and
rectangle generator ``(r, s)`` at unit scales.  New rational points come from
secant lines through known points of a slice where ``q = q0`` and ``s = s0``
are held fixed; the line meets the slice cubic in three points and the two
known roots are divided out exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Union

from . import polynomial as P
from .core import HexaSolution, canonicalize
from .errors import DegeneratePointError, DomainError, PointAtInfinityError
from .parameterize import RectParams, TrapParams

Rational = Union[int, Fraction]

__all__ = [
    "SurfacePoint",
    "PlaneSlice",
    "SlicePoint",
    "AffinePoint3",
    "CURVE_FAMILIES",
    "FAMILY_CHORDS",
    "quartic_form",
    "trivial_points",
    "chord_intersect",
    "chord_polynomial",
    "curve_family",
    "family_raw",
    "closed_form_family",
    "family_parameters",
    "dehomogenize_curve2",
    "projection_residual",
    "affine_surface_value",
]


def quartic_form(p: Rational, q: Rational, r: Rational, s: Rational) -> Fraction:
    """2(p^2 - q^2)pq - (r^2 - s^2)rs, exactly."""
    p, q, r, s = (Fraction(v) for v in (p, q, r, s))
    return 2 * (p * p - q * q) * p * q - (r * r - s * s) * r * s


@dataclass(frozen=True)
class SurfacePoint:
    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction

    def __post_init__(self) -> None:
        for name in "pqrs":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        value = quartic_form(self.p, self.q, self.r, self.s)
        if value != 0:
            raise DomainError(f"{self.as_tuple()} is off the surface (F = {value})")

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.p, self.q, self.r, self.s)

    def integral(self) -> tuple[int, int, int, int]:
        """Clear denominators and common factors: the primitive integer representative."""
        den = 1
        for v in self.as_tuple():
            den = lcm(den, v.denominator)
        ints = [int(v * den) for v in self.as_tuple()]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g == 0:
            raise DegeneratePointError("the zero quadruple has no integral representative")
        return tuple(v // g for v in ints)


@dataclass(frozen=True)
class PlaneSlice:
    q0: Fraction
    s0: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "q0", Fraction(self.q0))
        object.__setattr__(self, "s0", Fraction(self.s0))
        if self.q0 == 0 or self.s0 == 0:
            raise DomainError("slice coordinates q0 and s0 must be non-zero")

    def value(self, pt: SlicePoint) -> Fraction:
        return quartic_form(pt.x, self.q0, pt.y, self.s0)

    def contains(self, pt: SlicePoint) -> bool:
        return self.value(pt) == 0

    def lift(self, pt: SlicePoint) -> SurfacePoint:
        return SurfacePoint(pt.x, self.q0, pt.y, self.s0)


@dataclass(frozen=True)
class SlicePoint:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))


def trivial_points(slc: PlaneSlice) -> list[SlicePoint]:
    """The nine points {-q0, 0, q0} x {-s0, 0, s0}."""
    q0, s0 = slc.q0, slc.s0
    return [SlicePoint(x, y) for x in (-q0, 0, q0) for y in (-s0, 0, s0)]


def chord_polynomial(slc: PlaneSlice, p1: SlicePoint, p2: SlicePoint) -> P.Poly:
    """F restricted to the line p1 + t (p2 - p1), as a polynomial in t."""
    q0, s0 = slc.q0, slc.s0
    x = P.trim([p1.x, p2.x - p1.x])
    y = P.trim([p1.y, p2.y - p1.y])
    left = P.scale(P.sub(P.power(x, 3), P.scale(x, q0 * q0)), 2 * q0)
    right = P.scale(P.sub(P.power(y, 3), P.scale(y, s0 * s0)), s0)
    return P.sub(left, right)


def chord_intersect(slc: PlaneSlice, p1: SlicePoint, p2: SlicePoint) -> SlicePoint:
    """Third intersection of the line through two slice points with the surface.

    Raises :class:`PointAtInfinityError` when the line yields no new finite
    point: either the restricted cubic drops degree, or the line already runs
    through three of the nine trivial points (its remaining intersection in
    projective space is then at infinity).

    >>> chord_intersect(PlaneSlice(1, 1), SlicePoint(-1, 0), SlicePoint(1, 1))
    SlicePoint(x=Fraction(1, 5), y=Fraction(3, 5))
    """
    if p1 == p2:
        raise DomainError("chord endpoints must be distinct")
    for label, pt in (("p1", p1), ("p2", p2)):
        if not slc.contains(pt):
            raise DomainError(f"{label} = ({pt.x}, {pt.y}) is off the surface (F = {slc.value(pt)})")
    cubic = chord_polynomial(slc, p1, p2)
    if not cubic:
        raise DomainError("the line lies entirely on the surface")
    # t = 0 and t = 1 are the known roots.
    quotient, remainder = P.divmod_poly(cubic, (0, -1, 1))
    assert not remainder, remainder
    if P.degree(quotient) < 1:
        raise PointAtInfinityError("the line meets the surface again only at infinity")
    c0, c1 = quotient
    t = -c0 / c1
    pt = SlicePoint(p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y))
    known = trivial_points(slc)
    if p1 in known and p2 in known and pt in known and pt not in (p1, p2):
        raise PointAtInfinityError(
            "the line passes through three trivial points and meets the surface again only at infinity"
        )
    assert slc.contains(pt)
    return pt


# Each coordinate is a list of (coefficient, exponent of q, exponent of s);
# every monomial has total degree 5.
CURVE_FAMILIES: dict[int, tuple[list[tuple[int, int, int]], ...]] = {
    1: (
        [(3, 1, 4)],
        [(16, 5, 0), (-1, 1, 4)],
        [(1, 0, 5), (8, 4, 1)],
        [(16, 4, 1), (-1, 0, 5)],
    ),
    2: (
        [(-3, 1, 4)],
        [(16, 5, 0), (1, 1, 4)],
        [(1, 0, 5), (-8, 4, 1)],
        [(16, 4, 1), (1, 0, 5)],
    ),
    3: (
        [(-1, 5, 0), (-2, 1, 4)],
        [(1, 5, 0), (-4, 1, 4)],
        [(-3, 4, 1)],
        [(1, 4, 1), (-4, 0, 5)],
    ),
    4: (
        [(1, 5, 0), (-2, 1, 4)],
        [(1, 5, 0), (4, 1, 4)],
        [(-3, 4, 1)],
        [(1, 4, 1), (4, 0, 5)],
    ),
    5: (
        [(2, 1, 4), (-2, 5, 0)],
        [(2, 5, 0), (1, 1, 4)],
        [(-1, 0, 5), (4, 4, 1)],
        [(2, 4, 1), (1, 0, 5)],
    ),
    6: (
        [(2, 1, 4), (2, 5, 0)],
        [(2, 5, 0), (-1, 1, 4)],
        [(1, 0, 5), (4, 4, 1)],
        [(2, 4, 1), (-1, 0, 5)],
    ),
}

# Pair of trivial points, as multiples of (q0, s0), whose chord traces each family.
FAMILY_CHORDS: dict[int, tuple[tuple[int, int], tuple[int, int]]] = {
    1: ((-1, 0), (1, 1)),
    2: ((-1, 0), (1, -1)),
    3: ((0, -1), (1, 1)),
    4: ((-1, 1), (0, -1)),
    5: ((0, 1), (1, 0)),
    6: ((-1, 0), (0, 1)),
}


def curve_family(family_id: int, q: Rational, s: Rational) -> SurfacePoint:
    """Evaluate the quintic quadruple ``family_id`` (1..6) at ``(q, s)``.

    >>> curve_family(1, 1, 1).as_tuple()
    (Fraction(3, 1), Fraction(15, 1), Fraction(9, 1), Fraction(15, 1))
    """
    if family_id not in CURVE_FAMILIES:
        raise DomainError(f"curve family id must be in 1..6, got {family_id}")
    q, s = Fraction(q), Fraction(s)
    if q == 0 or s == 0:
        raise DegeneratePointError("curve families collapse when q = 0 or s = 0")
    coords = (
        sum((Fraction(c) * q**i * s**j for c, i, j in terms), Fraction(0))
        for terms in CURVE_FAMILIES[family_id]
    )
    return SurfacePoint(*coords)


def family_raw(n: int) -> tuple[int, int, int, int, int, int]:
    """Uncanonicalized ``(a, b, c, d, e, f)`` of the explicit infinite family."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"family index must be a positive integer, got {n!r}")
    n4 = n**4
    n8 = n4 * n4
    a = 48 * n4 * (4 * n4 + 1)
    b = 2 * (8 * n4 - 1) * (16 * n4 + 1)
    c = 2 + 16 * n4 + 320 * n8
    e = 2 * n * n * (128 * n8 - 32 * n4 - 7)
    f = 2 * n * n * (128 * n8 + 64 * n4 - 1)
    d = 2 * n * n * (128 * n8 + 16 * n4 + 5)
    return a, b, c, d, e, f


def closed_form_family(n: int) -> HexaSolution:
    return canonicalize(*family_raw(n))


def family_parameters(n: int):
    """Rectangle and trapezoid generators of family member ``n``, read off curve 2 at (n, 1)."""
    p, q, r, s = (int(v) for v in curve_family(2, n, 1).as_tuple())
    return RectParams(r, s), TrapParams(p, q)


@dataclass(frozen=True)
class AffinePoint3:
    x: Fraction
    y: Fraction
    z: Fraction


def dehomogenize_curve2(t: Rational) -> AffinePoint3:
    """Curve 2 divided by its last coordinate, with ``t = q/s``."""
    t = Fraction(t)
    den = 16 * t**4 + 1
    return AffinePoint3(-3 * t / den, t, (1 - 8 * t**4) / den)


def projection_residual(t: Rational) -> Fraction:
    """8x^4 + 8z^4 + 4z^3 - 6z^2 - 5z - 1 on the projected curve; identically zero."""
    pt = dehomogenize_curve2(t)
    x, z = pt.x, pt.z
    return 8 * x**4 + 8 * z**4 + 4 * z**3 - 6 * z**2 - 5 * z - 1


def affine_surface_value(x: Rational, y: Rational, z: Rational) -> Fraction:
    """The surface with ``s = 1``: 2(x^2 - y^2)xy - (z^2 - 1)z."""
    return quartic_form(x, y, z, 1)
