"""Parameterizations of the two norm equations and solution assembly.

The rectangle satisfies ``a^2 + b^2 = c^2`` and is generated by ``(r, s, lam)``;
the trapezoid satisfies ``e^2 + f^2 = 2 d^2`` and is generated by ``(p, q, mu)``
through multiplication of a Pythagorean Gaussian integer by ``1 + i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HexaSolution, canonicalize
from .errors import CompatibilityError, DomainError

__all__ = [
    "PythTriple",
    "TwoSquareTriple",
    "RectParams",
    "TrapParams",
    "pyth_from_params",
    "rect_sides",
    "trap_sides",
    "lift_to_twosquare",
    "project_to_pyth",
    "compatibility_sides",
    "assemble_solution",
]


@dataclass(frozen=True)
class PythTriple:
    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if self.z <= 0 or self.x * self.x + self.y * self.y != self.z * self.z:
            raise DomainError(f"({self.x}, {self.y}, {self.z}) is not a Pythagorean triple")


@dataclass(frozen=True)
class TwoSquareTriple:
    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if self.z <= 0 or self.x * self.x + self.y * self.y != 2 * self.z * self.z:
            raise DomainError(f"({self.x}, {self.y}, {self.z}) does not satisfy x^2 + y^2 = 2z^2")


def _check_pair(u: int, v: int, scale: int, names: str) -> None:
    if scale < 1:
        raise DomainError(f"scale must be a positive integer, got {scale}")
    if u == 0 or v == 0:
        raise DomainError(f"{names} must both be non-zero, got ({u}, {v})")
    if u == v or u == -v:
        raise DomainError(f"{names} must satisfy {names[0]} != ±{names[-1]}, got ({u}, {v})")


@dataclass(frozen=True)
class RectParams:
    r: int
    s: int
    lam: int = 1

    def __post_init__(self) -> None:
        _check_pair(self.r, self.s, self.lam, "r,s")

    @property
    def size(self) -> int:
        """|rs(r^2 - s^2)| lam^2, equal to ab/2 of the rectangle."""
        r, s = self.r, self.s
        return abs(r * s * (r * r - s * s)) * self.lam**2


@dataclass(frozen=True)
class TrapParams:
    p: int
    q: int
    mu: int = 1

    def __post_init__(self) -> None:
        _check_pair(self.p, self.q, self.mu, "p,q")

    @property
    def size(self) -> int:
        """|2pq(p^2 - q^2)| mu^2, equal to (f^2 - e^2)/4."""
        p, q = self.p, self.q
        return abs(2 * p * q * (p * p - q * q)) * self.mu**2


def pyth_from_params(m: int, n: int, scale: int = 1) -> PythTriple:
    """(m^2 - n^2, 2mn, m^2 + n^2) times ``scale``."""
    if scale < 1:
        raise DomainError(f"scale must be a positive integer, got {scale}")
    if m == n or m == -n:
        raise DomainError(f"m = ±n gives a zero leg: ({m}, {n})")
    return PythTriple(scale * (m * m - n * n), scale * 2 * m * n, scale * (m * m + n * n))


def rect_sides(params: RectParams) -> tuple[int, int, int]:
    """Rectangle ``(a, b, c)``; legs are returned in generator order, not sorted."""
    r, s, lam = params.r, params.s, params.lam
    return abs(lam * (r * r - s * s)), abs(2 * r * s * lam), lam * (r * r + s * s)


def trap_sides(params: TrapParams) -> tuple[int, int, int]:
    """Trapezoid ``(e, f, d)`` with ``e < f``.

    Neither leg can vanish: p/q would have to be ±1 ± sqrt(2).
    """
    p, q, mu = params.p, params.q, params.mu
    e = abs(mu * (p * p - q * q - 2 * p * q))
    f = abs(mu * (p * p - q * q + 2 * p * q))
    d = mu * (p * p + q * q)
    if e > f:
        e, f = f, e
    return e, f, d


def lift_to_twosquare(t: PythTriple) -> TwoSquareTriple:
    """Multiply ``x + iy`` by ``1 + i``."""
    return TwoSquareTriple(t.x - t.y, t.x + t.y, t.z)


def project_to_pyth(t: TwoSquareTriple) -> PythTriple:
    """Multiply ``x + iy`` by ``(1 - i)/2``; inverse of :func:`lift_to_twosquare`."""
    # x and y share parity because x^2 + y^2 is even.
    return PythTriple((t.x + t.y) // 2, (t.y - t.x) // 2, t.z)


def compatibility_sides(rp: RectParams, tp: TrapParams) -> tuple[int, int]:
    """Both sides of 2(p^2 - q^2)pq mu^2 = (r^2 - s^2)rs lam^2, in absolute value."""
    return tp.size, rp.size


def assemble_solution(rp: RectParams, tp: TrapParams) -> HexaSolution:
    """Build the canonical solution generated by a compatible parameter pair.

    >>> assemble_solution(RectParams(4, 1), TrapParams(3, 2)).as_tuple()
    (8, 15, 17, 13, 7, 17)
    """
    trap, rect = compatibility_sides(rp, tp)
    if trap != rect:
        raise CompatibilityError(trap, rect)
    a, b, c = rect_sides(rp)
    e, f, d = trap_sides(tp)
    return canonicalize(a, b, c, d, e, f)
