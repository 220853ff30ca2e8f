"""Perfect hexahedron solutions and solution-level predicates.

A solution is a sextuple ``(a, b, c, d, e, f)`` of positive integers with

    a^2 + b^2 = c^2,   d^2 = e^2 + ab,   f^2 = d^2 + ab.

``a, b`` are the rectangle sides, ``c`` the rectangle diagonal, ``e`` the slant
side of a trapezoid, ``d`` its diagonal and ``f`` the space diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError, InvalidSolutionError

__all__ = [
    "EQUATIONS",
    "EquationFailure",
    "VerificationReport",
    "HexaSolution",
    "DivisibilityReport",
    "verify_solution",
    "canonicalize",
    "size_of",
    "divisibility_report",
    "is_size_divisible_by_60",
    "primitive_reduce",
    "similar",
]

EQUATIONS = ("a^2 + b^2 = c^2", "d^2 = e^2 + ab", "f^2 = d^2 + ab")


@dataclass(frozen=True)
class EquationFailure:
    equation: str
    lhs: int
    rhs: int

    def __str__(self) -> str:
        return f"{self.equation}: {self.lhs} != {self.rhs}"


@dataclass(frozen=True)
class VerificationReport:
    values: tuple[int, int, int, int, int, int]
    failures: tuple[EquationFailure, ...]

    @property
    def valid(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.valid


def _check_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value <= 0:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


def verify_solution(a: int, b: int, c: int, d: int, e: int, f: int) -> VerificationReport:
    """Check the three defining equations, collecting every failure.

    >>> verify_solution(8, 15, 17, 13, 7, 17).valid
    True
    >>> [str(x) for x in verify_solution(8, 15, 17, 13, 7, 18).failures]
    ['f^2 = d^2 + ab: 324 != 289']
    """
    values = tuple(_check_int(n, v) for n, v in zip("abcdef", (a, b, c, d, e, f)))
    ab = a * b
    pairs = (
        (a * a + b * b, c * c),
        (d * d, e * e + ab),
        (f * f, d * d + ab),
    )
    failures = tuple(
        EquationFailure(eq, lhs, rhs) for eq, (lhs, rhs) in zip(EQUATIONS, pairs) if lhs != rhs
    )
    return VerificationReport(values, failures)


@dataclass(frozen=True, order=True)
class HexaSolution:
    """A valid, canonical perfect hexahedron (``a < b`` and ``e < f``).

    Construction re-verifies everything; use :func:`canonicalize` to build one
    from an arbitrarily ordered sextuple.
    """

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self) -> None:
        report = verify_solution(*self.as_tuple())
        if not report.valid:
            raise InvalidSolutionError(report)
        if not (self.a < self.b and self.e < self.f):
            raise DomainError(f"solution {self.as_tuple()} is not canonical (need a < b, e < f)")

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def scaled(self, k: int) -> HexaSolution:
        if k < 1:
            raise DomainError("scale factor must be a positive integer")
        return HexaSolution(*(k * v for v in self.as_tuple()))

    @property
    def size(self) -> int:
        return size_of(self)


def canonicalize(a: int, b: int, c: int, d: int, e: int, f: int) -> HexaSolution:
    """Order a < b and e < f, then verify.

    The defining equations are symmetric in a, b but not in e, f, so a sextuple
    with its trapezoid pair reversed is accepted as the same solid.
    """
    if a > b:
        a, b = b, a
    if e > f:
        e, f = f, e
    report = verify_solution(a, b, c, d, e, f)
    if not report.valid:
        raise InvalidSolutionError(report)
    return HexaSolution(a, b, c, d, e, f)


def size_of(sol: HexaSolution) -> int:
    """The size ab/2 of a solution."""
    ab = sol.a * sol.b
    # 4 | ab for any Pythagorean pair, so this is exact.
    assert ab % 2 == 0
    return ab // 2


@dataclass(frozen=True)
class DivisibilityReport:
    size: int
    ab_div_3: bool
    ab_div_4: bool
    ab_div_5: bool
    size_div_4: bool

    @property
    def size_div_60(self) -> bool:
        return self.size % 60 == 0


def divisibility_report(sol: HexaSolution) -> DivisibilityReport:
    ab = sol.a * sol.b
    size = size_of(sol)
    return DivisibilityReport(
        size=size,
        ab_div_3=ab % 3 == 0,
        ab_div_4=ab % 4 == 0,
        ab_div_5=ab % 5 == 0,
        size_div_4=size % 4 == 0,
    )


def is_size_divisible_by_60(sol: HexaSolution) -> bool:
    return divisibility_report(sol).size_div_60


def primitive_reduce(sol: HexaSolution) -> tuple[HexaSolution, int]:
    """Divide out the common factor of all six lengths.

    The equations are homogeneous of degree 2, so the quotient is again a
    solution.
    """
    g = 0
    for v in sol.as_tuple():
        g = gcd(g, v)
    if g == 1:
        return sol, 1
    return HexaSolution(*(v // g for v in sol.as_tuple())), g


def similar(s1: HexaSolution, s2: HexaSolution) -> bool:
    """True when the two solids are scalar multiples of each other."""
    return primitive_reduce(s1)[0] == primitive_reduce(s2)[0]
