"""Exception hierarchy shared by all hexaforge modules."""

from __future__ import annotations


class HexaforgeError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HexaforgeError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidSolutionError(DomainError):
    """A sextuple does not satisfy the defining equations."""

    def __init__(self, report):
        self.report = report
        failed = "; ".join(str(item) for item in report.failures)
        super().__init__(f"not a perfect hexahedron: {failed}")


class CompatibilityError(DomainError):
    """Rectangle and trapezoid parameters produce different values of ab."""

    def __init__(self, trapezoid_side: int, rectangle_side: int):
        self.trapezoid_side = trapezoid_side
        self.rectangle_side = rectangle_side
        super().__init__(
            "compatibility equation fails: "
            f"|(r^2 - s^2) r s| lambda^2 = {rectangle_side} != "
            f"{trapezoid_side} = |2 (p^2 - q^2) p q| mu^2"
        )


class DegeneratePointError(DomainError):
    """A parameterization collapses to a degenerate point."""


class PointAtInfinityError(DomainError):
    """A chord meets the surface again only at infinity."""


class NonEmbeddableError(DomainError):
    """The symmetric placement needs a non-positive squared height."""

    def __init__(self, h_sq):
        self.h_sq = h_sq
        super().__init__(f"flat or non-embeddable solid: h^2 = {h_sq} <= 0")


class DegenerateFaceError(DomainError):
    """A trapezoidal face has zero or imaginary height."""
