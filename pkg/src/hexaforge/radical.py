"""Exact numbers of the form u + v*sqrt(w) over the rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from sympy import factorint

__all__ = ["RadicalValue", "squarefree_split"]


def squarefree_split(n: int) -> tuple[int, int]:
    """Write ``n = k^2 * w`` with ``w`` squarefree; return ``(k, w)``."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 1
    k, w = 1, 1
    for prime, exp in factorint(n).items():
        k *= prime ** (exp // 2)
        if exp % 2:
            w *= prime
    return k, w


@dataclass(frozen=True)
class RadicalValue:
    """``rational_part + coefficient * sqrt(radicand)``, radicand squarefree (or 0/1 when trivial)."""

    rational_part: Fraction
    coefficient: Fraction
    radicand: Fraction

    @classmethod
    def build(cls, rational_part, coefficient, radicand) -> RadicalValue:
        """Normalize so the radicand is a squarefree integer."""
        u, v, w = Fraction(rational_part), Fraction(coefficient), Fraction(radicand)
        if w < 0:
            raise ValueError(f"negative radicand {w}")
        # sqrt(n/d) = sqrt(n d) / d
        k, sq = squarefree_split(w.numerator * w.denominator)
        v = v * k / w.denominator
        if v == 0:
            return cls(u, Fraction(0), Fraction(0))
        if sq == 1:
            return cls(u + v, Fraction(0), Fraction(0))
        return cls(u, v, Fraction(sq))

    def __float__(self) -> float:
        return float(self.rational_part) + float(self.coefficient) * math.sqrt(self.radicand)

    def to_decimal(self, digits: int = 30) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 10
            rad = Decimal(self.radicand.numerator) / Decimal(self.radicand.denominator)
            u = Decimal(self.rational_part.numerator) / Decimal(self.rational_part.denominator)
            v = Decimal(self.coefficient.numerator) / Decimal(self.coefficient.denominator)
            return u + v * rad.sqrt()

    def scaled(self, k) -> RadicalValue:
        k = Fraction(k)
        return RadicalValue.build(k * self.rational_part, k * self.coefficient, self.radicand)

    def __str__(self) -> str:
        if self.coefficient == 0:
            return str(self.rational_part)
        return f"{self.rational_part} + {self.coefficient}*sqrt({self.radicand})"
