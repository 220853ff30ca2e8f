"""Minimal exact univariate polynomials over the rationals.

Polynomials are tuples of coefficients in ascending degree order, trimmed so
the last entry is non-zero (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Sequence

Poly = tuple

__all__ = ["trim", "add", "sub", "mul", "scale", "power", "divmod_poly", "evaluate", "degree"]


def trim(coeffs: Sequence) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(trim(p)) - 1


def add(p: Poly, q: Poly) -> Poly:
    return trim([x + y for x, y in zip_longest(p, q, fillvalue=0)])


def sub(p: Poly, q: Poly) -> Poly:
    return trim([x - y for x, y in zip_longest(p, q, fillvalue=0)])


def scale(p: Poly, k) -> Poly:
    return trim([k * x for x in p])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return trim(out)


def power(p: Poly, n: int) -> Poly:
    out: Poly = (Fraction(1),)
    for _ in range(n):
        out = mul(out, p)
    return out


def divmod_poly(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Exact long division, returning ``(quotient, remainder)``."""
    num, den = trim(num), trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num)
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for shift in range(len(quot) - 1, -1, -1):
        coef = rem[shift + len(den) - 1] / lead
        quot[shift] = coef
        if coef:
            for j, d in enumerate(den):
                rem[shift + j] -= coef * d
    return trim(quot), trim(rem[: len(den) - 1])


def evaluate(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc
