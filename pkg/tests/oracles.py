"""Independent oracles; none of them use the parameterization code paths."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import mpmath


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def brute_force_solutions(max_size: int) -> set[tuple[int, ...]]:
    """Scan a < b with ab <= 2 max_size, then every factorization d^2 - e^2 = ab."""
    out = set()
    limit = 2 * max_size
    a = 1
    while a * (a + 1) <= limit:
        for b in range(a + 1, limit // a + 1):
            c2 = a * a + b * b
            if not is_square(c2):
                continue
            ab = a * b
            # (d - e)(d + e) = ab with both factors of equal parity, d - e < d + e.
            for u in range(1, isqrt(ab) + 1):
                if ab % u:
                    continue
                v = ab // u
                if u >= v or (u - v) % 2:
                    continue
                d, e = (u + v) // 2, (v - u) // 2
                f2 = d * d + ab
                if is_square(f2):
                    out.add((a, b, isqrt(c2), d, e, isqrt(f2)))
        a += 1
    return out


def polygon_area_oracle(emb, digits: int = 40) -> mpmath.mpf:
    """Sum of face areas from vertex coordinates, with h = sqrt(h_sq) in high precision."""
    with mpmath.workdps(digits):
        h = mpmath.sqrt(mpmath.mpf(emb.h_sq.numerator) / emb.h_sq.denominator)

        def coords(i):
            v = emb.vertices[i]
            return [mpmath.mpf(v.x.numerator) / v.x.denominator, mpmath.mpf(v.y.numerator) / v.y.denominator, h * v.level]

        total = mpmath.mpf(0)
        for face in emb.faces:
            p0, p1, p2, p3 = (coords(i) for i in face.vertices)
            d1 = [p2[k] - p0[k] for k in range(3)]
            d2 = [p3[k] - p1[k] for k in range(3)]
            cross = [
                d1[1] * d2[2] - d1[2] * d2[1],
                d1[2] * d2[0] - d1[0] * d2[2],
                d1[0] * d2[1] - d1[1] * d2[0],
            ]
            total += mpmath.sqrt(sum(x * x for x in cross)) / 2
        return total


def random_fraction(rng, span: int = 50) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.randint(1, span)
    return Fraction(num, den)
