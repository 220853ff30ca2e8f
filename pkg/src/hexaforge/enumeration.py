"""Exhaustive, size-ordered enumeration of canonical perfect hexahedra.

Every solution of size ``N = ab/2`` arises from a rectangle generator with
``rs(r^2 - s^2) lam^2 = N`` and a trapezoid generator with
``pq(p^2 - q^2) mu^2 = N/2``.  Sizes are multiples of 60, so only those buckets
are scanned.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt

from .core import HexaSolution, size_of
from .parameterize import RectParams, TrapParams, assemble_solution

__all__ = [
    "RectRepresentation",
    "TrapRepresentation",
    "EnumeratedSolution",
    "rect_representations",
    "trap_representations",
    "solutions_of_size",
    "enumerate_solutions",
    "smallest",
]

SIZE_STEP = 60

RectRepresentation = RectParams
TrapRepresentation = TrapParams


@dataclass(frozen=True)
class EnumeratedSolution:
    solution: HexaSolution
    size: int
    provenance: tuple[tuple[RectParams, TrapParams], ...]


def _representations(target: int) -> list[tuple[int, int, int]]:
    """All (u, v, k) with u > v >= 1, k >= 1 and uv(u^2 - v^2) k^2 = target."""
    out = []
    if target < 1:
        return out
    u = 2
    # uv(u^2 - v^2) >= u^3 - u for every admissible v.
    while u * u * u - u <= target:
        for v in range(1, u):
            base = u * v * (u * u - v * v)
            if base > target:
                continue
            k2, rem = divmod(target, base)
            if rem == 0:
                k = isqrt(k2)
                if k * k == k2:
                    out.append((u, v, k))
        u += 1
    return out


def rect_representations(size: int) -> list[RectParams]:
    """Rectangle generators (r, s, lam), r > s >= 1, of the given size."""
    return [RectParams(r, s, lam) for r, s, lam in _representations(size)]


def trap_representations(size: int) -> list[TrapParams]:
    """Trapezoid generators (p, q, mu), p > q >= 1, of the given size."""
    if size % 2:
        return []
    return [TrapParams(p, q, mu) for p, q, mu in _representations(size // 2)]


def solutions_of_size(size: int) -> list[EnumeratedSolution]:
    found: dict[HexaSolution, list[tuple[RectParams, TrapParams]]] = {}
    traps = trap_representations(size)
    if not traps:
        return []
    for rp in rect_representations(size):
        for tp in traps:
            sol = assemble_solution(rp, tp)
            found.setdefault(sol, []).append((rp, tp))
    out = []
    for sol in sorted(found):
        assert size_of(sol) == size
        out.append(EnumeratedSolution(sol, size, tuple(found[sol])))
    return out


def enumerate_solutions(max_size: int, workers: int = 1) -> list[EnumeratedSolution]:
    """All canonical solutions with size <= ``max_size``, ordered by (size, sextuple).

    ``workers > 1`` shards the size buckets across processes; the merged
    result is identical to the serial one.
    """
    if max_size < 1:
        raise ValueError(f"max_size must be positive, got {max_size}")
    sizes = range(SIZE_STEP, max_size + 1, SIZE_STEP)
    if workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            buckets = list(pool.map(solutions_of_size, sizes, chunksize=max(1, len(sizes) // (4 * workers))))
    else:
        buckets = [solutions_of_size(n) for n in sizes]
    out = [item for bucket in buckets for item in bucket]
    out.sort(key=lambda item: (item.size, item.solution.as_tuple()))
    return out


def smallest(k: int) -> list[EnumeratedSolution]:
    """The first ``k`` solutions in enumeration order."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    out: list[EnumeratedSolution] = []
    size = 0
    while len(out) < k:
        size += SIZE_STEP
        out.extend(solutions_of_size(size))
    return out[:k]
