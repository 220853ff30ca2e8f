import pytest

from hexaforge.core import is_size_divisible_by_60, size_of, verify_solution
from hexaforge.enumeration import (
    enumerate_solutions,
    rect_representations,
    smallest,
    solutions_of_size,
    trap_representations,
)
from hexaforge.parameterize import RectParams, TrapParams

from oracles import brute_force_solutions

SMALLEST = (8, 15, 17, 13, 7, 17)
SECOND = (10, 24, 26, 17, 7, 23)


def brute_representations(target, quadratic_factor=1):
    """Direct scan of u > v >= 1, k >= 1 with uv(u^2 - v^2)k^2 = target."""
    out = []
    for u in range(2, target + 2):
        for v in range(1, u):
            base = u * v * (u * u - v * v)
            k = 1
            while base * k * k <= target:
                if base * k * k == target:
                    out.append((u, v, k))
                k += 1
    return out


def test_rect_representations():
    assert rect_representations(60) == [RectParams(4, 1, 1)]
    assert rect_representations(120) == [RectParams(3, 2, 2), RectParams(5, 1, 1)]
    assert rect_representations(7) == []


def test_trap_representations():
    assert trap_representations(60) == [TrapParams(3, 2, 1)]
    assert trap_representations(120) == [TrapParams(4, 1, 1)]
    assert trap_representations(59) == []


@pytest.mark.parametrize("size", [6, 24, 60, 120, 210, 240, 336, 480, 720, 1320])
def test_representations_complete(size):
    got = {(rp.r, rp.s, rp.lam) for rp in rect_representations(size)}
    assert got == set(brute_representations(size))
    got = {(tp.p, tp.q, tp.mu) for tp in trap_representations(size)}
    assert got == set(brute_representations(size // 2))


def test_enumerate_small():
    assert [x.solution.as_tuple() for x in enumerate_solutions(60)] == [SMALLEST]
    assert [x.solution.as_tuple() for x in enumerate_solutions(119)] == [SMALLEST]
    found = enumerate_solutions(120)
    assert [x.solution.as_tuple() for x in found] == [SMALLEST, SECOND]
    assert [x.size for x in found] == [60, 120]


def test_enumerate_merges_provenance():
    (item,) = solutions_of_size(120)
    assert set(item.provenance) == {
        (RectParams(5, 1, 1), TrapParams(4, 1, 1)),
        (RectParams(3, 2, 2), TrapParams(4, 1, 1)),
    }


def test_enumerate_invariants():
    found = enumerate_solutions(3000)
    keys = [(x.size, x.solution.as_tuple()) for x in found]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    for item in found:
        assert verify_solution(*item.solution.as_tuple()).valid
        assert is_size_divisible_by_60(item.solution)
        assert size_of(item.solution) == item.size


def test_prefix_monotone():
    small = enumerate_solutions(600)
    large = enumerate_solutions(1800)
    assert large[: len(small)] == small


def test_matches_brute_force_oracle():
    assert {x.solution.as_tuple() for x in enumerate_solutions(600)} == brute_force_solutions(600)


def test_workers_deterministic():
    assert enumerate_solutions(1200, workers=3) == enumerate_solutions(1200)


def test_smallest():
    assert [x.solution.as_tuple() for x in smallest(1)] == [SMALLEST]
    assert [x.solution.as_tuple() for x in smallest(2)] == [SMALLEST, SECOND]
    assert smallest(2) == smallest(2)
    assert smallest(10) == enumerate_solutions(smallest(10)[-1].size)[:10]
