"""Exit criteria, one test per criterion, each run at its stated tolerance and time budget."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from click.testing import CliRunner

from hexaforge.cli import main
from hexaforge.core import HexaSolution, divisibility_report, verify_solution
from hexaforge.enumeration import enumerate_solutions
from hexaforge.geometry import embed, family_height_squared, height_squared, surface_area, verify_metrics
from hexaforge.parameterize import PythTriple, lift_to_twosquare, project_to_pyth, pyth_from_params
from hexaforge.surface import (
    PlaneSlice,
    SlicePoint,
    chord_intersect,
    closed_form_family,
    curve_family,
    dehomogenize_curve2,
    projection_residual,
    quartic_form,
)

from oracles import brute_force_solutions, random_fraction


def cli_rows(*args):
    res = CliRunner().invoke(main, [str(a) for a in args])
    assert res.exit_code == 0, res.output
    lines = res.output.splitlines()
    assert lines[0] == "a,b,c,d,e,f,size"
    return [tuple(int(v) for v in line.split(",")[:6]) for line in lines[1:]]


def test_ac01_smallest_solution(criterion):
    with criterion("AC1 smallest solution", 1.0) as c:
        rows = cli_rows("enumerate", "--max-size", 60, "--format", "csv")
        assert rows == [(8, 15, 17, 13, 7, 17)]
        c.note(f"rows={rows}")


def test_ac02_second_smallest(criterion):
    with criterion("AC2 second smallest", 1.0) as c:
        rows = cli_rows("enumerate", "--max-size", 120, "--format", "csv")
        assert rows == [(8, 15, 17, 13, 7, 17), (10, 24, 26, 17, 7, 23)]
        printed = verify_solution(24, 10, 26, 16, 7, 23)
        assert [str(f) for f in printed.failures][0] == "d^2 = e^2 + ab: 256 != 289"
        c.note("second solution (10,24,26,17,7,23) has d = 17; d = 16 fails d^2 = e^2 + ab (256 != 289)")


def test_ac03_divisibility(criterion):
    with criterion("AC3 size divisible by 60", 10.0) as c:
        rows = cli_rows("enumerate", "--max-size", 6000)
        assert rows
        for row in rows:
            sol = HexaSolution(*row)
            rep = divisibility_report(sol)
            ab = sol.a * sol.b
            assert rep.size % 60 == 0 and rep.size_div_60
            assert ab % 3 == 0 and ab % 4 == 0 and ab % 5 == 0
            assert rep.ab_div_3 and rep.ab_div_4 and rep.ab_div_5
        c.note(f"{len(rows)} solutions up to size 6000")


def test_ac04_oracle_equivalence(criterion):
    with criterion("AC4 brute-force oracle equivalence", 60.0) as c:
        for bound in (60, 120, 300, 600):
            param = {item.solution.as_tuple() for item in enumerate_solutions(bound)}
            assert param == brute_force_solutions(bound)
        c.note(f"{len(param)} solutions up to size 600 on both routes")


def test_ac05_curve_identities(criterion):
    with criterion("AC5 curve family identities", 5.0) as c:
        count = 0
        for family_id in range(1, 7):
            for q in range(1, 13):
                for s in range(1, 13):
                    assert quartic_form(*curve_family(family_id, q, s).as_tuple()) == 0
                    count += 1
        c.note(f"{count} exact evaluations")


def test_ac06_closed_form_family(criterion):
    with criterion("AC6 closed-form family", 5.0) as c:
        for n in range(1, 11):
            assert verify_solution(*closed_form_family(n).as_tuple()).valid
        assert closed_form_family(1).as_tuple() == (238, 240, 338, 298, 178, 382)
        members = [closed_form_family(n) for n in range(1, 26)]
        ab = {Fraction(s.a, s.b) for s in members}
        ef = {Fraction(s.e, s.f) for s in members}
        assert len(ab) == len(ef) == 25
        c.note("25 distinct a/b and e/f ratios")


def test_ac07_height_consistency(criterion):
    with criterion("AC7 height consistency", 1.0) as c:
        for n in range(1, 11):
            assert family_height_squared(n) == height_squared(closed_form_family(n))
        assert family_height_squared(1) == 31682 == 2 * 1 * 7 * 31 * 73
        c.note("n = 1..10 exact")


def test_ac08_chord_closed_form(criterion):
    rng = random.Random(20240601)
    with criterion("AC8 chord closed form", 1.0) as c:
        done = 0
        while done < 20:
            q0, s0 = random_fraction(rng), random_fraction(rng)
            if q0 == 0 or s0 == 0 or 16 * q0**4 == s0**4:
                continue
            pt = chord_intersect(PlaneSlice(q0, s0), SlicePoint(-q0, 0), SlicePoint(q0, s0))
            den = 16 * q0**4 - s0**4
            assert (pt.x, pt.y) == (3 * q0 * s0**4 / den, s0 * (s0**4 + 8 * q0**4) / den)
            done += 1
        c.note("20 random rational slices")


def test_ac09_projection_identity(criterion):
    rng = random.Random(99)
    with criterion("AC9 projection identity", 1.0) as c:
        for _ in range(50):
            assert projection_residual(random_fraction(rng, 1000)) == 0
        pt = dehomogenize_curve2(10)
        assert abs(float(pt.x)) < 1e-3 and abs(float(pt.z) + 0.5) < 1e-3
        c.note(f"t=10: x={float(pt.x):.3e}, z+1/2={float(pt.z) + 0.5:.3e}")


def test_ac10_embedding_metrics(criterion):
    with criterion("AC10 embedding metrics", 1.0) as c:
        sols = [HexaSolution(8, 15, 17, 13, 7, 17)] + [closed_form_family(n) for n in range(1, 6)]
        for sol in sols:
            report = verify_metrics(embed(sol))
            assert report.passed, report.failures
            assert len(report.checks) == 22 and all(check.ok for check in report.checks)
            assert all(report.planar[2:])
        c.note(f"{len(sols)} solids, 22 lengths + planarity each")


def test_ac11_area_growth(criterion):
    with criterion("AC11 area growth exponent", 1.0) as c:
        ratio = float(surface_area(closed_form_family(8))) / float(surface_area(closed_form_family(4)))
        exponent = math.log2(ratio)
        assert 17.8 <= exponent <= 18.2
        c.note(f"log2 ratio = {exponent:.4f}")


def test_ac12_bijection_round_trip(criterion):
    rng = random.Random(12)
    with criterion("AC12 Gaussian bijection round trip", 1.0) as c:
        done = 0
        while done < 100:
            m, n = rng.randint(-200, 200), rng.randint(-200, 200)
            if m == 0 or n == 0 or abs(m) == abs(n):
                continue
            t = pyth_from_params(m, n, rng.randint(1, 30))
            if rng.random() < 0.5:
                t = PythTriple(t.y, t.x, t.z)
            back = project_to_pyth(lift_to_twosquare(t))
            assert back.z == t.z
            assert sorted(map(abs, (back.x, back.y))) == sorted(map(abs, (t.x, t.y)))
            done += 1
        c.note("100 random triples")
