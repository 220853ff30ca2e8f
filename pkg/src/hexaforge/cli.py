"""
Command-line interface for hexaforge.

Usage:
    hexaforge enumerate --max-size 600 --format csv
    hexaforge verify 8 15 17 13 7 17
    hexaforge family --from 1 --to 3 --format json
    hexaforge chord --slice 1 1 --p1 -1 0 --p2 1 1
    hexaforge embed 8 15 17 13 7 17 --format obj
    hexaforge plot projection --t -2..2 --step 1/10

Exit status: 0 success, 1 domain failure, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from .core import canonicalize, size_of, verify_solution
from .enumeration import enumerate_solutions
from .errors import DomainError, InvalidSolutionError, NonEmbeddableError, PointAtInfinityError
from .geometry import embed as embed_solution
from .geometry import as_decimal, height_squared, round_sig, sqrt_decimal, to_mesh, verify_metrics
from .parameterize import RectParams, TrapParams, assemble_solution
from .serialize import (
    PARAM_COLUMNS,
    SOLUTION_COLUMNS,
    csv_text,
    dumps,
    embedding_to_dict,
    obj_text,
    params_to_dict,
    rational_str,
    solution_row,
    solution_to_dict,
    tsv_text,
)
from .surface import (
    PlaneSlice,
    SlicePoint,
    affine_surface_value,
    chord_intersect,
    closed_form_family,
    dehomogenize_curve2,
    family_parameters,
    family_raw,
    projection_residual,
)

__all__ = ["main"]

DEFAULT_DIGITS = 12
DOMAIN_FAILURE = 1


class RationalType(click.ParamType):
    name = "RATIONAL"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number (expected 'num' or 'num/den')", param, ctx)


class RangeType(click.ParamType):
    """``lo..hi`` with rational endpoints, lo <= hi."""

    name = "LO..HI"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        lo, sep, hi = value.partition("..")
        try:
            if not sep:
                raise ValueError
            lo, hi = Fraction(lo), Fraction(hi)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a range of the form lo..hi", param, ctx)
        if lo > hi:
            self.fail(f"empty range {value!r}", param, ctx)
        return lo, hi


RATIONAL = RationalType()
RANGE = RangeType()
POSITIVE = click.IntRange(min=1)

digits_option = click.option(
    "--digits",
    type=POSITIVE,
    default=DEFAULT_DIGITS,
    envvar="HEXAFORGE_DIGITS",
    show_default=True,
    help="Significant digits of float mirrors (env HEXAFORGE_DIGITS).",
)


def fail(message: str) -> None:
    click.echo(message, err=True)
    sys.exit(DOMAIN_FAILURE)


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Construct, enumerate, verify and embed perfect hexahedra."""


@main.command("enumerate")
@click.option("--max-size", type=POSITIVE, required=True, help="Largest size ab/2 to include.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--workers", type=POSITIVE, default=1, show_default=True, help="Processes sharing the size buckets.")
@click.option("--with-params", is_flag=True, help="Append generating parameters r,s,lambda,p,q,mu to CSV rows.")
def enumerate_cmd(max_size: int, fmt: str, workers: int, with_params: bool) -> None:
    """All canonical solutions with size at most MAX_SIZE."""
    found = enumerate_solutions(max_size, workers=workers)
    if fmt == "json":
        counts: dict[str, int] = {}
        for item in found:
            counts[str(item.size)] = counts.get(str(item.size), 0) + 1
        doc = {
            "max_size": str(max_size),
            "counts": counts,
            "solutions": [solution_to_dict(item.solution, item.provenance) for item in found],
        }
        click.echo(dumps(doc), nl=False)
        return
    header = list(SOLUTION_COLUMNS) + (list(PARAM_COLUMNS) if with_params else [])
    rows = []
    for item in found:
        row = solution_row(item.solution)
        if with_params:
            rp, tp = item.provenance[0]
            row += [rp.r, rp.s, rp.lam, tp.p, tp.q, tp.mu]
        rows.append(row)
    click.echo(csv_text(header, rows), nl=False)


@main.command()
@click.argument("values", nargs=6, type=int, metavar="A B C D E F")
@click.option("--json", "as_json", is_flag=True, help="Emit the structured report.")
def verify(values: tuple[int, ...], as_json: bool) -> None:
    """Check a^2 + b^2 = c^2, d^2 = e^2 + ab and f^2 = d^2 + ab."""
    if any(v <= 0 for v in values):
        raise click.BadParameter("all six lengths must be positive", param_hint="A B C D E F")
    report = verify_solution(*values)
    if as_json:
        doc = {
            "values": dict(zip("abcdef", (str(v) for v in values))),
            "valid": report.valid,
            "failures": [
                {"equation": item.equation, "lhs": str(item.lhs), "rhs": str(item.rhs)} for item in report.failures
            ],
        }
        click.echo(dumps(doc), nl=False)
    elif report.valid:
        click.echo("valid")
    else:
        click.echo("invalid")
        for item in report.failures:
            click.echo(f"FAIL {item}")
    if not report.valid:
        sys.exit(DOMAIN_FAILURE)


@main.command()
@click.option("--from", "n_from", type=POSITIVE, required=True)
@click.option("--to", "n_to", type=POSITIVE, default=None, help="Defaults to --from.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@digits_option
def family(n_from: int, n_to: int | None, fmt: str, digits: int) -> None:
    """Members N_FROM..N_TO of the explicit infinite family."""
    n_to = n_from if n_to is None else n_to
    if n_to < n_from:
        raise click.BadParameter(f"--to {n_to} is below --from {n_from}", param_hint="--to")
    records, rows = [], []
    for n in range(n_from, n_to + 1):
        raw = family_raw(n)
        sol = closed_form_family(n)
        h_sq = height_squared(sol)
        rp, tp = family_parameters(n)
        if fmt == "json":
            records.append(
                {
                    "n": str(n),
                    "solution": solution_to_dict(sol, [(rp, tp)]),
                    "raw": dict(zip("abcdef", (str(v) for v in raw))),
                    "h_sq": rational_str(h_sq),
                    "h": round_sig(sqrt_decimal(h_sq, digits), digits),
                }
            )
        else:
            rows.append([*solution_row(sol), n, *raw, rational_str(h_sq)])
    if fmt == "json":
        click.echo(dumps(records), nl=False)
    else:
        header = [*SOLUTION_COLUMNS, "n", *(f"raw_{c}" for c in "abcdef"), "h_sq"]
        click.echo(csv_text(header, rows), nl=False)


@main.command()
@click.option("--slice", "slc", nargs=2, type=RATIONAL, required=True, metavar="Q0 S0")
@click.option("--p1", nargs=2, type=RATIONAL, required=True, metavar="X Y")
@click.option("--p2", nargs=2, type=RATIONAL, required=True, metavar="X Y")
@click.option("--json", "as_json", is_flag=True)
def chord(slc, p1, p2, as_json: bool) -> None:
    """Third intersection of the chord through P1, P2 in the slice (Q0, S0)."""
    try:
        plane = PlaneSlice(*slc)
    except DomainError as exc:
        raise click.BadParameter(str(exc), param_hint="--slice")
    a, b = SlicePoint(*p1), SlicePoint(*p2)
    if a == b:
        raise click.BadParameter("P1 and P2 must be distinct", param_hint="--p2")
    for hint, pt in (("--p1", a), ("--p2", b)):
        if not plane.contains(pt):
            raise click.BadParameter(
                f"({pt.x}, {pt.y}) is off the surface in slice ({plane.q0}, {plane.s0}): F = {plane.value(pt)}",
                param_hint=hint,
            )
    try:
        pt = chord_intersect(plane, a, b)
    except PointAtInfinityError as exc:
        fail(f"meets surface at infinity: {exc}")
    quad = plane.lift(pt).integral()
    sol = provenance = None
    try:
        p, q, r, s = quad
        provenance = (RectParams(r, s), TrapParams(p, q))
        sol = assemble_solution(*provenance)
    except DomainError:
        pass
    if as_json:
        doc = {
            "x": rational_str(pt.x),
            "y": rational_str(pt.y),
            "surface_point": {k: str(v) for k, v in zip("pqrs", quad)},
            "solution": solution_to_dict(sol, [provenance]) if sol else None,
        }
        click.echo(dumps(doc), nl=False)
        return
    click.echo(f"{pt.x} {pt.y}")
    click.echo("point " + " ".join(str(v) for v in quad))
    if sol:
        click.echo("solution " + " ".join(str(v) for v in sol.as_tuple()) + f" size {size_of(sol)}")
    else:
        click.echo("solution none (degenerate parameters)")


@main.command()
@click.argument("values", nargs=6, type=POSITIVE, metavar="A B C D E F")
@click.option("--format", "fmt", type=click.Choice(["obj", "json"]), default="obj", show_default=True)
@digits_option
def embed(values: tuple[int, ...], fmt: str, digits: int) -> None:
    """Place the solid in space; emit an OBJ mesh or exact JSON embedding."""
    try:
        sol = canonicalize(*values)
        emb = embed_solution(sol)
    except InvalidSolutionError as exc:
        fail(str(exc))
    except NonEmbeddableError as exc:
        fail(f"non-embeddable: h^2 = {exc.h_sq}")
    report = verify_metrics(emb)
    assert report.passed, report.failures
    if fmt == "json":
        click.echo(dumps(embedding_to_dict(emb, digits)), nl=False)
        return
    mesh = to_mesh(emb, digits)
    comments = [
        "perfect hexahedron " + " ".join(str(v) for v in sol.as_tuple()),
        f"h^2 = {emb.h_sq}, h = {mesh.h:.{digits}g}",
    ]
    click.echo(obj_text(mesh, digits, comments), nl=False)


def _samples(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    count = int((hi - lo) // step) + 1
    return [lo + k * step for k in range(count)]


@main.command()
@click.argument("target", type=click.Choice(["curve3d", "projection", "surface"]))
@click.option("--t", "t_range", type=RANGE, default="-2..2", show_default=True, help="Parameter range for curves.")
@click.option("--range", "grid_range", type=RANGE, default="-2..2", show_default=True, help="Cube side for surface.")
@click.option("--step", type=RATIONAL, default=None, help="Sample spacing [curves 1/10, surface 1/4].")
@digits_option
def plot(target: str, t_range, grid_range, step: Fraction | None, digits: int) -> None:
    """Emit tab-separated plot data for the space curve, its projection, or the surface."""
    if step is None:
        step = Fraction(1, 4) if target == "surface" else Fraction(1, 10)
    if step <= 0:
        raise click.BadParameter("step must be positive", param_hint="--step")

    def num(v: Fraction) -> str:
        return f"{round_sig(as_decimal(v, digits), digits):.{digits}g}"

    if target == "surface":
        axis = _samples(*grid_range, step)
        rows = (
            [num(x), num(y), num(z), num(affine_surface_value(x, y, z))] for x in axis for y in axis for z in axis
        )
        click.echo(tsv_text(["x", "y", "z", "G"], rows), nl=False)
        return
    ts = _samples(*t_range, step)
    if target == "curve3d":
        rows = []
        for t in ts:
            pt = dehomogenize_curve2(t)
            rows.append([num(t), num(pt.x), num(pt.y), num(pt.z), rational_str(affine_surface_value(pt.x, pt.y, pt.z))])
        click.echo(tsv_text(["t", "x", "y", "z", "residual"], rows), nl=False)
    else:
        rows = []
        for t in ts:
            pt = dehomogenize_curve2(t)
            rows.append([num(pt.x), num(pt.z), rational_str(projection_residual(t))])
        click.echo(tsv_text(["x", "z", "residual"], rows), nl=False)


if __name__ == "__main__":
    main()
