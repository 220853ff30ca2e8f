"""Wire formats: JSON objects, CSV rows, OBJ meshes and TSV plot streams.

Integers and exact rationals are serialized as decimal / ``num/den`` strings;
floats appear only as explicitly labelled mirrors.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

from .core import HexaSolution, size_of
from .geometry import EmbeddedHexahedron, Mesh, as_decimal, round_sig, sqrt_decimal, surface_area
from .parameterize import RectParams, TrapParams

SOLUTION_COLUMNS = ("a", "b", "c", "d", "e", "f", "size")
PARAM_COLUMNS = ("r", "s", "lambda", "p", "q", "mu")


def load_schema() -> dict:
    text = resources.files("hexaforge").joinpath("schema/solution.schema.json").read_text()
    return json.loads(text)


def rational_str(value) -> str:
    return str(Fraction(value))


def params_to_dict(rp: RectParams, tp: TrapParams) -> list[dict[str, str]]:
    return [
        {"r": str(rp.r), "s": str(rp.s), "lambda": str(rp.lam)},
        {"p": str(tp.p), "q": str(tp.q), "mu": str(tp.mu)},
    ]


def solution_to_dict(sol: HexaSolution, provenance: Sequence[tuple[RectParams, TrapParams]] = ()) -> dict:
    out = {name: str(value) for name, value in zip("abcdef", sol.as_tuple())}
    out["size"] = str(size_of(sol))
    if provenance:
        out["params"] = params_to_dict(*provenance[0])
        if len(provenance) > 1:
            out["provenance"] = [params_to_dict(rp, tp) for rp, tp in provenance]
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(v) for v in row])
    return buf.getvalue()


def solution_row(sol: HexaSolution) -> list[int]:
    return [*sol.as_tuple(), size_of(sol)]


def embedding_to_dict(emb: EmbeddedHexahedron, digits: int) -> dict:
    area = surface_area(emb.solution)
    h = sqrt_decimal(emb.h_sq, digits)
    vertices = []
    for v in emb.vertices:
        vertices.append(
            {
                "x": rational_str(v.x),
                "y": rational_str(v.y),
                "level": v.level,
                "float": [
                    round_sig(as_decimal(v.x, digits), digits),
                    round_sig(as_decimal(v.y, digits), digits),
                    round_sig(h, digits) if v.level else 0.0,
                ],
            }
        )
    return {
        "solution": solution_to_dict(emb.solution),
        "h_sq": rational_str(emb.h_sq),
        "h": round_sig(h, digits),
        "vertices": vertices,
        "faces": [{"kind": face.kind, "vertices": list(face.vertices)} for face in emb.faces],
        "surface_area": {
            "rational_part": rational_str(area.rational_part),
            "coefficient": rational_str(area.coefficient),
            "radicand": rational_str(area.radicand),
            "float": round_sig(area.to_decimal(digits), digits),
        },
    }


def obj_text(mesh: Mesh, digits: int, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    for x, y, z in mesh.vertices:
        lines.append(f"v {x:.{digits}g} {y:.{digits}g} {z:.{digits}g}")
    for face in mesh.faces:
        lines.append("f " + " ".join(str(i + 1) for i in face))
    return "\n".join(lines) + "\n"


def tsv_text(columns: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    lines = ["# " + "\t".join(columns)]
    lines.extend("\t".join(row) for row in rows)
    return "\n".join(lines) + "\n"
