"""Realize a solution as a solid in 3-space with exact metric checks.

The bottom rectangle sits at z = 0 with corners (±a/2, ±b/2); the top one at
z = h with corners (±b/2, ±a/2).  Vertices carry a level flag (0 or 1) instead
of a float z, so every squared distance is an exact rational in which the
vertical part contributes ``level_delta^2 * h_sq``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .core import HexaSolution
from .errors import DegenerateFaceError, NonEmbeddableError
from .radical import RadicalValue

__all__ = [
    "Vertex",
    "Face",
    "EmbeddedHexahedron",
    "MetricCheck",
    "MetricsReport",
    "Mesh",
    "FACES",
    "height_squared",
    "family_height_squared",
    "embed",
    "squared_distance",
    "verify_metrics",
    "surface_area",
    "to_mesh",
]


@dataclass(frozen=True)
class Vertex:
    x: Fraction
    y: Fraction
    level: int


@dataclass(frozen=True)
class Face:
    kind: str  # "rectangle" or "trapezoid"
    vertices: tuple[int, int, int, int]


# Bottom 0..3 counter-clockwise from (-a/2, -b/2); top vertex i + 4 sits over
# the same quadrant as bottom vertex i.  All faces wind counter-clockwise when
# seen from outside.
FACES: tuple[Face, ...] = (
    Face("rectangle", (0, 3, 2, 1)),
    Face("rectangle", (4, 5, 6, 7)),
    Face("trapezoid", (0, 1, 5, 4)),
    Face("trapezoid", (1, 2, 6, 5)),
    Face("trapezoid", (2, 3, 7, 6)),
    Face("trapezoid", (3, 0, 4, 7)),
)


@dataclass(frozen=True)
class EmbeddedHexahedron:
    solution: HexaSolution
    h_sq: Fraction
    vertices: tuple[Vertex, ...]
    faces: tuple[Face, ...] = FACES


def height_squared(sol: HexaSolution) -> Fraction:
    """h^2 = d^2 - (a^2 + b^2)/2, from a^2 + b^2 + 2h^2 = 2d^2."""
    h_sq = Fraction(sol.d**2) - Fraction(sol.a**2 + sol.b**2, 2)
    if h_sq <= 0:
        raise NonEmbeddableError(h_sq)
    return h_sq


def family_height_squared(n: int) -> int:
    """Product formula for h^2 along the explicit infinite family."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    n4 = n**4
    return 2 * (2 * n4 - 1) * (8 * n4 - 1) * (32 * n4 - 1) * (64 * n4 * n4 + 8 * n4 + 1)


def embed(sol: HexaSolution) -> EmbeddedHexahedron:
    h_sq = height_squared(sol)
    ha, hb = Fraction(sol.a, 2), Fraction(sol.b, 2)
    signs = ((-1, -1), (1, -1), (1, 1), (-1, 1))
    bottom = [Vertex(sx * ha, sy * hb, 0) for sx, sy in signs]
    top = [Vertex(sx * hb, sy * ha, 1) for sx, sy in signs]
    return EmbeddedHexahedron(sol, h_sq, tuple(bottom + top))


def squared_distance(emb: EmbeddedHexahedron, i: int, j: int) -> Fraction:
    u, v = emb.vertices[i], emb.vertices[j]
    return (u.x - v.x) ** 2 + (u.y - v.y) ** 2 + (u.level - v.level) ** 2 * emb.h_sq


@dataclass(frozen=True)
class MetricCheck:
    name: str
    pairs: tuple[tuple[int, int], ...]
    expected: int
    observed: tuple[Fraction, ...]

    @property
    def ok(self) -> bool:
        return all(v == self.expected for v in self.observed)


@dataclass(frozen=True)
class MetricsReport:
    checks: tuple[MetricCheck, ...]
    planar: tuple[bool, ...]
    failures: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed


def _metric_plan(sol: HexaSolution) -> list[tuple[str, tuple[tuple[int, int], ...], int]]:
    a2, b2, c2, d2, e2, f2 = (v * v for v in sol.as_tuple())
    plan = []
    # Bottom edges alternate a, b; the top rectangle is turned a quarter.
    for i in range(4):
        j = (i + 1) % 4
        plan.append((f"bottom edge {i}-{j}", ((i, j),), a2 if i % 2 == 0 else b2))
    for i in range(4):
        j = (i + 1) % 4
        plan.append((f"top edge {i + 4}-{j + 4}", ((i + 4, j + 4),), b2 if i % 2 == 0 else a2))
    for i in range(4):
        plan.append((f"slant edge {i}-{i + 4}", ((i, i + 4),), e2))
    for k, face in enumerate(FACES):
        w, x, y, z = face.vertices
        expected = c2 if face.kind == "rectangle" else d2
        plan.append((f"{face.kind} {k} diagonals", ((w, y), (x, z)), expected))
    for i in range(4):
        plan.append((f"space diagonal {i}-{(i + 2) % 4 + 4}", ((i, (i + 2) % 4 + 4),), f2))
    return plan


def _face_is_planar(emb: EmbeddedHexahedron, face: Face) -> bool:
    v = [emb.vertices[i] for i in face.vertices]
    # The z column is (level difference) * h, so the determinant is h times
    # the determinant with level differences; h != 0.
    rows = [(w.x - v[0].x, w.y - v[0].y, Fraction(w.level - v[0].level)) for w in v[1:]]
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = rows
    det = a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1)
    return det == 0


def verify_metrics(emb: EmbeddedHexahedron) -> MetricsReport:
    """Recompute all 22 squared lengths exactly and check face planarity."""
    checks = []
    failures = []
    for name, pairs, expected in _metric_plan(emb.solution):
        check = MetricCheck(name, pairs, expected, tuple(squared_distance(emb, i, j) for i, j in pairs))
        checks.append(check)
        if not check.ok:
            got = ", ".join(str(o) for o in check.observed)
            failures.append(f"{name}: expected {expected}, got {got}")
    planar = tuple(_face_is_planar(emb, face) for face in emb.faces)
    for k, ok in enumerate(planar):
        if not ok:
            failures.append(f"face {k} ({emb.faces[k].kind}) is not planar")
    return MetricsReport(tuple(checks), planar, tuple(failures))


def surface_area(sol: HexaSolution) -> RadicalValue:
    """2ab + (a + b) sqrt(4d^2 - (a + b)^2), exactly.

    Each trapezoid has parallel sides a, b and height sqrt(d^2 - ((a + b)/2)^2).
    """
    a, b, d = sol.a, sol.b, sol.d
    radicand = 4 * d * d - (a + b) ** 2
    if radicand <= 0:
        raise DegenerateFaceError(f"trapezoid height^2 is {Fraction(radicand, 4)} <= 0")
    return RadicalValue.build(2 * a * b, a + b, radicand)


@dataclass(frozen=True)
class Mesh:
    vertices: tuple[tuple[float, float, float], ...]
    faces: tuple[tuple[int, int, int, int], ...]
    h: float


def as_decimal(value: Fraction, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        return Decimal(value.numerator) / Decimal(value.denominator)


def sqrt_decimal(value: Fraction, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        return as_decimal(value, digits).sqrt()


def round_sig(value: Decimal, digits: int) -> float:
    return float(f"{value:.{digits}g}")


def to_mesh(emb: EmbeddedHexahedron, digits: int = 12) -> Mesh:
    """Float mesh rounded to ``digits`` significant digits (0-based face indices)."""
    if digits < 1:
        raise ValueError("digits must be positive")
    h = round_sig(sqrt_decimal(emb.h_sq, digits), digits)
    verts = tuple(
        (round_sig(as_decimal(v.x, digits), digits), round_sig(as_decimal(v.y, digits), digits), h if v.level else 0.0)
        for v in emb.vertices
    )
    return Mesh(verts, tuple(face.vertices for face in emb.faces), h)
