"""Exact construction, enumeration and embedding of perfect hexahedra."""

from .core import (
    HexaSolution,
    VerificationReport,
    canonicalize,
    divisibility_report,
    is_size_divisible_by_60,
    primitive_reduce,
    similar,
    size_of,
    verify_solution,
)
from .enumeration import enumerate_solutions, rect_representations, smallest, trap_representations
from .errors import (
    CompatibilityError,
    DegenerateFaceError,
    DegeneratePointError,
    DomainError,
    HexaforgeError,
    InvalidSolutionError,
    NonEmbeddableError,
    PointAtInfinityError,
)
from .geometry import embed, family_height_squared, height_squared, surface_area, to_mesh, verify_metrics
from .parameterize import RectParams, TrapParams, assemble_solution, rect_sides, trap_sides
from .surface import (
    PlaneSlice,
    SlicePoint,
    SurfacePoint,
    chord_intersect,
    closed_form_family,
    curve_family,
    quartic_form,
    trivial_points,
)

__version__ = "0.1.0"
