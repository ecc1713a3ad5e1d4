"""Exact polytope kernel: rationals, dual representations, LP and predicates."""

from .errors import GeometryError
from .lp import LPResult, lp_solve
from .polytope import (
    contains,
    dd_convert,
    dilate,
    face_lattice,
    intersect,
    is_subset,
    polygon_area,
    polytope_equal,
    ray_max,
    translate,
    vertex_min,
)
from .rational import Vector, format_rational, format_vector, parse_point, to_rational, vec
from .types import EMPTY, WHOLE_SPACE, Face, HalfSpace, Polytope, SetMarker

__all__ = [
    # Types
    "EMPTY",
    "WHOLE_SPACE",
    "Face",
    "GeometryError",
    "HalfSpace",
    "LPResult",
    "Polytope",
    "SetMarker",
    "Vector",
    # Operations
    "contains",
    "dd_convert",
    "dilate",
    "face_lattice",
    "format_rational",
    "format_vector",
    "intersect",
    "is_subset",
    "lp_solve",
    "parse_point",
    "polygon_area",
    "polytope_equal",
    "ray_max",
    "to_rational",
    "translate",
    "vec",
    "vertex_min",
]
