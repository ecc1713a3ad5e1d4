from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction as Frac
from typing import FrozenSet, Tuple, Union

from .errors import MalformedInput
from .rational import Vector, dot, format_rational, format_vector


class SetMarker(str, Enum):
    """Distinguished non-polytope results of set operations."""

    EMPTY = "empty"
    WHOLE_SPACE = "whole_space"


EMPTY = SetMarker.EMPTY
WHOLE_SPACE = SetMarker.WHOLE_SPACE


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The closed halfspace { x : <normal, x> <= offset }."""

    normal: Vector
    offset: Frac

    def __post_init__(self) -> None:
        if all(c == 0 for c in self.normal):
            raise MalformedInput("halfspace normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x: Vector) -> Frac:
        return dot(self.normal, x)

    def contains(self, x: Vector) -> bool:
        return self.value(x) <= self.offset

    def is_tight(self, x: Vector) -> bool:
        return self.value(x) == self.offset

    def to_dict(self) -> dict:
        return {"normal": format_vector(self.normal), "offset": format_rational(self.offset)}


@dataclass(frozen=True)
class Polytope:
    """Bounded non-empty convex polytope in canonical dual representation.

    Instances come out of ``dd_convert`` (or an affine image of a canonical
    polytope), so equal point sets have equal fields.
    """

    hrep: Tuple[HalfSpace, ...]
    vrep: Tuple[Vector, ...]
    dim_ambient: int
    dim_affine: int

    @property
    def vertices(self) -> Tuple[Vector, ...]:
        return self.vrep

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim_affine == self.dim_ambient

    def contains(self, x: Vector) -> bool:
        return all(h.contains(x) for h in self.hrep)

    def is_interior(self, x: Vector) -> bool:
        """Strict satisfaction of every halfspace (never true for flat polytopes)."""
        return all(h.value(x) < h.offset for h in self.hrep)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim_ambient,
            "dim_affine": self.dim_affine,
            "vrep": [format_vector(v) for v in self.vrep],
            "hrep": [h.to_dict() for h in self.hrep],
        }


PolytopeOrEmpty = Union[Polytope, SetMarker]
PolytopeOrWhole = Union[Polytope, SetMarker]


@dataclass(frozen=True)
class Face:
    """A non-empty face: indices of active halfspaces of the parent, the face, a relint point."""

    active: FrozenSet[int]
    polytope: Polytope
    sample: Vector = field(compare=False)

    @property
    def dim(self) -> int:
        return self.polytope.dim_affine
