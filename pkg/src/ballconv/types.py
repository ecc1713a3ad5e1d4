from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Frac
from typing import NamedTuple, Tuple

from src.geometry.rational import Vector, format_rational, format_vector
from src.geometry.types import EMPTY, WHOLE_SPACE, Polytope, PolytopeOrEmpty, PolytopeOrWhole
from src.norms.body import NormBody


@dataclass(frozen=True)
class CenterSet:
    """All centers x with S ⊆ B(x, 1), i.e. the intersection of the translates s + B."""

    polytope: PolytopeOrEmpty
    generators: Tuple[Vector, ...]
    norm: NormBody = field(repr=False, compare=False)

    @property
    def is_empty(self) -> bool:
        return self.polytope is EMPTY

    def contains(self, x: Vector) -> bool:
        return not self.is_empty and self.polytope.contains(x)


@dataclass(frozen=True)
class BallHull:
    """Intersection of all unit balls containing the generators (the whole space if none)."""

    polytope: PolytopeOrWhole
    generators: Tuple[Vector, ...]
    center_set: CenterSet = field(repr=False)
    norm: NormBody = field(repr=False, compare=False)

    @property
    def is_whole_space(self) -> bool:
        return self.polytope is WHOLE_SPACE

    def contains(self, x: Vector) -> bool:
        return self.is_whole_space or self.polytope.contains(x)

    def to_dict(self) -> dict:
        body = {"whole_space": True} if self.is_whole_space else self.polytope.to_dict()
        return {"norm": self.norm.name, "generators": [format_vector(g) for g in self.generators], "hull": body}


@dataclass(frozen=True)
class CircumResult:
    radius: Frac
    center_set: Polytope
    witness_center: Vector

    def to_dict(self) -> dict:
        return {
            "radius": format_rational(self.radius),
            "witness_center": format_vector(self.witness_center),
            "center_set": self.center_set.to_dict(),
        }


class RestrictionResult(NamedTuple):
    radius: Frac
    pair: Tuple[Vector, Vector]
