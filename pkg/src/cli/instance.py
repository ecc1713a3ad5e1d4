"""JSON instance files: a norm, optional points and optional named polytopes."""

from __future__ import annotations

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.geometry.errors import MalformedInput
from src.geometry.polytope import dd_convert
from src.geometry.rational import Vector, format_rational, to_rational, vec
from src.geometry.types import HalfSpace, Polytope
from src.norms.body import NormBody
from src.norms.named import make_norm
from src.settings import DEFAULT_SETTINGS, LabSettings


def _canonical(value: Union[str, int]) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ValueError(f"rationals are written as strings or integers, got {value!r}")
    try:
        return format_rational(to_rational(value))
    except MalformedInput as exc:
        raise ValueError(exc.message) from exc


def _canonical_vector(values: List[Union[str, int]]) -> List[str]:
    return [_canonical(v) for v in values]


class HalfSpaceSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    normal: List[str]
    offset: str

    @field_validator("normal", mode="before")
    @classmethod
    def _parse_normal(cls, value):
        return _canonical_vector(value)

    @field_validator("offset", mode="before")
    @classmethod
    def _parse_offset(cls, value):
        return _canonical(value)

    def halfspace(self) -> HalfSpace:
        return HalfSpace(vec(self.normal), to_rational(self.offset))


class PolytopeSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vrep: Optional[List[List[str]]] = None
    hrep: Optional[List[HalfSpaceSpec]] = None

    @field_validator("vrep", mode="before")
    @classmethod
    def _parse_vrep(cls, value):
        if value is None:
            return value
        return [_canonical_vector(v) for v in value]

    @model_validator(mode="after")
    def _one_representation(self) -> "PolytopeSpec":
        if (self.vrep is None) == (self.hrep is None):
            raise ValueError("a polytope needs exactly one of vrep or hrep")
        return self

    @property
    def width(self) -> int:
        rows = self.vrep if self.vrep is not None else [h.normal for h in self.hrep]
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise ValueError("polytope rows have different lengths")
        return widths.pop()

    def polytope(self, dim: int) -> Polytope:
        if self.vrep is not None:
            return dd_convert([vec(v) for v in self.vrep], dim)
        return dd_convert([h.halfspace() for h in self.hrep], dim)


class InstanceFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dim: int = Field(ge=1)
    norm: Union[str, PolytopeSpec]
    points: Optional[List[List[str]]] = None
    polytopes: Optional[Dict[str, PolytopeSpec]] = None

    @field_validator("points", mode="before")
    @classmethod
    def _parse_points(cls, value):
        if value is None:
            return value
        return [_canonical_vector(p) for p in value]

    @model_validator(mode="after")
    def _check_dims(self) -> "InstanceFile":
        for p in self.points or []:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have {self.dim} coordinates")
        for name, spec in (self.polytopes or {}).items():
            if spec.width != self.dim:
                raise ValueError(f"polytope {name!r} does not live in dimension {self.dim}")
        if isinstance(self.norm, PolytopeSpec) and self.norm.width != self.dim:
            raise ValueError("norm unit ball has the wrong dimension")
        return self

    @classmethod
    def from_json(cls, text: str) -> "InstanceFile":
        return cls.model_validate_json(text)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)

    def norm_body(self, settings: LabSettings = DEFAULT_SETTINGS) -> NormBody:
        if isinstance(self.norm, PolytopeSpec):
            N = NormBody.from_polytope(self.norm.polytope(self.dim), name="custom")
        else:
            N = make_norm(self.norm, denominator_bound=settings.regular_denominator_bound)
        if N.dim != self.dim:
            raise MalformedInput(f"norm {self.norm!r} is not {self.dim}-dimensional")
        return N

    def point_vectors(self) -> List[Vector]:
        if not self.points:
            raise MalformedInput("instance has no points")
        return [vec(p) for p in self.points]

    def polytope(self, name: Optional[str] = None) -> Polytope:
        """Named polytope, the only one when unnamed, else conv(points)."""
        shapes = self.polytopes or {}
        if name is not None:
            if name not in shapes:
                raise MalformedInput(f"instance has no polytope named {name!r}", available=sorted(shapes))
            return shapes[name].polytope(self.dim)
        if len(shapes) == 1:
            return next(iter(shapes.values())).polytope(self.dim)
        if shapes:
            raise MalformedInput("instance has several polytopes; pick one with --body", available=sorted(shapes))
        return dd_convert(self.point_vectors(), self.dim)
