from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction as Frac
from typing import NamedTuple, Optional, Sequence, Tuple

from src.geometry.errors import CertificateInvalid
from src.geometry.rational import Vector, format_rational, format_vector
from src.geometry.types import Polytope
from src.norms.body import NormBody


class CertificateKind(str, Enum):
    SUPPORTING_AT_POINT = "supporting_at_point"
    POINT_EXCLUDED = "point_excluded"
    STRICT_WITH_RADIUS = "strict_with_radius"


@dataclass(frozen=True)
class SeparationCertificate:
    """Unit sphere S(y0, 1) around a body, re-verified exactly on construction."""

    y0: Vector
    kind: CertificateKind
    body_vertices: Tuple[Vector, ...] = field(repr=False)
    norm: NormBody = field(repr=False, compare=False)
    shrink_radius: Optional[Frac] = None
    excluded_point: Optional[Vector] = None
    touching_point: Optional[Vector] = None

    def __post_init__(self) -> None:
        distances = [self.norm.distance(v, self.y0) for v in self.body_vertices]
        if any(d > 1 for d in distances):
            raise CertificateInvalid("body is not inside B(y0, 1)", y0=self.y0)
        if self.kind is CertificateKind.SUPPORTING_AT_POINT:
            if self.touching_point is None or self.norm.distance(self.touching_point, self.y0) != 1:
                raise CertificateInvalid("touching point is not on the sphere", y0=self.y0)
            return
        if self.excluded_point is None or self.norm.distance(self.excluded_point, self.y0) <= 1:
            raise CertificateInvalid("excluded point is not outside B(y0, 1)", y0=self.y0)
        if self.kind is CertificateKind.POINT_EXCLUDED:
            if max(distances) != 1:
                raise CertificateInvalid("sphere does not support the body", y0=self.y0)
            return
        if self.shrink_radius is None or self.shrink_radius >= 1 or max(distances) > self.shrink_radius:
            raise CertificateInvalid("shrink radius must bound the body and stay below 1", y0=self.y0)

    def to_dict(self) -> dict:
        payload = {"kind": self.kind.value, "y0": format_vector(self.y0)}
        if self.shrink_radius is not None:
            payload["shrink_radius"] = format_rational(self.shrink_radius)
        if self.excluded_point is not None:
            payload["excluded_point"] = format_vector(self.excluded_point)
            payload["excluded_distance"] = format_rational(self.norm.distance(self.excluded_point, self.y0))
        if self.touching_point is not None:
            payload["touching_point"] = format_vector(self.touching_point)
        return payload


@dataclass(frozen=True)
class ExposedBFace:
    """K ∩ S(center, 1) stored as the union of its polytope pieces."""

    center: Vector
    pieces: Tuple[Polytope, ...]
    is_singleton: bool

    @property
    def key(self) -> tuple:
        return (tuple(p.vrep for p in self.pieces), self.center)

    def contains(self, x: Vector) -> bool:
        return any(p.contains(x) for p in self.pieces)

    def meets(self, points: Sequence[Vector]) -> bool:
        return any(self.contains(x) for x in points)

    def to_dict(self) -> dict:
        return {
            "center": format_vector(self.center),
            "is_singleton": self.is_singleton,
            "pieces": [[format_vector(v) for v in p.vrep] for p in self.pieces],
        }


class HullGeneration(NamedTuple):
    answer: bool
    missed_face: Optional[ExposedBFace]
