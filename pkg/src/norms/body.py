from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction as Frac
from typing import Sequence, Tuple, Union

from src.geometry.errors import NotFullDimensional, NotSymmetric, OriginNotInterior, PreconditionError
from src.geometry.polytope import dilate, translate
from src.geometry.rational import Vector, check_dim, dot, neg, sub, to_rational
from src.geometry.types import Polytope

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormBody:
    """Polyhedral Minkowski norm: ||x|| = max_i <a_i, x> over the facet functionals."""

    unit_ball: Polytope
    functionals: Tuple[Vector, ...]
    name: str = field(default="custom", compare=False)

    @classmethod
    def from_polytope(cls, P: Polytope, *, name: str = "custom") -> "NormBody":
        vertices = set(P.vrep)
        if any(neg(v) not in vertices for v in vertices):
            raise NotSymmetric("unit ball must be symmetric about the origin", name=name)
        if not P.is_full_dimensional:
            raise NotFullDimensional("unit ball must be full-dimensional", name=name, dim_affine=P.dim_affine)
        if any(h.offset <= 0 for h in P.hrep):
            raise OriginNotInterior("origin must be an interior point of the unit ball", name=name)
        functionals = sorted(tuple(c / h.offset for c in h.normal) for h in P.hrep)
        logger.debug(f"norm {name}: {len(P.vrep)} vertices, {len(functionals)} facet functionals")
        return cls(unit_ball=P, functionals=tuple(functionals), name=name)

    @property
    def dim(self) -> int:
        return self.unit_ball.dim_ambient

    def evaluate(self, x: Vector) -> Frac:
        check_dim(x, self.dim)
        return max(dot(a, x) for a in self.functionals)

    def distance(self, x: Vector, y: Vector) -> Frac:
        return self.evaluate(sub(x, y))

    def facet_vertices(self, functional: Vector) -> list[Vector]:
        return [v for v in self.unit_ball.vrep if dot(functional, v) == 1]


@dataclass(frozen=True)
class Ball:
    """Closed ball center + radius·B of a NormBody."""

    center: Vector
    radius: Frac
    norm: NormBody = field(repr=False)

    def __post_init__(self) -> None:
        check_dim(self.center, self.norm.dim)
        if self.radius < 0:
            raise PreconditionError("ball radius must be non-negative", radius=self.radius)

    def contains(self, x: Vector) -> bool:
        return self.norm.distance(x, self.center) <= self.radius

    def on_sphere(self, x: Vector) -> bool:
        return self.norm.distance(x, self.center) == self.radius

    def polytope(self) -> Polytope:
        return translate(dilate(self.norm.unit_ball, self.radius), self.center)


def norm_eval(N: NormBody, x: Vector) -> Frac:
    return N.evaluate(x)


def points_of(S: Union[Sequence[Vector], Polytope]) -> list[Vector]:
    """Vertex set of a polytope argument, or the given points."""
    if isinstance(S, Polytope):
        return list(S.vrep)
    return [tuple(to_rational(c) for c in p) for p in S]


def diam(N: NormBody, S: Union[Sequence[Vector], Polytope]) -> Frac:
    points = points_of(S)
    if not points:
        raise PreconditionError("diameter of an empty set")
    best = Frac(0)
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            best = max(best, N.distance(p, q))
    return best
