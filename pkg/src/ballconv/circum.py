from __future__ import annotations

import logging
from fractions import Fraction as Frac
from functools import lru_cache
from typing import Sequence, Union

from src.geometry.errors import DegenerateSingleton
from src.geometry.lp import lp_solve
from src.geometry.polytope import dd_convert, dilate, intersect, translate
from src.geometry.rational import Vector, dot
from src.geometry.types import EMPTY, HalfSpace, Polytope
from src.norms.body import NormBody

from .hull import REGION_CACHE_SIZE, generator_points
from .types import CircumResult, RestrictionResult

logger = logging.getLogger(__name__)


@lru_cache(maxsize=REGION_CACHE_SIZE)
def _circumball(N: NormBody, points: tuple[Vector, ...]) -> CircumResult:
    n = N.dim
    # only the farthest point along each functional can bind
    constraints = [HalfSpace(tuple(-c for c in a) + (Frac(-1),), -max(dot(a, s) for s in points)) for a in N.functionals]
    objective = tuple(Frac(0) for _ in range(n)) + (Frac(1),)
    value = lp_solve(objective, constraints, sense="min", lexicographic=False).value

    if value == 0:
        centers = dd_convert([points[0]], n)
    else:
        ball = dilate(N.unit_ball, value)
        centers = intersect([translate(ball, s) for s in points])
        if centers is EMPTY:
            raise AssertionError("circumcenter set cannot be empty at the optimal radius")
    # vrep is sorted, so its head is the lexicographically smallest circumcenter
    logger.debug(f"circumball of {len(points)} points: radius {value}")
    return CircumResult(radius=value, center_set=centers, witness_center=centers.vrep[0])


def circumball(N: NormBody, S: Union[Sequence[Vector], Polytope]) -> CircumResult:
    """Minimal enclosing ball by LP over (c, r): <a_i, s - c> <= r for all s, i."""
    return _circumball(N, generator_points(N, S))


def is_b_bounded(N: NormBody, S: Union[Sequence[Vector], Polytope]) -> bool:
    return circumball(N, S).radius < 1


def has_unique_circumcenter(N: NormBody, S: Union[Sequence[Vector], Polytope]) -> bool:
    return circumball(N, S).center_set.dim_affine == 0


def circumsphere_restriction(N: NormBody, S: Union[Sequence[Vector], Polytope]) -> RestrictionResult:
    """Circumradius of the points of S on the witness circumsphere, and a far pair among them."""
    points = generator_points(N, S)
    if len(points) == 1:
        raise DegenerateSingleton("a single point has a degenerate circumsphere", radius=Frac(0), pair=(points[0], points[0]))
    result = circumball(N, points)
    on_sphere = [s for s in points if N.distance(s, result.witness_center) == result.radius]
    restricted = circumball(N, on_sphere).radius

    best = None
    for i, x in enumerate(on_sphere):
        for y in on_sphere[i + 1 :]:
            d = N.distance(x, y)
            if best is None or d > best[0]:
                best = (d, (x, y))
    pair = best[1] if best is not None else (on_sphere[0], on_sphere[0])
    return RestrictionResult(radius=restricted, pair=pair)
