from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence, Union

from src.geometry.errors import PreconditionError
from src.geometry.polytope import intersect, polytope_equal, translate
from src.geometry.rational import Vector, check_dim
from src.geometry.types import EMPTY, WHOLE_SPACE, Polytope, PolytopeOrEmpty
from src.norms.body import NormBody, points_of

from .types import BallHull, CenterSet

logger = logging.getLogger(__name__)

REGION_CACHE_SIZE = 2048


def generator_points(N: NormBody, S: Union[Sequence[Vector], Polytope]) -> tuple[Vector, ...]:
    """Distinct points of S (vertices for a polytope) in canonical order."""
    points = sorted(set(points_of(S)))
    if not points:
        raise PreconditionError("generator set must be non-empty")
    for p in points:
        check_dim(p, N.dim)
    return tuple(points)


@lru_cache(maxsize=REGION_CACHE_SIZE)
def translate_intersection(N: NormBody, points: tuple[Vector, ...]) -> PolytopeOrEmpty:
    """⋂ (p + B) over the points, memoized per (norm, points)."""
    return intersect([translate(N.unit_ball, p) for p in points])


def center_set(N: NormBody, S: Union[Sequence[Vector], Polytope]) -> CenterSet:
    points = generator_points(N, S)
    return CenterSet(polytope=translate_intersection(N, points), generators=points, norm=N)


def ball_hull(N: NormBody, S: Union[Sequence[Vector], Polytope]) -> BallHull:
    centers = center_set(N, S)
    if centers.is_empty:
        logger.debug(f"ball hull of {len(centers.generators)} points is the whole space")
        return BallHull(polytope=WHOLE_SPACE, generators=centers.generators, center_set=centers, norm=N)
    hull = translate_intersection(N, centers.polytope.vrep)
    if hull is EMPTY:
        raise PreconditionError("ball hull cannot be empty when centers exist")
    return BallHull(polytope=hull, generators=centers.generators, center_set=centers, norm=N)


def is_b_convex(N: NormBody, P: Polytope) -> bool:
    hull = ball_hull(N, P)
    return not hull.is_whole_space and polytope_equal(hull.polytope, P)
