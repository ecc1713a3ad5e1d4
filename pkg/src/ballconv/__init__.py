"""Ball hulls, center sets and circumballs."""

from .circum import circumball, circumsphere_restriction, has_unique_circumcenter, is_b_bounded
from .hull import ball_hull, center_set, generator_points, is_b_convex
from .types import BallHull, CenterSet, CircumResult, RestrictionResult

__all__ = [
    # Types
    "BallHull",
    "CenterSet",
    "CircumResult",
    "RestrictionResult",
    # Operations
    "ball_hull",
    "center_set",
    "circumball",
    "circumsphere_restriction",
    "generator_points",
    "has_unique_circumcenter",
    "is_b_bounded",
    "is_b_convex",
]
