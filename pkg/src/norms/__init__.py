"""Polyhedral Minkowski norms, balls and strictness witnesses."""

from .body import Ball, NormBody, diam, norm_eval, points_of
from .named import make_norm, unit_ball_for
from .witness import lens_radius_witness, sphere_segment, strictness_witness

__all__ = [
    # Types
    "Ball",
    "NormBody",
    # Operations
    "diam",
    "lens_radius_witness",
    "make_norm",
    "norm_eval",
    "points_of",
    "sphere_segment",
    "strictness_witness",
    "unit_ball_for",
]
