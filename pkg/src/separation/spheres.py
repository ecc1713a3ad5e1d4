"""Supporting and separating unit spheres, built the constructive way."""

from __future__ import annotations

import logging
from fractions import Fraction as Frac

from src.ballconv.circum import circumball
from src.ballconv.hull import ball_hull, center_set, is_b_convex
from src.geometry.errors import NotBBounded, NotBConvex, NotBoundary, PointInsideBody, PointInsideHull
from src.geometry.polytope import ray_max, vertex_min
from src.geometry.rational import Vector, add, check_dim, dot, scale, sub
from src.geometry.types import Polytope
from src.norms.body import NormBody

from .types import CertificateKind, SeparationCertificate

logger = logging.getLogger(__name__)


def supporting_sphere_at(N: NormBody, K: Polytope, x0: Vector) -> SeparationCertificate:
    """Center y with K ⊆ B(y,1) and ||x0 - y|| = 1, minimizing each facet functional over the center set."""
    check_dim(x0, N.dim)
    if not K.contains(x0) or K.is_interior(x0):
        raise NotBoundary("point is not on the boundary of the body", point=x0)
    if not is_b_convex(N, K):
        raise NotBConvex("body is not b-convex")
    centers = center_set(N, K).polytope

    best_value, best_center = None, None
    for a in N.functionals:
        lowest, y = vertex_min(centers, a)
        value = dot(a, x0) - lowest
        if best_value is None or value > best_value:
            best_value, best_center = value, y
    if best_value < 1:
        raise NotBoundary("no unit sphere around the body passes through the point", point=x0, reach=best_value)
    return SeparationCertificate(y0=best_center, kind=CertificateKind.SUPPORTING_AT_POINT, body_vertices=K.vrep, norm=N, touching_point=tuple(x0))


def separate_point(N: NormBody, K: Polytope, x0: Vector) -> SeparationCertificate:
    """Supporting sphere whose ball misses x0 (ray shooting from an excluding center)."""
    check_dim(x0, N.dim)
    hull = ball_hull(N, K)
    if hull.contains(x0):
        raise PointInsideHull("point lies in the ball hull of the body", point=x0)
    centers = hull.center_set.polytope
    y1 = next(v for v in centers.vrep if N.distance(x0, v) > 1)
    direction = sub(y1, x0)
    reach = ray_max(centers, y1, direction)
    y0 = add(y1, scale(reach, direction))
    logger.debug(f"separate_point: y1={y1} reach={reach}")
    return SeparationCertificate(y0=y0, kind=CertificateKind.POINT_EXCLUDED, body_vertices=K.vrep, norm=N, excluded_point=tuple(x0))


def separate_point_strict(N: NormBody, K: Polytope, x0: Vector) -> SeparationCertificate:
    """Unit sphere missing x0 whose ball holds K inside a smaller concentric ball."""
    check_dim(x0, N.dim)
    circ = circumball(N, K)
    if circ.radius >= 1:
        raise NotBBounded("body is not b-bounded", radius=circ.radius)
    if K.contains(x0):
        raise PointInsideBody("point lies in the body", point=x0)
    y1 = circ.witness_center
    y2 = separate_point(N, K, x0).y0
    eps = Frac(1, 2)
    while True:
        y0 = add(y2, scale(eps, sub(y1, y2)))
        if N.distance(x0, y0) > 1:
            break
        eps /= 2
    shrink = max(N.distance(v, y0) for v in K.vrep)
    logger.debug(f"separate_point_strict: eps={eps} shrink={shrink}")
    return SeparationCertificate(
        y0=y0,
        kind=CertificateKind.STRICT_WITH_RADIUS,
        body_vertices=K.vrep,
        norm=N,
        shrink_radius=shrink,
        excluded_point=tuple(x0),
    )
