"""Exposed b-faces, b-exposed points and the face criterion for generating sets."""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from src.ballconv.circum import is_b_bounded
from src.ballconv.hull import ball_hull, center_set, generator_points, is_b_convex
from src.geometry.errors import CrossCheckMismatch, NotBBounded, NotBConvex, SampleInconsistency, SNotInK
from src.geometry.polytope import dd_convert, face_lattice, polytope_equal
from src.geometry.rational import Vector, dot, midpoint
from src.geometry.types import Polytope
from src.norms.body import NormBody

from .types import ExposedBFace, HullGeneration

logger = logging.getLogger(__name__)


def _pieces(N: NormBody, K: Polytope, y: Vector) -> tuple[Polytope, ...]:
    found = {}
    for a in N.functionals:
        top = max(dot(a, v) for v in K.vrep)
        if top - dot(a, y) != 1:
            continue
        piece = dd_convert([v for v in K.vrep if dot(a, v) == top], N.dim)
        found[piece.vrep] = piece
    return tuple(found[key] for key in sorted(found))


def exposed_b_faces(N: NormBody, K: Polytope) -> List[ExposedBFace]:
    """One exposed b-face per face of the center set, except its interior."""
    if not is_b_convex(N, K):
        raise NotBConvex("body is not b-convex")
    if not is_b_bounded(N, K):
        logger.warning("exposed_b_faces called on a body that is not b-bounded")
    centers = center_set(N, K).polytope

    faces: List[ExposedBFace] = []
    for face in face_lattice(centers):
        if face.polytope is centers and centers.is_full_dimensional:
            continue
        pieces = _pieces(N, K, face.sample)
        if not pieces:
            logger.debug(f"center-set face at {face.sample} supports nothing")
            continue
        corners = face.polytope.vrep
        if len(corners) > 1:
            for inner in (midpoint(face.sample, corners[0]), midpoint(face.sample, corners[-1])):
                if tuple(p.vrep for p in _pieces(N, K, inner)) != tuple(p.vrep for p in pieces):
                    raise SampleInconsistency("face map differs inside one center-set face", sample=face.sample, inner=inner)
        singleton = len(pieces) == 1 and len(pieces[0].vrep) == 1
        faces.append(ExposedBFace(center=face.sample, pieces=pieces, is_singleton=singleton))
    faces.sort(key=lambda f: f.key)
    logger.debug(f"exposed_b_faces: {len(faces)} faces")
    return faces


def b_exposed_points(N: NormBody, K: Polytope) -> List[Vector]:
    if not is_b_convex(N, K):
        raise NotBConvex("body is not b-convex")
    if not is_b_bounded(N, K):
        return []
    points = {f.pieces[0].vrep[0] for f in exposed_b_faces(N, K) if f.is_singleton}
    return sorted(points)


def generates_hull(N: NormBody, K: Polytope, S: Sequence[Vector], *, faces: Optional[Sequence[ExposedBFace]] = None) -> HullGeneration:
    """Does S generate K as its ball hull? Decided directly and by the face criterion."""
    if not is_b_bounded(N, K):
        raise NotBBounded("body is not b-bounded")
    points = generator_points(N, S)
    outside = [p for p in points if not K.contains(p)]
    if outside:
        raise SNotInK("generator points must lie in the body", point=outside[0])

    hull = ball_hull(N, points)
    direct = not hull.is_whole_space and polytope_equal(hull.polytope, K)
    if faces is None:
        faces = exposed_b_faces(N, K)
    missed = next((f for f in faces if not f.meets(points)), None)
    if direct != (missed is None):
        raise CrossCheckMismatch("hull equality and face criterion disagree", direct=direct, missed=missed)
    return HullGeneration(answer=direct, missed_face=missed)
