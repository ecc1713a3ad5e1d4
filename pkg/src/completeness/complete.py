"""Complete (diametrically maximal) sets and unique completions."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction as Frac
from itertools import combinations
from typing import List, Optional, Sequence

from src.ballconv.hull import ball_hull, generator_points
from src.geometry.errors import CNotComplete, CrossCheckMismatch, DiameterNotOne, KNotInC
from src.geometry.polytope import dd_convert, intersect, is_subset, polytope_equal, translate
from src.geometry.rational import Vector, format_rational, format_vector
from src.geometry.types import EMPTY, Polytope, PolytopeOrWhole
from src.norms.body import NormBody, diam
from src.separation.faces import exposed_b_faces, generates_hull

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompletionReport:
    input_diam: Frac
    hull: PolytopeOrWhole
    is_complete_hull: bool
    unique_completion: Optional[Polytope] = None
    criterion_I: Optional[bool] = None
    criterion_II: Optional[bool] = None
    criterion_III: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "input_diam": format_rational(self.input_diam),
            "hull": self.hull.to_dict() if isinstance(self.hull, Polytope) else {"whole_space": True},
            "is_complete_hull": self.is_complete_hull,
            "unique_completion": [format_vector(v) for v in self.unique_completion.vrep] if self.unique_completion else None,
            "criterion_I": self.criterion_I,
            "criterion_II": self.criterion_II,
            "criterion_III": self.criterion_III,
        }


def _vertex_intersection(N: NormBody, C: Polytope):
    return intersect([translate(N.unit_ball, v) for v in C.vrep])


def is_complete(N: NormBody, C: Polytope) -> bool:
    """C equals the intersection of the unit balls around its vertices (diameter 1 required)."""
    width = diam(N, C)
    if width != 1:
        raise DiameterNotOne("set must have diameter exactly 1", diam=width)
    region = _vertex_intersection(N, C)
    complete = region is not EMPTY and polytope_equal(region, C)
    if complete:
        for v in C.vrep:
            if not any(N.distance(v, w) == 1 for w in C.vrep):
                raise CrossCheckMismatch("complete set has a vertex without a diametral partner", vertex=v)
    return complete


def completion_report(N: NormBody, S: Sequence[Vector], C: Optional[Polytope] = None) -> CompletionReport:
    points = generator_points(N, S)
    width = diam(N, points)
    if width != 1:
        raise DiameterNotOne("generator set must have diameter exactly 1", diam=width)

    hull = ball_hull(N, points)
    complete_hull = not hull.is_whole_space and diam(N, hull.polytope) == 1 and is_complete(N, hull.polytope)
    report = CompletionReport(
        input_diam=width,
        hull=hull.polytope,
        is_complete_hull=complete_hull,
        unique_completion=hull.polytope if complete_hull else None,
    )
    if C is None:
        return report

    if diam(N, C) != 1 or not is_complete(N, C):
        raise CNotComplete("candidate completion is not complete")
    body = dd_convert(list(points), N.dim)
    if not is_subset(body, C):
        raise KNotInC("conv(S) is not contained in the candidate completion")

    criterion_II = not hull.is_whole_space and polytope_equal(hull.polytope, C)
    criterion_III = all(any(intersect([body, piece]) is not EMPTY for piece in face.pieces) for face in exposed_b_faces(N, C))
    if criterion_II != criterion_III:
        raise CrossCheckMismatch("hull identity and face meeting disagree", criterion_II=criterion_II, criterion_III=criterion_III)
    logger.debug(f"completion_report: criteria {criterion_II}")
    return CompletionReport(
        input_diam=width,
        hull=hull.polytope,
        is_complete_hull=complete_hull,
        unique_completion=report.unique_completion,
        criterion_I=criterion_II,
        criterion_II=criterion_II,
        criterion_III=criterion_III,
    )


def minimal_generating_sets(N: NormBody, C: Polytope, candidates: Sequence[Vector], max_size: int = 4) -> List[tuple[Vector, ...]]:
    """Inclusion-minimal subsets of the candidates whose ball hull is C, smallest first."""
    pool = [p for p in generator_points(N, candidates) if C.contains(p)]
    faces = exposed_b_faces(N, C)
    found: List[tuple[Vector, ...]] = []
    for size in range(1, max_size + 1):
        for subset in combinations(pool, size):
            if any(set(smaller) <= set(subset) for smaller in found):
                continue
            if generates_hull(N, C, subset, faces=faces).answer:
                found.append(subset)
    logger.debug(f"minimal_generating_sets: {len(found)} sets from {len(pool)} candidates")
    return found
