"""Spindles and seeded searches for k-spindle convexity violations.

A probe that finds nothing is not a proof: it only reports how many tuples were tried.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction as Frac
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.ballconv.hull import ball_hull, is_b_convex
from src.ballconv.types import BallHull
from src.geometry.errors import CertificateInvalid, PreconditionError
from src.geometry.polytope import polytope_equal
from src.geometry.rational import Vector, check_dim, format_vector
from src.geometry.types import Polytope
from src.norms.body import NormBody
from src.settings import DEFAULT_SETTINGS

logger = logging.getLogger(__name__)


class ProbeStatus(str, Enum):
    VIOLATED = "violated"
    NO_VIOLATION_FOUND = "no_violation_found"


@dataclass(frozen=True)
class SpindleProbeResult:
    status: ProbeStatus
    trials: int
    k: int
    witness_points: Optional[Tuple[Vector, ...]] = None
    witness_outside: Optional[Vector] = None
    repetition_consistent: Optional[bool] = None
    norm: Optional[NormBody] = field(default=None, repr=False, compare=False)
    body: Optional[Polytope] = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.status is not ProbeStatus.VIOLATED:
            return
        if self.witness_points is None or self.witness_outside is None or self.norm is None or self.body is None:
            raise CertificateInvalid("violation needs witness points, an outside point, a norm and a body")
        if not all(self.body.contains(p) for p in self.witness_points):
            raise CertificateInvalid("witness points must lie in the body")
        if self.body.contains(self.witness_outside):
            raise CertificateInvalid("outside witness lies in the body", point=self.witness_outside)
        if not ball_hull(self.norm, self.witness_points).contains(self.witness_outside):
            raise CertificateInvalid("outside witness is not in the ball hull of the witness points", point=self.witness_outside)

    @property
    def violated(self) -> bool:
        return self.status is ProbeStatus.VIOLATED

    def to_dict(self) -> dict:
        payload = {"status": self.status.value, "k": self.k, "trials": self.trials}
        if self.violated:
            payload["witness_points"] = [format_vector(p) for p in self.witness_points]
            payload["witness_outside"] = format_vector(self.witness_outside)
            payload["repetition_consistent"] = self.repetition_consistent
        return payload


def spindle(N: NormBody, x1: Vector, x2: Vector) -> BallHull:
    """Ball hull of two points (the whole space when they are more than 2 apart)."""
    check_dim(x1, N.dim)
    check_dim(x2, N.dim)
    return ball_hull(N, [x1, x2])


def _grid(P: Polytope, depth: int) -> List[Vector]:
    """Dyadic grid of P's bounding box at the given depth, restricted to P."""
    axes = []
    for i in range(P.dim_ambient):
        lo = min(v[i] for v in P.vrep)
        hi = max(v[i] for v in P.vrep)
        steps = 2**depth
        axes.append(sorted({lo + (hi - lo) * Frac(j, steps) for j in range(steps + 1)}))
    return [p for p in product(*axes) if P.contains(p)]


def _outside_point(hull: BallHull, P: Polytope) -> Optional[Vector]:
    if hull.is_whole_space:
        top = P.vrep[-1]
        width = max(v[0] for v in P.vrep) - min(v[0] for v in P.vrep)
        return (top[0] + width + 1,) + tuple(top[1:])
    return next((v for v in hull.polytope.vrep if not P.contains(v)), None)


def k_spindle_probe(
    N: NormBody,
    P: Polytope,
    k: int,
    budget: int,
    seed: int = DEFAULT_SETTINGS.default_seed,
    *,
    shortcut: bool = True,
    max_size: int = DEFAULT_SETTINGS.spindle_max_size,
    max_depth: int = DEFAULT_SETTINGS.spindle_max_depth,
) -> SpindleProbeResult:
    """Search for k points of P whose ball hull leaves P; k = 0 tries every size up to max_size."""
    if k == 1 or k < 0:
        raise PreconditionError("k must be at least 2 (or 0 for all sizes)", k=k)
    if budget < 1:
        raise PreconditionError("budget must be positive", budget=budget)
    sizes = list(range(2, max_size + 1)) if k == 0 else [k]

    if shortcut and is_b_convex(N, P):
        logger.debug("k_spindle_probe: body is b-convex, nothing to search")
        return SpindleProbeResult(status=ProbeStatus.NO_VIOLATION_FOUND, trials=0, k=k)

    trials = 0

    def test(points: Sequence[Vector]) -> Optional[SpindleProbeResult]:
        hull = ball_hull(N, points)
        outside = _outside_point(hull, P)
        if outside is None:
            return None
        repeated = ball_hull(N, list(points) + [points[0]])
        consistent = hull.is_whole_space == repeated.is_whole_space and (hull.is_whole_space or polytope_equal(hull.polytope, repeated.polytope))
        logger.info(f"spindle violation after {trials} trials: {len(points)} points, outside {outside}")
        return SpindleProbeResult(
            status=ProbeStatus.VIOLATED,
            trials=trials,
            k=k,
            witness_points=tuple(points),
            witness_outside=outside,
            repetition_consistent=consistent,
            norm=N,
            body=P,
        )

    for size in sizes:
        for subset in combinations(P.vrep, size):
            if trials >= budget:
                break
            trials += 1
            found = test(subset)
            if found is not None:
                return found

    depth = min(max_depth, max(1, budget.bit_length() // 3))
    grid = _grid(P, depth)
    rng = np.random.default_rng(seed)
    stalled, turn = 0, 0
    while trials < budget and stalled < len(sizes):
        size = sizes[turn % len(sizes)]
        turn += 1
        if len(grid) < size:
            stalled += 1
            continue
        stalled = 0
        picks = rng.choice(len(grid), size=size, replace=False)
        points = sorted(grid[int(i)] for i in picks)
        trials += 1
        found = test(points)
        if found is not None:
            return found

    logger.debug(f"k_spindle_probe: no violation in {trials} trials (grid depth {depth}, {len(grid)} points)")
    return SpindleProbeResult(status=ProbeStatus.NO_VIOLATION_FOUND, trials=trials, k=k)
