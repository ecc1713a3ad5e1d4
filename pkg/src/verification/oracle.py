"""Floating-point membership oracle for the four-dimensional counterexample body.

The unit ball is B = conv(K ∪ L) with

    K = {(k1, k2, k3, 0) : max(||(k1, k2)||_2, ||(k2, k3)||_2) <= 1}
    L = {(l1, 0, l3, l4) : max(||(l1, l4)||_2, |l3|) <= 1}

so x is in B iff some split x1 = k1 + l1, x3 = k3 + l3 keeps the sum of the two gauges at most 1.
Everything here is approximate; answers carry a tolerance band.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Frac
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from src.settings import DEFAULT_SETTINGS

from .reports import VerificationReport

logger = logging.getLogger(__name__)


class Membership(str, Enum):
    IN = "in"
    OUT = "out"
    BOUNDARY = "boundary"


def _bounded_min(f: Callable[[float], float], lo: float, hi: float, step_floor: float) -> float:
    """Minimum of a convex function on [lo, hi], endpoints included."""
    if hi - lo <= step_floor:
        return f(lo)
    result = minimize_scalar(f, bounds=(lo, hi), method="bounded", options={"xatol": step_floor})
    return min(float(result.fun), f(lo), f(hi))


@dataclass(frozen=True)
class DimensionFourOracle:
    tolerance: float = DEFAULT_SETTINGS.oracle_tolerance
    step_floor: float = DEFAULT_SETTINGS.oracle_step_floor

    def gauge(self, x: Sequence[float]) -> float:
        """Smallest gauge sum over all splits of x between K and L."""
        x1, x2, x3, x4 = (float(c) for c in x)

        def split_cost(k1: float, k3: float) -> float:
            on_k = max(math.hypot(k1, x2), math.hypot(x2, k3))
            on_l = max(math.hypot(x1 - k1, x4), abs(x3 - k3))
            return on_k + on_l

        def best_for(k1: float) -> float:
            return _bounded_min(lambda k3: split_cost(k1, k3), min(0.0, x3), max(0.0, x3), self.step_floor)

        return _bounded_min(best_for, min(0.0, x1), max(0.0, x1), self.step_floor)

    def membership(self, x: Sequence[float]) -> Membership:
        if len(x) != 4:
            raise ValueError(f"oracle points have 4 coordinates, got {len(x)}")
        value = self.gauge(x)
        if value < 1 - self.tolerance:
            return Membership.IN
        if value > 1 + self.tolerance:
            return Membership.OUT
        return Membership.BOUNDARY

    def contains(self, x: Sequence[float]) -> bool:
        return self.membership(x) is not Membership.OUT

    def in_ball(self, x: Sequence[float], center: Sequence[float]) -> Membership:
        return self.membership([float(a) - float(c) for a, c in zip(x, center)])


def _in_l_exactly(point: Sequence[Frac]) -> bool:
    l1, l2, l3, l4 = point
    return l2 == 0 and l1 * l1 + l4 * l4 <= 1 and abs(l3) <= 1


def _disc_point(t: Frac, radius: Frac) -> tuple[Frac, Frac]:
    """Rational point of the circle of the given radius (stereographic parameter t)."""
    denom = 1 + t * t
    return ((1 - t * t) / denom * radius, 2 * t / denom * radius)


def verify_segment_hull(alpha: Frac, samples: int, *, oracle: DimensionFourOracle | None = None, seed: int = 0) -> VerificationReport:
    """The ball hull of ±(alpha,0,0,0) is the segment between them."""
    alpha = Frac(alpha)
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie strictly between 0 and 1")
    oracle = oracle or DimensionFourOracle()
    a = float(alpha)
    beta = math.sqrt(1 - a * a)
    centers = [(0.0, beta, a, 0.0), (0.0, -beta, -a, 0.0)]
    rng = np.random.default_rng(seed)
    failures: list[str] = []
    checks = 0

    for s in np.linspace(-a, a, num=max(samples // 10, 3)):
        point = (float(s), 0.0, 0.0, 0.0)
        for center in centers:
            checks += 1
            if oracle.in_ball(point, center) is Membership.OUT:
                failures.append(f"segment point {point} outside witness ball at {center}")

    margin = math.inf
    for _ in range(samples):
        x1 = rng.uniform(-a, a)
        x2, x4 = rng.uniform(-0.5, 0.5, size=2)
        if max(abs(x2), abs(x4)) < 0.05:
            x4 = 0.05 if x4 >= 0 else -0.05
        sample = (float(x1), float(x2), 0.0, float(x4))
        checks += 1
        excess = max(oracle.gauge([p - c for p, c in zip(sample, center)]) - 1 for center in centers)
        margin = min(margin, excess)
        if excess <= oracle.tolerance:
            failures.append(f"off-segment point {sample} not excluded by a witness ball")

    logger.debug(f"verify_segment_hull: {checks} checks, margin {margin:.3e}")
    return VerificationReport(
        name="segment-hull",
        passed=not failures,
        checks=checks,
        failures=failures,
        details={"alpha": str(alpha), "samples": samples, "exclusion_margin": margin},
        approx=True,
        conclusion="consistent within tolerance: the ball hull of the two points is the segment",
    )


def verify_disc_hull(samples: int, *, oracle: DimensionFourOracle | None = None, seed: int = 0) -> VerificationReport:
    """The ball hull of ±(1,0,0,0) is the unit disc in the (x1, x4) plane."""
    if samples < 1:
        raise ValueError("samples must be positive")
    oracle = oracle or DimensionFourOracle()
    rng = np.random.default_rng(seed)
    failures: list[str] = []
    checks = 0
    e1 = (1.0, 0.0, 0.0, 0.0)

    for _ in range(samples):
        tau3 = Frac(int(rng.integers(-8, 9)), 8)
        t = Frac(int(rng.integers(-16, 17)), 8)
        radius = Frac(int(rng.integers(0, 9)), 8)
        x1, x4 = _disc_point(t, radius)
        checks += 1
        if not _in_l_exactly((x1, Frac(0), -tau3, x4)):
            failures.append(f"({x1},0,{-tau3},{x4}) not in L")

    for _ in range(samples):
        tau3 = float(rng.uniform(-1, 1))
        shift = [0.0, 0.0, tau3, 0.0]
        axis = int(rng.choice([0, 1, 3]))
        shift[axis] = float(rng.choice([-1, 1]) * rng.uniform(0.05, 0.5))
        checks += 1
        held = all(oracle.in_ball([sign * c for c in e1], shift) is not Membership.OUT for sign in (1, -1))
        if held:
            failures.append(f"both ±e1 fit in the ball at {tuple(shift)}")

    for tau3 in np.linspace(-1, 1, num=9):
        shift = (0.0, 0.0, float(tau3), 0.0)
        checks += 1
        if not all(oracle.in_ball([sign * c for c in e1], shift) is not Membership.OUT for sign in (1, -1)):
            failures.append(f"±e1 do not fit in the ball at {shift}")

    logger.debug(f"verify_disc_hull: {checks} checks")
    return VerificationReport(
        name="disc-hull",
        passed=not failures,
        checks=checks,
        failures=failures,
        details={"samples": samples},
        approx=True,
        conclusion="consistent within tolerance: unit balls through ±e1 are exactly the shifts along the third axis",
    )
