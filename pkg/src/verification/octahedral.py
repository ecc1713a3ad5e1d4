"""Two disjoint b-convex segments in l1:3 that no unit sphere separates."""

from __future__ import annotations

import logging
from fractions import Fraction as Frac

from src.ballconv.circum import circumball, is_b_bounded
from src.ballconv.hull import center_set, is_b_convex
from src.geometry.lp import lp_solve
from src.geometry.polytope import dd_convert, intersect, polytope_equal, translate
from src.geometry.rational import Vector, format_rational, format_vector, vec
from src.geometry.types import EMPTY, HalfSpace, Polytope
from src.norms.named import make_norm

from .reports import VerificationReport

logger = logging.getLogger(__name__)

EPSILON = Frac(1, 4)


def segment_distance(y: Vector, p: Vector, q: Vector) -> Frac:
    """l1 distance from y to the segment [p, q], by LP over (mu, t)."""
    n = len(y)
    d = [qi - pi for pi, qi in zip(p, q)]
    one, zero = Frac(1), Frac(0)
    rows = [
        HalfSpace((one,) + (zero,) * n, one),
        HalfSpace((-one,) + (zero,) * n, zero),
    ]
    for i in range(n):
        unit = tuple(-one if j == i else zero for j in range(n))
        # t_i >= +(y_i - p_i - mu d_i) and t_i >= -(y_i - p_i - mu d_i)
        rows.append(HalfSpace((-d[i],) + unit, p[i] - y[i]))
        rows.append(HalfSpace((d[i],) + unit, y[i] - p[i]))
    objective = (zero,) + (one,) * n
    value, _ = lp_solve(objective, rows, sense="min", lexicographic=False)
    return value


def verify_octahedral_non_separation(epsilon: Frac = EPSILON) -> VerificationReport:
    N = make_norm("l1:3")
    k1 = dd_convert([vec(["1/4", "1/4", 0]), vec(["-1/4", "-1/4", 0])], 3)
    p2, q2 = vec(["1/4", "-1/4", epsilon]), vec(["-1/4", "1/4", epsilon])
    k2 = dd_convert([p2, q2], 3)
    failures: list[str] = []
    checks = 0

    lens = intersect([translate(N.unit_ball, vec(["-3/4", "1/4", 0])), translate(N.unit_ball, vec(["3/4", "-1/4", 0]))])
    checks += 1
    if lens is EMPTY or not polytope_equal(lens, k1):
        failures.append("first segment is not the intersection of the two unit balls")

    radius = circumball(N, k1).radius
    checks += 1
    if radius != Frac(1, 2):
        failures.append(f"circumradius of the first segment is {radius}, expected 1/2")

    for name, body in (("first", k1), ("second", k2)):
        checks += 1
        if not (is_b_convex(N, body) and is_b_bounded(N, body)):
            failures.append(f"{name} segment is not a b-bounded b-convex body")
    checks += 1
    if intersect([k1, k2]) is not EMPTY:
        failures.append("segments intersect")

    centers: Polytope = center_set(N, k1).polytope
    distances = {v: segment_distance(v, p2, q2) for v in centers.vrep}
    worst = max(distances.values())
    checks += len(distances)
    if worst >= 1:
        failures.append(f"center-set vertex at distance {worst} from the second segment")
    logger.debug(f"octahedral example: {len(distances)} center-set vertices, max distance {worst}")

    return VerificationReport(
        name="example1",
        passed=not failures,
        checks=checks,
        failures=failures,
        details={
            "epsilon": format_rational(epsilon),
            "circumradius": format_rational(radius),
            "center_set_vertices": [format_vector(v) for v in centers.vrep],
            "max_distance": format_rational(worst),
        },
        conclusion="every unit ball containing the first segment meets the interior side of the second: no separating unit sphere",
    )
