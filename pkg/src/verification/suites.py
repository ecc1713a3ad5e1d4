"""Seeded verification suites run by ``ballconv check``.

Every suite draws its random instances from one numpy generator seeded by the caller, so a
suite gives the same report on every run. All suites except ``example4`` are exact.
"""

from __future__ import annotations

import logging
from fractions import Fraction as Frac
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from src.ballconv import ball_hull, circumball, circumsphere_restriction, has_unique_circumcenter
from src.completeness import completion_report, is_complete, minimal_generating_sets
from src.geometry import GeometryError, Polytope, Vector, dd_convert, face_lattice, format_vector, intersect, is_subset, lp_solve, polygon_area, polytope_equal, vec
from src.geometry.errors import CNotComplete
from src.geometry.rational import add, dot, midpoint, scale
from src.norms import Ball, NormBody, diam, lens_radius_witness, make_norm, strictness_witness
from src.separation import b_exposed_points, exposed_b_faces, generates_hull, separate_point, separate_point_strict, supporting_sphere_at
from src.spindle import SpindleProbeResult, k_spindle_probe

from .octahedral import verify_octahedral_non_separation
from .oracle import DimensionFourOracle, Membership, verify_disc_hull, verify_segment_hull
from .reports import VerificationReport

logger = logging.getLogger(__name__)

INSTANCES = 100
EUCLIDEAN_SPINDLE_AREA = 0.18117
SMALL_NORMS = ("linf:2", "l1:2", "linf:3", "l1:3")
PLANAR_NORMS = ("linf:2", "l1:2")
HULL_OF_BALL_RADII = (Frac(0), Frac(1, 2), Frac(1))
MEMBERSHIP_SAMPLES = 200
SPINDLE_INSTANCES = 50
DIMENSION_HYPOTHESIS_NECESSARY = "Theorem 2's dimension hypothesis (9) is necessary — Problem 2.6 answer negative"


class _Tally:
    def __init__(self, name: str) -> None:
        self.name = name
        self.checks = 0
        self.failures: List[str] = []
        self.details: dict = {}

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def run(self, label: str, action: Callable[[], object]) -> object:
        """Run one step, turning library errors into recorded failures."""
        try:
            return action()
        except GeometryError as exc:
            self.checks += 1
            self.failures.append(f"{label}: {exc}")
            return None

    def report(self, conclusion: str, *, approx: bool = False) -> VerificationReport:
        return VerificationReport(
            name=self.name,
            passed=not self.failures,
            checks=self.checks,
            failures=self.failures,
            details=self.details,
            approx=approx,
            conclusion=conclusion,
        )


def _extent(N: NormBody) -> Frac:
    """Coordinate range keeping every random set b-bounded."""
    return Frac(1, 2) if N.name.startswith("linf") else Frac(1, 2 * N.dim)


def _random_points(rng: np.random.Generator, N: NormBody, count: int) -> List[Vector]:
    reach = _extent(N)
    return [tuple(reach * Frac(int(k), 4) for k in rng.integers(-4, 5, size=N.dim)) for _ in range(count)]


def _norm_cycle(names: Sequence[str]) -> List[NormBody]:
    norms = [make_norm(name) for name in names]
    return [norms[i % len(norms)] for i in range(INSTANCES)]


def hexagon_norm() -> NormBody:
    """Unit ball |x| <= 1, |y| <= 1, |x + y| <= 1, the difference body of a triangle."""
    corners = [vec(p) for p in ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))]
    return NormBody.from_polytope(dd_convert(corners, 2), name="hexagon")


def _sample_size(rng: np.random.Generator, N: NormBody, low: int, high: int) -> int:
    """Random set size in [low, high], capped at three points in dimension three."""
    top = high if N.dim == 2 else min(high, 3)
    return int(rng.integers(low, top + 1))


def _face_samples(P: Polytope) -> List[Vector]:
    """Vertex centroids of every face of P, the vertices included."""
    return [face.sample for face in face_lattice(P)]


def lemma1_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("lemma1")
    sampled = 0
    for N in _norm_cycle(SMALL_NORMS):
        points = _random_points(rng, N, _sample_size(rng, N, 2, 4))
        hull = ball_hull(N, points)
        body = hull.polytope
        tag = f"{N.name} {points}"

        tally.check(polytope_equal(ball_hull(N, body).polytope, body), f"hull not idempotent for {tag}")
        larger = ball_hull(N, points + _random_points(rng, N, 1))
        tally.check(is_subset(body, larger.polytope), f"hull not monotone for {tag}")
        for radius in HULL_OF_BALL_RADII:
            ball = Ball(points[0], radius, N).polytope()
            tally.check(polytope_equal(ball_hull(N, ball).polytope, ball), f"hull of the radius {radius} ball at {points[0]} differs from it")
        circ = circumball(N, points)
        tally.check(circumball(N, body).radius == circ.radius, f"hull changes the circumradius for {tag}")

        centers = hull.center_set.polytope
        for x in _face_samples(centers):
            tally.check(all(N.distance(v, x) <= 1 for v in body.vrep), f"hull leaves the admissible ball at {x} for {tag}")
        for c in _face_samples(circ.center_set):
            tally.check(all(N.distance(v, c) <= circ.radius for v in body.vrep), f"hull leaves the circumball at {c} for {tag}")

        objective = tuple(Frac(int(c)) for c in rng.integers(-3, 4, size=N.dim))
        if any(objective):
            tally.check(lp_solve(objective, body.hrep, lexicographic=False).value == max(dot(objective, v) for v in body.vrep), f"LP and vertex scan disagree for {tag}")

        # ||x - c|| <= 1 for every center vertex c, one bound per functional
        bounds = [(a, 1 + min(dot(a, c) for c in centers.vrep)) for a in N.functionals]
        step = _extent(N) / 2
        for row in rng.integers(-4, 5, size=(MEMBERSHIP_SAMPLES, N.dim)):
            x = tuple(step * int(k) for k in row)
            definitional = all(dot(a, x) <= bound for a, bound in bounds)
            tally.check(hull.contains(x) == definitional, f"hull membership of {x} disagrees with the center set for {tag}")
            sampled += 1
    tally.details["membership_samples"] = sampled
    return tally.report("ball hulls are idempotent, monotone, fix balls and keep the circumradius")


def _upper_bound_triple(N: NormBody) -> Optional[tuple]:
    """First grid triple in the plane with rad = 2/3 diam, if any."""
    grid = [vec(p) for p in product((0, Frac(1, 2), 1), repeat=2)]
    for triple in combinations(grid, 3):
        width = diam(N, triple)
        if width > 0 and circumball(N, triple).radius == Frac(2, 3) * width:
            return triple
    return None


def ineq1a_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("ineq1a")
    for N in _norm_cycle(SMALL_NORMS):
        points = _random_points(rng, N, _sample_size(rng, N, 2, 5))
        width, radius = diam(N, points), circumball(N, points).radius
        n = N.dim
        tally.check(width / 2 <= radius <= Frac(n, n + 1) * width, f"{N.name}: rad {radius} outside the bounds for diam {width}")

    attained = {}
    for N in [make_norm(name) for name in PLANAR_NORMS] + [hexagon_norm()]:
        hit = _upper_bound_triple(N)
        attained[N.name] = [format_vector(p) for p in hit] if hit else None
    tally.details["upper_bound_attained"] = attained
    return tally.report("half the diameter bounds the circumradius below and n/(n+1) of it above")


def lemma2_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("lemma2")
    for N in _norm_cycle(SMALL_NORMS):
        points = _random_points(rng, N, _sample_size(rng, N, 2, 5))
        if len(set(points)) < 2:
            continue
        radius = circumball(N, points).radius
        result = tally.run(f"{N.name} {points}", lambda: circumsphere_restriction(N, points))
        if result is None:
            continue
        tally.check(result.radius == radius, f"{N.name}: points on the circumsphere have rad {result.radius} != {radius}")
        far = N.distance(*result.pair)
        tally.check(far >= Frac(N.dim + 1, N.dim) * radius, f"{N.name}: far pair at {far} too close for rad {radius}")
    return tally.report("points on the circumsphere keep the circumradius and contain a far pair")


def prop1_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("prop1")
    for N in _norm_cycle(SMALL_NORMS):
        body = ball_hull(N, _random_points(rng, N, _sample_size(rng, N, 1, 4))).polytope
        top = body.vrep[-1]
        outside = (top[0] + Frac(1, 4),) + tuple(top[1:])
        label = f"{N.name} body {list(body.vrep)}"
        tally.check(tally.run(label, lambda: supporting_sphere_at(N, body, body.vrep[0])) is not None, f"no supporting sphere for {label}")
        tally.check(tally.run(label, lambda: separate_point(N, body, outside)) is not None, f"no separating sphere for {label}")
        strict = tally.run(label, lambda: separate_point_strict(N, body, outside))
        tally.check(strict is not None and strict.shrink_radius < 1, f"no strict separation for {label}")
    return tally.report("every supporting and separating sphere certificate re-verified exactly")


def prop2_witness_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("prop2-witness")
    for name in ("linf:2", "l1:2", "l1:3"):
        N = make_norm(name)
        x1, x2 = strictness_witness(N)
        tally.check(ball_hull(N, [x1, x2]).polytope.dim_affine < N.dim, f"{name}: strictness witness has a full-dimensional hull")
        tally.check(not has_unique_circumcenter(N, [x1, x2]), f"{name}: witness pair has a unique circumcenter")
        c1, c2 = lens_radius_witness(N)
        overlap = intersect([Ball(c1, Frac(1), N).polytope(), Ball(c2, Frac(1), N).polytope()])
        tally.check(circumball(N, overlap).radius == 1, f"{name}: two distinct unit balls meet in a set of radius below 1")

    pair = [vec(["-1/2", 0]), vec(["1/2", 0])]
    areas: Dict[int, float] = {}
    for m in (2, 3, 6, 12):
        N = make_norm(f"regular:{2 * m}")
        body = ball_hull(N, pair).polytope
        flat_facet = any(a[0] == 0 for a in N.functionals)
        if flat_facet:
            tally.details[f"regular:{2 * m}"] = "degenerate: a facet is parallel to the segment"
            continue
        tally.check(body.dim_affine == 2, f"regular:{2 * m}: spindle is flat")
        areas[m] = float(polygon_area(body))
    gaps = [abs(areas[m] - EUCLIDEAN_SPINDLE_AREA) for m in (2, 6, 12)]
    tally.check(all(a >= b for a, b in zip(gaps, gaps[1:])), f"spindle areas do not approach the Euclidean one: {areas}")
    tally.check(gaps[-1] <= 5e-2, f"finest polygon spindle area {areas[12]:.4f} too far from {EUCLIDEAN_SPINDLE_AREA}")
    tally.details["spindle_areas"] = {f"regular:{2 * m}": round(a, 6) for m, a in areas.items()}
    return tally.report("polyhedral norms are never strictly convex; polygon spindles approach the Euclidean one")


def thm3_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("thm3")
    generated = 0
    for N in _norm_cycle(PLANAR_NORMS):
        body = ball_hull(N, _random_points(rng, N, int(rng.integers(2, 5)))).polytope
        corners = list(body.vrep)
        chosen = [corners[int(i)] for i in rng.choice(len(corners), size=int(rng.integers(1, len(corners) + 1)), replace=False)]
        extras = [midpoint(corners[int(rng.integers(len(corners)))], corners[int(rng.integers(len(corners)))]) for _ in range(int(rng.integers(0, 3)))]
        subset = chosen + extras
        label = f"{N.name} body {corners} S {subset}"
        result = tally.run(label, lambda: generates_hull(N, body, subset))
        if result is not None and result.answer:
            generated += 1
            tally.check(set(b_exposed_points(N, body)) <= set(subset), f"generating set misses a b-exposed point: {label}")

    for name in PLANAR_NORMS:
        N = make_norm(name)
        ball = Ball(vec(["1/4", 0]), Frac(1), N).polytope()
        tally.check(b_exposed_points(N, ball) == [], f"{name}: unit ball has b-exposed points")
    tally.details["generating_instances"] = generated
    return tally.report("direct hull equality and the exposed b-face criterion agree on every instance")


def _complete_ball(rng: np.random.Generator, N: NormBody):
    center = tuple(Frac(int(c), 4) for c in rng.integers(-4, 5, size=N.dim))
    return center, Ball(center, Frac(1, 2), N).polytope()


def prop4_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("prop4")
    linf = make_norm("linf:2")
    square = dd_convert([vec(p) for p in ((0, 0), (1, 0), (0, 1), (1, 1))], 2)
    flat_box = dd_convert([vec(p) for p in ((0, 0), (1, 0), (0, "1/2"), (1, "1/2"))], 2)
    tally.check(is_complete(linf, square), "unit square is not complete")
    tally.check(not is_complete(linf, flat_box), "1 x 1/2 box is complete")
    diagonal = tally.run("diagonal pair", lambda: completion_report(linf, [vec((0, 0)), vec((1, 1))], square))
    tally.check(diagonal is not None and diagonal.unique_completion is not None and polytope_equal(diagonal.unique_completion, square), "diagonal pair does not complete uniquely to the square")
    try:
        completion_report(linf, [vec((0, 0)), vec((1, 1))], flat_box)
        tally.check(False, "flat box accepted as a completion")
    except CNotComplete:
        tally.check(True, "flat box rejected")

    agreeing = 0
    for N in _norm_cycle(PLANAR_NORMS):
        center, C = _complete_ball(rng, N)
        directions = list(N.unit_ball.vrep) + [scale(1 / N.evaluate(a), a) for a in N.functionals]
        half = scale(Frac(1, 2), directions[int(rng.integers(len(directions)))])
        points = [add(center, half), add(center, scale(Frac(-1), half))]
        for _ in range(int(rng.integers(0, 3))):
            u = tuple(Frac(int(c), 8) for c in rng.integers(-4, 5, size=N.dim))
            if N.evaluate(u) <= Frac(1, 2):
                points.append(add(center, u))
        report = tally.run(f"{N.name} C at {center} S {points}", lambda: completion_report(N, points, C))
        if report is None:
            continue
        agreeing += 1
        tally.check(report.criterion_II == report.criterion_III, f"criteria disagree for {points}")
    tally.details["instances"] = agreeing
    return tally.report("unique completion, hull identity and exposed b-face meeting coincide")


def example1_suite(rng: np.random.Generator) -> VerificationReport:
    return verify_octahedral_non_separation()


def example2_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("example2")
    N = make_norm("linf:2")
    square = dd_convert([vec(p) for p in ((0, 0), (1, 0), (0, 1), (1, 1))], 2)
    faces = exposed_b_faces(N, square)
    shapes = sorted(len(f.pieces) for f in faces)
    tally.check(shapes == [1, 1, 1, 1, 2, 2, 2, 2], f"exposed b-faces of the square have piece counts {shapes}")
    tally.check(all(p.dim_affine == 1 for f in faces for p in f.pieces), "an exposed b-face piece is not an edge")
    tally.check(generates_hull(N, square, [vec((0, 0)), vec((1, 1))]).answer, "diagonal pair does not generate the square")
    mids = [vec(p) for p in (("1/2", 0), (0, "1/2"), (1, "1/2"), ("1/2", 1))]
    tally.check(generates_hull(N, square, mids).answer, "edge midpoints do not generate the square")
    edge = generates_hull(N, square, [vec((0, 0)), vec((1, 0))])
    tally.check(not edge.answer and edge.missed_face is not None, "pair on one edge generates the square")

    grid = [vec(p) for p in product((0, Frac(1, 2), 1), repeat=2)]
    minimal = minimal_generating_sets(N, square, grid, max_size=4)
    sizes = sorted({len(s) for s in minimal})
    tally.check(sizes == [2, 3, 4], f"minimal generating set sizes {sizes}")
    tally.details["minimal_sizes"] = sizes
    tally.details["minimal_sets"] = len(minimal)
    return tally.report("the square is generated exactly by sets meeting all four edges")


def example4_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("example4")
    oracle = DimensionFourOracle()
    seed = int(rng.integers(0, 2**31))
    segment = verify_segment_hull(Frac(1, 2), 500, oracle=oracle, seed=seed)
    disc = verify_disc_hull(500, oracle=oracle, seed=seed)
    for sub in (segment, disc):
        tally.checks += sub.checks
        tally.failures.extend(f"{sub.name}: {f}" for f in sub.failures)

    tally.check(oracle.contains((1, 0, 0, 0)), "(1,0,0,0) outside the body")
    tally.check(oracle.contains((1, 0, -1, 0)), "(1,0,-1,0) outside the body")
    tally.check(oracle.membership((1.5, 0, 0, 0)) is Membership.OUT, "(1.5,0,0,0) inside the body")
    for _ in range(50):
        x = rng.uniform(-1, 1, size=4)
        tally.check(oracle.membership(x) == oracle.membership(-x), f"oracle is not symmetric at {x}")
        y = rng.uniform(-1, 1, size=4)
        if oracle.membership(x) is Membership.IN and oracle.membership(y) is Membership.IN:
            tally.check(oracle.membership((x + y) / 2) is not Membership.OUT, f"midpoint of {x} and {y} leaves the body")
    margin = segment.details["exclusion_margin"]
    tally.details["exclusion_margin"] = margin
    tally.check(margin > 0, f"segment hull exclusion margin {margin} is not positive")
    if margin > 0 and not tally.failures:
        conclusion = f"consistent within tolerance: {DIMENSION_HYPOTHESIS_NECESSARY} (four-dimensional counterexample)"
    else:
        conclusion = "inconclusive: the four-dimensional counterexample was not confirmed"
    return tally.report(conclusion, approx=True)


def _tally_repetition(tally: _Tally, result: Optional[SpindleProbeResult], label: str) -> None:
    if result is not None and result.violated:
        tally.check(bool(result.repetition_consistent), f"repeating a witness point changes its hull for {label}")


def spindle_suite(rng: np.random.Generator) -> VerificationReport:
    tally = _Tally("spindle")
    linf = make_norm("linf:2")
    triangle = dd_convert([vec(p) for p in ((0, 0), (1, 0), (0, 1))], 2)
    found = tally.run("triangle", lambda: k_spindle_probe(linf, triangle, 2, budget=50, seed=0))
    tally.check(found is not None and found.violated, "triangle passes the 2-spindle search")
    _tally_repetition(tally, found, "the triangle")

    violations = 0
    for N in _norm_cycle(PLANAR_NORMS)[:SPINDLE_INSTANCES]:
        corners = _random_points(rng, N, 3)
        if len(set(corners)) < 3:
            continue
        label = f"{N.name} hull of {corners}"
        body = tally.run(label, lambda: dd_convert(corners, N.dim))
        if body is None:
            continue
        result = tally.run(label, lambda: k_spindle_probe(N, body, 2, budget=20, seed=0))
        violations += int(result is not None and result.violated)
        _tally_repetition(tally, result, label)

    for N in _norm_cycle(PLANAR_NORMS)[:SPINDLE_INSTANCES]:
        body = ball_hull(N, _random_points(rng, N, int(rng.integers(1, 4)))).polytope
        result = k_spindle_probe(N, body, 0, budget=20, seed=0, shortcut=False)
        tally.check(not result.violated, f"b-convex body {list(body.vrep)} violates spindle convexity")
        _tally_repetition(tally, result, f"b-convex body {list(body.vrep)}")
    tally.details["random_violations"] = violations
    return tally.report("spindle searches find the triangle violation and nothing in b-convex bodies")


SUITES: Dict[str, Callable[[np.random.Generator], VerificationReport]] = {
    "lemma1": lemma1_suite,
    "ineq1a": ineq1a_suite,
    "lemma2": lemma2_suite,
    "prop1": prop1_suite,
    "prop2-witness": prop2_witness_suite,
    "thm3": thm3_suite,
    "prop4": prop4_suite,
    "example1": example1_suite,
    "example2": example2_suite,
    "example4": example4_suite,
    "spindle": spindle_suite,
}


def run_suite(name: str, seed: int = 0) -> List[VerificationReport]:
    """Run one suite, or every suite in name order for "all"."""
    if name == "all":
        return [run_suite(key, seed)[0] for key in sorted(SUITES)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))} or all")
    logger.info(f"running suite {name} (seed {seed})")
    return [SUITES[name](np.random.default_rng(seed))]
