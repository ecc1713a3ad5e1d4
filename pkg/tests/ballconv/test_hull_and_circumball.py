from fractions import Fraction as Frac

import pytest
from hypothesis import given, settings

from src.ballconv import ball_hull, center_set, circumball, circumsphere_restriction, generator_points, has_unique_circumcenter, is_b_bounded, is_b_convex
from src.geometry import is_subset, polytope_equal
from src.geometry.errors import DegenerateSingleton, PreconditionError
from src.norms import make_norm
from tests.strategies import cached_norm, nested_boxes, planar_norm_names, point_sets


def test_diagonal_pair_spans_the_square(linf2, square) -> None:
    hull = ball_hull(linf2, [(0, 0), (1, 1)])
    assert polytope_equal(hull.polytope, square)
    assert hull.center_set.polytope.vrep == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_strictness_witness_hull_is_flat(linf2) -> None:
    hull = ball_hull(linf2, [(Frac(-1, 2), 0), (Frac(1, 2), 0)])
    assert hull.polytope.vrep == ((Frac(-1, 2), 0), (Frac(1, 2), 0))
    assert hull.polytope.dim_affine == 1


def test_far_points_give_the_whole_space(linf2) -> None:
    hull = ball_hull(linf2, [(0, 0), (3, 0)])
    assert hull.is_whole_space
    assert hull.center_set.is_empty
    assert hull.contains((Frac(100), Frac(-7)))
    assert hull.to_dict()["hull"] == {"whole_space": True}


def test_single_point_is_its_own_hull(linf2) -> None:
    hull = ball_hull(linf2, [(2, 3)])
    assert hull.polytope.vrep == ((2, 3),)


def test_generator_points_dedupe_and_reject_empty(linf2) -> None:
    assert generator_points(linf2, [(1, 0), (0, 0), (1, 0)]) == ((0, 0), (1, 0))
    with pytest.raises(PreconditionError):
        generator_points(linf2, [])


def test_b_convexity(linf2, l12, square, triangle) -> None:
    assert is_b_convex(linf2, square)
    assert not is_b_convex(linf2, triangle)
    assert polytope_equal(ball_hull(linf2, triangle).polytope, square)
    assert not is_b_convex(l12, square)


def test_center_set_membership(linf2) -> None:
    centers = center_set(linf2, [(0, 0), (1, 1)])
    assert centers.contains((Frac(1, 2), Frac(1, 2)))
    assert not centers.contains((Frac(3, 2), 0))


def test_circumball_of_square(linf2, square) -> None:
    result = circumball(linf2, square)
    assert result.radius == Frac(1, 2)
    assert result.witness_center == (Frac(1, 2), Frac(1, 2))
    assert has_unique_circumcenter(linf2, square)
    assert is_b_bounded(linf2, square)


def test_circumcenters_of_a_segment(linf2) -> None:
    pair = [(Frac(-1, 2), 0), (Frac(1, 2), 0)]
    result = circumball(linf2, pair)
    assert result.radius == Frac(1, 2)
    assert result.center_set.vrep == ((0, Frac(-1, 2)), (0, Frac(1, 2)))
    assert result.witness_center == (0, Frac(-1, 2))
    assert not has_unique_circumcenter(linf2, pair)


def test_b_boundedness_is_strict(linf2) -> None:
    assert not is_b_bounded(linf2, [(0, 0), (2, 0)])
    assert circumball(linf2, [(4, 4)]).radius == 0


def test_circumsphere_restriction(linf2, square) -> None:
    result = circumsphere_restriction(linf2, square)
    assert result.radius == Frac(1, 2)
    assert linf2.distance(*result.pair) >= Frac(3, 4)
    with pytest.raises(DegenerateSingleton) as info:
        circumsphere_restriction(linf2, [(1, 1)])
    assert info.value.radius == 0


@settings(max_examples=25, deadline=None)
@given(planar_norm_names, point_sets(min_size=1, max_size=4))
def test_ball_hull_is_idempotent(name, sample) -> None:
    N = make_norm(name)
    hull = ball_hull(N, sample)
    assert all(hull.contains(p) for p in sample)
    if hull.is_whole_space:
        return
    again = ball_hull(N, hull.polytope)
    assert polytope_equal(again.polytope, hull.polytope)
    assert is_b_convex(N, hull.polytope)


def _hull_within(small, large) -> bool:
    if large.is_whole_space:
        return True
    return not small.is_whole_space and is_subset(small.polytope, large.polytope)


@settings(max_examples=25, deadline=None)
@given(planar_norm_names, nested_boxes())
def test_hulls_of_nested_boxes_are_nested(name, boxes) -> None:
    N = cached_norm(name)
    inner, outer = boxes
    assert _hull_within(ball_hull(N, inner), ball_hull(N, outer))


@settings(max_examples=25, deadline=None)
@given(planar_norm_names, point_sets(min_size=2, max_size=5))
def test_hulls_grow_along_a_subset_chain(name, sample) -> None:
    N = cached_norm(name)
    hulls = [ball_hull(N, sample[:k]) for k in range(1, len(sample) + 1)]
    assert all(_hull_within(a, b) for a, b in zip(hulls, hulls[1:]))


def test_witness_center_is_the_smallest_circumcenter(linf2) -> None:
    sample = [(0, 0), (1, 0), (Frac(1, 2), Frac(1, 4))]
    result = circumball(linf2, sample)
    assert result.radius == Frac(1, 2)
    assert result.witness_center == min(result.center_set.vrep)
    assert all(linf2.distance(s, result.witness_center) <= result.radius for s in sample)
