from fractions import Fraction as Frac

import pytest
from hypothesis import given, settings

from src.geometry import EMPTY, HalfSpace, contains, dd_convert, face_lattice, intersect, is_subset, polygon_area, polytope_equal, ray_max, translate
from src.geometry.errors import DimensionMismatch, EmptyPolytope, MalformedInput, OriginOutside, PreconditionError, Unbounded
from src.geometry.polytope import dilate
from src.geometry.rational import add, centroid, scale
from tests.strategies import point_sets, points


def _h(normal, offset):
    return HalfSpace(tuple(Frac(c) for c in normal), Frac(offset))


def test_square_canonical_form(square) -> None:
    assert square.vrep == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert square.dim_affine == 2
    assert [h.normal for h in square.hrep] == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert [h.offset for h in square.hrep] == [0, 0, 1, 1]


def test_interior_points_are_dropped(poly) -> None:
    P = poly((0, 0), (2, 0), (0, 2), (2, 2), (1, 1), (Frac(1, 2), Frac(3, 2)))
    assert P.vrep == ((0, 0), (0, 2), (2, 0), (2, 2))


def test_halfspaces_and_points_agree(square) -> None:
    from_h = dd_convert([_h((1, 0), 1), _h((-1, 0), 0), _h((0, 2), 2), _h((0, -1), 0), _h((1, 1), 5)], 2)
    assert polytope_equal(from_h, square)
    assert from_h.hrep == square.hrep


def test_flat_polytope_carries_equality_pair(poly) -> None:
    segment = poly((0, 0), (1, 1))
    assert segment.dim_affine == 1
    normals = [h.normal for h in segment.hrep]
    assert (1, -1) in normals and (-1, 1) in normals
    assert segment.contains((Frac(1, 2), Frac(1, 2)))
    assert not segment.contains((Frac(1, 2), 0))


def test_single_point_is_zero_dimensional(poly) -> None:
    P = poly((3, 4))
    assert P.dim_affine == 0
    assert P.vrep == ((3, 4),)


def test_dd_convert_errors() -> None:
    with pytest.raises(EmptyPolytope):
        dd_convert([], 2)
    with pytest.raises(EmptyPolytope):
        dd_convert([_h((1, 0), 0), _h((-1, 0), -1)], 2)
    with pytest.raises(Unbounded):
        dd_convert([_h((1, 0), 1), _h((0, 1), 1)], 2)
    with pytest.raises(DimensionMismatch):
        dd_convert([(0, 0, 0)], 2)
    with pytest.raises(MalformedInput):
        HalfSpace((Frac(0), Frac(0)), Frac(1))


def test_intersect_and_subset(square, triangle) -> None:
    shifted = translate(square, (Frac(1, 2), Frac(1, 2)))
    overlap = intersect([square, shifted])
    assert overlap.vrep == ((Frac(1, 2), Frac(1, 2)), (Frac(1, 2), 1), (1, Frac(1, 2)), (1, 1))
    assert intersect([square, translate(square, (3, 0))]) is EMPTY
    assert is_subset(triangle, square)
    assert not is_subset(square, triangle)
    with pytest.raises(PreconditionError):
        intersect([])


def test_contains_checks_dimension(square) -> None:
    assert contains(square, (1, Frac(1, 2)))
    with pytest.raises(DimensionMismatch):
        contains(square, (0, 0, 0))


def test_dilate(square) -> None:
    assert dilate(square, 2).vrep == ((0, 0), (0, 2), (2, 0), (2, 2))
    assert dilate(square, 0).vrep == ((0, 0),)
    with pytest.raises(PreconditionError):
        dilate(square, -1)


def test_ray_max(square) -> None:
    assert ray_max(square, (0, 0), (2, 1)) == Frac(1, 2)
    assert ray_max(square, (1, 1), (1, 0)) == 0
    with pytest.raises(OriginOutside):
        ray_max(square, (2, 2), (1, 0))
    with pytest.raises(PreconditionError):
        ray_max(square, (0, 0), (0, 0))


def test_face_lattice_counts(square, triangle) -> None:
    faces = face_lattice(square)
    assert len(faces) == 9
    assert [f.dim for f in faces].count(0) == 4
    assert faces[-1].polytope is square
    assert len(face_lattice(triangle)) == 7


def test_polygon_area(square, triangle, poly) -> None:
    assert polygon_area(square) == 1
    assert polygon_area(triangle) == Frac(1, 2)
    assert polygon_area(poly((0, 0), (1, 1))) == 0
    with pytest.raises(DimensionMismatch):
        polygon_area(poly((0, 0, 0), (1, 0, 0)))


def test_ray_max_stops_at_a_corner(poly) -> None:
    box = poly((-1, -1), (-1, 1), (1, -1), (1, 1))
    assert ray_max(box, (-1, 1), (-3, 1)) == 0
    assert ray_max(box, (0, 0), (1, 0)) == 1


def test_segment_from_degenerate_halfspaces(poly) -> None:
    flat = dd_convert([_h((1, 0), 1), _h((-1, 0), 0), _h((0, 1), 0), _h((0, -1), 0)], 2)
    assert polytope_equal(flat, poly((0, 0), (1, 0)))
    assert flat.dim_affine == 1


@settings(max_examples=30, deadline=None)
@given(point_sets(min_size=1, max_size=5), points())
def test_ray_max_is_the_last_point_inside(sample, direction) -> None:
    if not any(direction):
        return
    P = dd_convert(sample, 2)
    origin = centroid(P.vrep)
    reach = ray_max(P, origin, direction)
    assert P.contains(add(origin, scale(reach, direction)))
    assert not P.contains(add(origin, scale(reach + Frac(1, 1000), direction)))


@settings(max_examples=30, deadline=None)
@given(point_sets(min_size=1, max_size=5), point_sets(min_size=1, max_size=5))
def test_intersect_is_commutative_and_idempotent(left, right) -> None:
    P, Q = dd_convert(left, 2), dd_convert(right, 2)
    both, swapped = intersect([P, Q]), intersect([Q, P])
    assert polytope_equal(intersect([P, P]), P)
    if both is EMPTY:
        assert swapped is EMPTY
        return
    assert polytope_equal(both, swapped)
    assert polytope_equal(intersect([both, P]), both)
