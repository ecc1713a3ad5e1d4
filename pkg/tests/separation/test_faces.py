from fractions import Fraction as Frac

import pytest
from hypothesis import given, settings

from src.ballconv import ball_hull, is_b_bounded
from src.geometry import face_lattice
from src.geometry.errors import NotBBounded, NotBConvex, SNotInK
from src.norms import make_norm
from src.separation import b_exposed_points, exposed_b_faces, generates_hull
from tests.strategies import cached_norm, planar_norm_names, point_sets


def test_square_faces_in_the_max_norm(linf2, square) -> None:
    faces = exposed_b_faces(linf2, square)
    assert len(faces) == 8
    assert sorted(len(f.pieces) for f in faces) == [1, 1, 1, 1, 2, 2, 2, 2]
    assert not any(f.is_singleton for f in faces)
    assert all(len(piece.vrep) == 2 for f in faces for piece in f.pieces)
    assert b_exposed_points(linf2, square) == []


def test_a_point_is_b_exposed(linf2, poly) -> None:
    assert b_exposed_points(linf2, poly((0, 0))) == [(0, 0)]


def test_faces_need_b_convexity(linf2, triangle) -> None:
    with pytest.raises(NotBConvex):
        exposed_b_faces(linf2, triangle)
    with pytest.raises(NotBConvex):
        b_exposed_points(linf2, triangle)


def test_diagonal_generates_the_square(linf2, square) -> None:
    result = generates_hull(linf2, square, [(0, 0), (1, 1)])
    assert result.answer
    assert result.missed_face is None


def test_edge_does_not_generate_the_square(linf2, square) -> None:
    faces = exposed_b_faces(linf2, square)
    result = generates_hull(linf2, square, [(0, 0), (1, 0)], faces=faces)
    assert not result.answer
    assert result.missed_face is not None
    assert not result.missed_face.meets([(0, 0), (1, 0)])


def test_generates_hull_preconditions(linf2, square, poly) -> None:
    with pytest.raises(SNotInK):
        generates_hull(linf2, square, [(0, 0), (2, 2)])
    with pytest.raises(NotBBounded):
        generates_hull(linf2, poly((0, 0), (2, 0), (0, 2), (2, 2)), [(0, 0), (2, 2)])


def test_segment_faces_in_the_max_norm(linf2, poly) -> None:
    segment = poly((Frac(-1, 2), 0), (Frac(1, 2), 0))
    faces = exposed_b_faces(linf2, segment)
    assert len(faces) == 8
    assert sorted(len(f.pieces) for f in faces) == [1, 1, 1, 1, 2, 2, 2, 2]
    assert sum(f.is_singleton for f in faces) == 2
    assert b_exposed_points(linf2, segment) == [(Frac(-1, 2), 0), (Frac(1, 2), 0)]


def test_octahedral_segment_faces_touch_an_endpoint(l13, poly) -> None:
    ends = [(Frac(1, 4), Frac(1, 4), 0), (Frac(-1, 4), Frac(-1, 4), 0)]
    faces = exposed_b_faces(l13, poly(*ends))
    assert len(faces) == 30
    assert all(f.meets(ends) for f in faces)


def test_polygon_spindle_has_two_b_exposed_points() -> None:
    N = make_norm("regular:12")
    spindle = ball_hull(N, [(Frac(-1, 2), 0), (Frac(1, 2), 0)]).polytope
    assert len(b_exposed_points(N, spindle)) == 2


@settings(max_examples=15, deadline=None)
@given(planar_norm_names, point_sets(min_size=1, max_size=4))
def test_exposed_b_faces_cover_the_boundary(name, sample) -> None:
    N = cached_norm(name)
    hull = ball_hull(N, sample)
    if hull.is_whole_space or not is_b_bounded(N, hull.polytope):
        return
    K = hull.polytope
    faces = exposed_b_faces(N, K)
    boundary = [f.sample for f in face_lattice(K) if f.polytope is not K or not K.is_full_dimensional]
    for x in boundary:
        assert any(piece.contains(x) for f in faces for piece in f.pieces), x
