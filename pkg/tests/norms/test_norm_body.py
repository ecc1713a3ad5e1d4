import math
from fractions import Fraction as Frac

import pytest
from hypothesis import given, settings

from src.geometry import polytope_equal
from src.geometry.errors import DimensionMismatch, MalformedInput, NotFullDimensional, NotSymmetric, PreconditionError
from src.geometry.rational import add, neg, scale
from src.norms import Ball, NormBody, diam, lens_radius_witness, make_norm, norm_eval, sphere_segment, strictness_witness, unit_ball_for
from tests.strategies import cached_norm, eighths, points, polygon_norm_names


def test_named_norms_evaluate(linf2, l12) -> None:
    assert norm_eval(linf2, (Frac(3), Frac(-4))) == 4
    assert norm_eval(l12, (Frac(3), Frac(-4))) == 7
    assert linf2.distance((Frac(1), Frac(1)), (Frac(0), Frac(0))) == 1
    with pytest.raises(DimensionMismatch):
        linf2.evaluate((Frac(1),))


def test_regular_four_is_the_diamond() -> None:
    assert polytope_equal(unit_ball_for("regular:4"), unit_ball_for("l1:2"))
    octagon = make_norm("regular:8")
    assert len(octagon.unit_ball.vrep) == 8
    assert octagon.name == "regular:8"


@pytest.mark.parametrize("name", ["lp:2", "linf:0", "regular:5", "regular:2", "l1"])
def test_bad_names(name) -> None:
    with pytest.raises(MalformedInput):
        make_norm(name)


def test_custom_body_checks(poly) -> None:
    with pytest.raises(NotSymmetric):
        NormBody.from_polytope(poly((0, 0), (1, 0), (0, 1)))
    with pytest.raises(NotFullDimensional):
        NormBody.from_polytope(poly((-1, 0), (1, 0)))
    hexagon = NormBody.from_polytope(poly((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)), name="hexagon")
    assert hexagon.evaluate((Frac(1), Frac(1))) == 2


def test_diameter(linf2, l12, square) -> None:
    assert diam(linf2, square) == 1
    assert diam(l12, square) == 2
    assert diam(linf2, [(0, 0)]) == 0
    with pytest.raises(PreconditionError):
        diam(linf2, [])


def test_ball_membership(linf2) -> None:
    ball = Ball(center=(Frac(1), Frac(0)), radius=Frac(1, 2), norm=linf2)
    assert ball.contains((Frac(3, 2), Frac(1, 2)))
    assert ball.on_sphere((Frac(3, 2), Frac(1, 2)))
    assert not ball.contains((Frac(2), Frac(0)))
    assert ball.polytope().vrep[0] == (Frac(1, 2), Frac(-1, 2))
    with pytest.raises(PreconditionError):
        Ball(center=(Frac(0), Frac(0)), radius=Frac(-1), norm=linf2)


def test_strictness_witnesses(linf2, l12) -> None:
    assert sphere_segment(linf2) == ((1, 1), (1, -1))
    assert strictness_witness(linf2) == ((0, 1), (0, -1))
    assert strictness_witness(l12) == ((Frac(1, 2), Frac(-1, 2)), (Frac(-1, 2), Frac(1, 2)))
    assert lens_radius_witness(linf2) == ((0, 0), (0, -1))


@settings(max_examples=40, deadline=None)
@given(polygon_norm_names, points(), points(), eighths)
def test_norm_axioms(name, x, y, t) -> None:
    N = cached_norm(name)
    assert N.evaluate(add(x, y)) <= N.evaluate(x) + N.evaluate(y)
    assert N.evaluate(scale(t, x)) == abs(t) * N.evaluate(x)
    assert N.evaluate(neg(x)) == N.evaluate(x)
    wide = scale(Frac(2), x)
    assert N.unit_ball.contains(wide) == (N.evaluate(wide) <= 1)


@settings(max_examples=40, deadline=None)
@given(points())
def test_regular_norms_settle_on_the_circle(x) -> None:
    steps = (2, 3, 6, 12)
    values = [cached_norm(f"regular:{2 * m}").evaluate(x) for m in steps]
    for m, coarse, fine in zip(steps, values, values[1:]):
        assert fine <= coarse + Frac(2, m * m)
    assert abs(float(values[-1]) - math.hypot(*x)) <= 2 / steps[-1] ** 2
