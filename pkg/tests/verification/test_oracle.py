from fractions import Fraction as Frac

import pytest

from src.verification import DimensionFourOracle, Membership, verify_disc_hull, verify_segment_hull


@pytest.fixture()
def oracle():
    return DimensionFourOracle()


@pytest.mark.parametrize(
    "point, expected",
    [
        ((0, 0, 0, 0), Membership.IN),
        ((0.5, 0, 0, 0), Membership.IN),
        ((0, 0.5, 0, 0), Membership.IN),
        ((1, 0, 0, 0), Membership.BOUNDARY),
        ((-1, 0, 0, 0), Membership.BOUNDARY),
        ((1, 0, -1, 0), Membership.BOUNDARY),
        ((1.5, 0, 0, 0), Membership.OUT),
        ((0, 2, 0, 0), Membership.OUT),
    ],
)
def test_membership(oracle, point, expected) -> None:
    assert oracle.membership(point) is expected


def test_membership_is_symmetric(oracle) -> None:
    for point in [(0.3, -0.2, 0.6, 0.1), (0.9, 0.1, 0.0, -0.4)]:
        assert oracle.membership(point) is oracle.membership([-c for c in point])


def test_shifted_balls(oracle) -> None:
    assert oracle.in_ball((-1, 0, 0, 0), (0.1, 0, 0, 0)) is Membership.OUT
    assert oracle.contains((1, 0, -1, 0))
    with pytest.raises(ValueError):
        oracle.membership((1, 0, 0))


def test_segment_hull_report() -> None:
    report = verify_segment_hull(Frac(1, 2), 100)
    assert report.passed, report.failures
    assert report.approx
    assert report.details["exclusion_margin"] > 0
    with pytest.raises(ValueError):
        verify_segment_hull(Frac(1), 10)


def test_disc_hull_report() -> None:
    report = verify_disc_hull(100)
    assert report.passed, report.failures
    assert report.checks == 209
    with pytest.raises(ValueError):
        verify_disc_hull(0)
