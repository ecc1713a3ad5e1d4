from fractions import Fraction as Frac

import pytest

from src.completeness import completion_report, is_complete, minimal_generating_sets
from src.geometry import polytope_equal, translate
from src.geometry.errors import CNotComplete, DiameterNotOne, KNotInC

GRID = [(Frac(i, 2), Frac(j, 2)) for i in range(3) for j in range(3)]


def test_square_is_complete(linf2, square, poly) -> None:
    assert is_complete(linf2, square)
    assert not is_complete(linf2, poly((0, 0), (1, 0), (0, Frac(1, 2)), (1, Frac(1, 2))))
    with pytest.raises(DiameterNotOne):
        is_complete(linf2, poly((0, 0), (2, 0), (0, 2), (2, 2)))


def test_diagonal_has_a_unique_completion(linf2, square) -> None:
    report = completion_report(linf2, [(0, 0), (1, 1)], square)
    assert report.input_diam == 1
    assert report.is_complete_hull
    assert polytope_equal(report.unique_completion, square)
    assert report.criterion_I and report.criterion_II and report.criterion_III
    assert report.to_dict()["unique_completion"] == [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]


def test_edge_is_not_completed_by_its_hull(linf2, square) -> None:
    report = completion_report(linf2, [(0, 0), (1, 0)], square)
    assert not report.is_complete_hull
    assert report.unique_completion is None
    assert report.hull.vrep == ((0, 0), (1, 0))
    assert report.criterion_I is False
    assert report.criterion_III is False


def test_report_without_candidate_skips_criteria(linf2) -> None:
    report = completion_report(linf2, [(0, 0), (1, 1)])
    assert report.criterion_II is None
    assert report.is_complete_hull


def test_completion_preconditions(linf2, square, poly) -> None:
    with pytest.raises(DiameterNotOne):
        completion_report(linf2, [(0, 0), (2, 0)], square)
    with pytest.raises(CNotComplete):
        completion_report(linf2, [(0, 0), (1, 0)], poly((0, 0), (1, 0), (0, Frac(1, 2)), (1, Frac(1, 2))))
    with pytest.raises(KNotInC):
        completion_report(linf2, [(0, 0), (1, 1)], translate(square, (Frac(1, 2), Frac(0))))


def test_minimal_generating_sets_of_the_square(linf2, square) -> None:
    found = minimal_generating_sets(linf2, square, GRID)
    assert {len(s) for s in found} == {2, 3, 4}
    assert ((0, 0), (1, 1)) in found
    assert ((0, 1), (1, 0)) in found
    midpoints = ((0, Frac(1, 2)), (Frac(1, 2), 0), (Frac(1, 2), 1), (1, Frac(1, 2)))
    assert midpoints in found
    for small in found:
        for large in found:
            assert small == large or not set(small) < set(large)
