from fractions import Fraction as Frac

import pytest

from src.geometry.errors import CertificateInvalid, PreconditionError
from src.spindle import ProbeStatus, SpindleProbeResult, k_spindle_probe, spindle


def test_spindles_in_the_max_norm(linf2, square) -> None:
    assert spindle(linf2, (0, 0), (1, 1)).polytope == square
    assert spindle(linf2, (Frac(-1, 2), 0), (Frac(1, 2), 0)).polytope.dim_affine == 1
    assert spindle(linf2, (1, 1), (1, 1)).polytope.vrep == ((1, 1),)
    assert spindle(linf2, (0, 0), (3, 0)).is_whole_space


def test_b_convex_body_short_circuits(linf2, square) -> None:
    result = k_spindle_probe(linf2, square, 2, 50)
    assert result.status is ProbeStatus.NO_VIOLATION_FOUND
    assert result.trials == 0
    assert result.to_dict() == {"status": "no_violation_found", "k": 2, "trials": 0}


def test_search_spends_its_budget(linf2, square) -> None:
    result = k_spindle_probe(linf2, square, 2, 30, shortcut=False)
    assert not result.violated
    assert result.trials == 30


def test_triangle_violates_two_spindle_convexity(linf2, triangle) -> None:
    result = k_spindle_probe(linf2, triangle, 2, 50)
    assert result.violated
    assert result.trials == 3
    assert result.witness_points == ((0, 1), (1, 0))
    assert result.witness_outside == (1, 1)
    assert result.repetition_consistent
    assert result.to_dict()["witness_outside"] == ["1", "1"]


def test_all_sizes_mode_finds_the_pair(linf2, triangle) -> None:
    result = k_spindle_probe(linf2, triangle, 0, 50)
    assert result.violated
    assert len(result.witness_points) == 2


def test_seed_makes_the_search_repeatable(l12, poly) -> None:
    body = poly((0, 0), (2, 0), (0, 1), (2, 1))
    first = k_spindle_probe(l12, body, 3, 40, seed=7, shortcut=False)
    second = k_spindle_probe(l12, body, 3, 40, seed=7, shortcut=False)
    assert first == second


@pytest.mark.parametrize("k, budget", [(1, 10), (-2, 10), (2, 0)])
def test_probe_preconditions(linf2, square, k, budget) -> None:
    with pytest.raises(PreconditionError):
        k_spindle_probe(linf2, square, k, budget)


def test_violation_is_verified_on_construction(linf2, triangle) -> None:
    with pytest.raises(CertificateInvalid):
        SpindleProbeResult(
            status=ProbeStatus.VIOLATED,
            trials=1,
            k=2,
            witness_points=((0, 0), (1, 0)),
            witness_outside=(Frac(1, 4), Frac(1, 4)),
            norm=linf2,
            body=triangle,
        )
