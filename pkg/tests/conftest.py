from typing import Callable

import pytest

from src.geometry import Polytope, dd_convert, vec
from src.norms import NormBody, make_norm


def polytope_of(*points) -> Polytope:
    return dd_convert([vec(p) for p in points], len(points[0]))


@pytest.fixture()
def poly() -> Callable[..., Polytope]:
    return polytope_of


@pytest.fixture()
def linf2() -> NormBody:
    return make_norm("linf:2")


@pytest.fixture()
def l12() -> NormBody:
    return make_norm("l1:2")


@pytest.fixture()
def l13() -> NormBody:
    return make_norm("l1:3")


@pytest.fixture()
def square() -> Polytope:
    return polytope_of((0, 0), (1, 0), (0, 1), (1, 1))


@pytest.fixture()
def triangle() -> Polytope:
    return polytope_of((0, 0), (1, 0), (0, 1))
