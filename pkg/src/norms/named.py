"""Named unit balls: "linf:n", "l1:n" and "regular:2m"."""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction as Frac
from typing import Union

from src.geometry.errors import MalformedInput
from src.geometry.polytope import dd_convert
from src.geometry.rational import Vector, neg
from src.geometry.types import Polytope
from src.settings import DEFAULT_SETTINGS

from .body import NormBody

_NAME = re.compile(r"^(linf|l1|regular):(\d+)$")


def _cube_vertices(n: int) -> list[Vector]:
    return [tuple(Frac(s) for s in signs) for signs in itertools.product((-1, 1), repeat=n)]


def _cross_vertices(n: int) -> list[Vector]:
    points = []
    for i in range(n):
        for s in (-1, 1):
            points.append(tuple(Frac(s if j == i else 0) for j in range(n)))
    return points


def _regular_vertices(m: int, denominator_bound: int) -> list[Vector]:
    """Vertices at angles k*pi/m, approximated then re-symmetrized."""
    half: list[Vector] = []
    for k in range(m):
        if m == 2:
            half.append((Frac(1 - k), Frac(k)))
            continue
        angle = Frac(k, m)
        theta = math.pi * angle.numerator / angle.denominator
        half.append((Frac(math.cos(theta)).limit_denominator(denominator_bound), Frac(math.sin(theta)).limit_denominator(denominator_bound)))
    return half + [neg(v) for v in half]


def unit_ball_for(name: str, *, denominator_bound: int = DEFAULT_SETTINGS.regular_denominator_bound) -> Polytope:
    match = _NAME.match(name.strip())
    if not match:
        raise MalformedInput(f"unknown norm name {name!r}; expected linf:n, l1:n or regular:2m")
    kind, size = match.group(1), int(match.group(2))
    if size < 1:
        raise MalformedInput("norm dimension must be positive", name=name)
    if kind == "linf":
        return dd_convert(_cube_vertices(size), size)
    if kind == "l1":
        return dd_convert(_cross_vertices(size), size)
    if size % 2 or size < 4:
        raise MalformedInput("regular polygon norms need an even vertex count of at least 4", name=name)
    return dd_convert(_regular_vertices(size // 2, denominator_bound), 2)


def make_norm(spec: Union[str, Polytope], *, denominator_bound: int = DEFAULT_SETTINGS.regular_denominator_bound) -> NormBody:
    if isinstance(spec, Polytope):
        return NormBody.from_polytope(spec)
    return NormBody.from_polytope(unit_ball_for(spec, denominator_bound=denominator_bound), name=spec.strip())
