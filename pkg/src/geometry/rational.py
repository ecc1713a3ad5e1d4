"""Exact scalars and vectors.

Scalars are ``fractions.Fraction``; vectors are plain tuples of them so they
hash, compare lexicographically and stay immutable.
"""

from __future__ import annotations

from fractions import Fraction as Frac
from math import gcd
from typing import Iterable, Sequence, Tuple, Union

from .errors import DimensionMismatch, MalformedInput

Vector = Tuple[Frac, ...]
RationalLike = Union[Frac, int, str]


def to_rational(value: RationalLike) -> Frac:
    """Parse ints, Fractions and "p/q" strings. Floats are rejected."""
    if isinstance(value, bool) or isinstance(value, float):
        raise MalformedInput("floats are not accepted as exact rationals", value=value)
    if isinstance(value, Frac):
        return value
    if isinstance(value, int):
        return Frac(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Frac(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInput(f"not a rational: {value!r}") from exc
    raise MalformedInput(f"unsupported scalar type {type(value).__name__}", value=value)


def format_rational(value: Frac) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vec(values: Iterable[RationalLike]) -> Vector:
    return tuple(to_rational(v) for v in values)


def format_vector(v: Sequence[Frac]) -> list[str]:
    return [format_rational(c) for c in v]


def parse_point(text: str) -> Vector:
    """Parse "p/q,p/q,..." as used on the command line."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise MalformedInput("empty point literal")
    return vec(parts)


def check_dim(v: Sequence[Frac], dim: int) -> None:
    if len(v) != dim:
        raise DimensionMismatch(f"expected a vector of length {dim}", got=len(v))


def zero(dim: int) -> Vector:
    return tuple(Frac(0) for _ in range(dim))


def dot(a: Sequence[Frac], b: Sequence[Frac]) -> Frac:
    if len(a) != len(b):
        raise DimensionMismatch("dot product of vectors of different length", left=len(a), right=len(b))
    return sum((x * y for x, y in zip(a, b)), Frac(0))


def add(a: Sequence[Frac], b: Sequence[Frac]) -> Vector:
    if len(a) != len(b):
        raise DimensionMismatch("sum of vectors of different length", left=len(a), right=len(b))
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[Frac], b: Sequence[Frac]) -> Vector:
    if len(a) != len(b):
        raise DimensionMismatch("difference of vectors of different length", left=len(a), right=len(b))
    return tuple(x - y for x, y in zip(a, b))


def scale(c: Frac, a: Sequence[Frac]) -> Vector:
    return tuple(c * x for x in a)


def neg(a: Sequence[Frac]) -> Vector:
    return tuple(-x for x in a)


def midpoint(a: Sequence[Frac], b: Sequence[Frac]) -> Vector:
    return tuple((x + y) / 2 for x, y in zip(a, b))


def centroid(points: Sequence[Sequence[Frac]]) -> Vector:
    count = len(points)
    dim = len(points[0])
    return tuple(sum((p[i] for p in points), Frac(0)) / count for i in range(dim))


def primitive(a: Sequence[Frac]) -> Vector:
    """Scale a nonzero vector to coprime integer coordinates (sign kept)."""
    denominators = 1
    for x in a:
        denominators = denominators * x.denominator // gcd(denominators, x.denominator)
    ints = [int(x * denominators) for x in a]
    common = 0
    for i in ints:
        common = gcd(common, abs(i))
    if common == 0:
        return tuple(Frac(0) for _ in a)
    return tuple(Frac(i // common) for i in ints)


def first_nonzero(a: Sequence[Frac]) -> Frac:
    for x in a:
        if x != 0:
            return x
    return Frac(0)
