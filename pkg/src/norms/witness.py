"""Witnesses that a polyhedral norm is not strictly convex."""

from __future__ import annotations

from fractions import Fraction as Frac
from typing import Tuple

from src.geometry.errors import NoSegmentOnSphere
from src.geometry.rational import Vector, scale, sub, zero

from .body import NormBody


def sphere_segment(N: NormBody) -> Tuple[Vector, Vector]:
    """Two distinct vertices of one facet.

    Facets are scanned from the lexicographically largest functional down,
    not in storage order; the first one with an edge gives its two largest
    vertices.
    """
    for a in sorted(N.functionals, reverse=True):
        vertices = sorted(N.facet_vertices(a), reverse=True)
        if len(vertices) >= 2:
            return vertices[0], vertices[1]
    raise NoSegmentOnSphere("unit sphere contains no segment", dim=N.dim)


def strictness_witness(N: NormBody) -> Tuple[Vector, Vector]:
    """Pair whose ball hull is flat: ((x1 - x2)/2, (x2 - x1)/2).

    x1, x2 come from ``sphere_segment``, so the facet used is the
    lexicographically largest one with an edge.
    """
    x1, x2 = sphere_segment(N)
    half = scale(Frac(1, 2), sub(x1, x2))
    return half, tuple(-c for c in half)


def lens_radius_witness(N: NormBody) -> Tuple[Vector, Vector]:
    """Distinct centers x1, x2 with rad(B(x1,1) ∩ B(x2,1)) = 1.

    With [w1, w2] on the unit sphere, B(o,1) ∩ B((w2 - w1)/2, 1) holds both
    w2 and -w1, which are at distance 2.
    """
    w1, w2 = sphere_segment(N)
    return zero(N.dim), scale(Frac(1, 2), sub(w2, w1))
