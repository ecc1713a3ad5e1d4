"""Polytope construction and elementary predicates.

Canonical form: vertices sorted lexicographically; each halfspace scaled so
the first nonzero normal coordinate is +1 or -1; halfspaces sorted; flat
polytopes carry their affine hull as opposite halfspace pairs whose normals
form a canonical basis of the orthogonal complement of the direction space.
"""

from __future__ import annotations

import logging
from fractions import Fraction as Frac
from functools import cmp_to_key
from typing import Dict, List, Sequence, Tuple, Union

from .dd import cone_generators
from .errors import DimensionMismatch, EmptyPolytope, MalformedInput, OriginOutside, PreconditionError, Unbounded
from .linalg import null_space, rank, row_space_basis
from .rational import Vector, add, centroid, check_dim, dot, first_nonzero, scale, sub
from .types import EMPTY, Face, HalfSpace, Polytope, PolytopeOrEmpty

logger = logging.getLogger(__name__)


def _normalized(h: HalfSpace) -> HalfSpace:
    lead = abs(first_nonzero(h.normal))
    return HalfSpace(tuple(c / lead for c in h.normal), h.offset / lead)


def _tightest(halfspaces: Sequence[HalfSpace]) -> List[HalfSpace]:
    """Normalize and keep the smallest offset per normal direction."""
    best: Dict[Vector, Frac] = {}
    for h in halfspaces:
        g = _normalized(h)
        if g.normal not in best or g.offset < best[g.normal]:
            best[g.normal] = g.offset
    return [HalfSpace(normal, offset) for normal, offset in sorted(best.items())]


def _vertices_from_halfspaces(halfspaces: Sequence[HalfSpace], dim: int) -> List[Vector]:
    # homogenized cone over (t, x): b t - <a, x> >= 0 and t >= 0
    constraints: List[Vector] = [tuple(Frac(int(j == 0)) for j in range(dim + 1))]
    constraints += [(h.offset,) + tuple(-a for a in h.normal) for h in halfspaces]
    lineality, rays = cone_generators(constraints, dim + 1)
    finite = [r for r in rays if r[0] > 0]
    if not finite:
        raise EmptyPolytope("halfspace system is infeasible", constraints=len(halfspaces))
    if lineality or any(r[0] == 0 for r in rays):
        raise Unbounded("halfspace system defines an unbounded set", constraints=len(halfspaces))
    return sorted({tuple(c / r[0] for c in r[1:]) for r in finite})


def _from_points(points: Sequence[Vector], dim: int) -> Polytope:
    unique = sorted(set(points))
    base = unique[0]
    directions = row_space_basis([sub(p, base) for p in unique[1:]])
    d = len(directions)
    equalities: List[HalfSpace] = []
    for e in null_space(directions, dim) if d < dim else []:
        offset = dot(e, base)
        equalities.append(HalfSpace(e, offset))
        equalities.append(HalfSpace(tuple(-c for c in e), -offset))

    if d == 0:
        hrep = sorted(_normalized(h) for h in equalities)
        return Polytope(hrep=tuple(hrep), vrep=(base,), dim_ambient=dim, dim_affine=0)

    # valid inequalities (b, c) with a = sum c_k D_k: b - <a, v> >= 0 for every point v
    constraints = [(Frac(1),) + tuple(-dot(D, p) for D in directions) for p in unique]
    lineality, rays = cone_generators(constraints, d + 1)
    if lineality:
        raise EmptyPolytope("degenerate point configuration", points=len(unique))
    facets: List[HalfSpace] = []
    for r in rays:
        normal = tuple(sum((c * D[i] for c, D in zip(r[1:], directions)), Frac(0)) for i in range(dim))
        if all(x == 0 for x in normal):
            continue
        facets.append(_normalized(HalfSpace(normal, r[0])))

    vertices = [p for p in unique if rank([f.normal for f in facets if f.is_tight(p)]) == d]
    hrep = sorted(set(facets) | {_normalized(h) for h in equalities})
    return Polytope(hrep=tuple(hrep), vrep=tuple(sorted(vertices)), dim_ambient=dim, dim_affine=d)


def dd_convert(data: Sequence[Union[HalfSpace, Vector]], dim: int) -> Polytope:
    """Canonical polytope from an H-representation or from a finite point set."""
    items = list(data)
    if not items:
        raise EmptyPolytope("no points given")
    if isinstance(items[0], HalfSpace):
        for h in items:
            if not isinstance(h, HalfSpace):
                raise MalformedInput("mixed halfspaces and points")
            check_dim(h.normal, dim)
        vertices = _vertices_from_halfspaces(_tightest(items), dim)
        return _from_points(vertices, dim)
    for p in items:
        if isinstance(p, HalfSpace):
            raise MalformedInput("mixed halfspaces and points")
        check_dim(p, dim)
    return _from_points([tuple(p) for p in items], dim)


def polytope_equal(P: Polytope, Q: Polytope) -> bool:
    if P.dim_ambient != Q.dim_ambient:
        raise DimensionMismatch("polytopes live in different spaces", left=P.dim_ambient, right=Q.dim_ambient)
    return P.vrep == Q.vrep


def intersect(polytopes: Sequence[Polytope]) -> PolytopeOrEmpty:
    if not polytopes:
        raise PreconditionError("intersection of an empty family is not a polytope")
    dim = polytopes[0].dim_ambient
    for P in polytopes:
        if P.dim_ambient != dim:
            raise DimensionMismatch("polytopes live in different spaces", left=dim, right=P.dim_ambient)
    if len(polytopes) == 1:
        return polytopes[0]
    try:
        return dd_convert([h for P in polytopes for h in P.hrep], dim)
    except EmptyPolytope:
        return EMPTY


def contains(P: Polytope, x: Vector) -> bool:
    check_dim(x, P.dim_ambient)
    return P.contains(x)


def is_subset(P: Polytope, Q: Polytope) -> bool:
    if P.dim_ambient != Q.dim_ambient:
        raise DimensionMismatch("polytopes live in different spaces", left=P.dim_ambient, right=Q.dim_ambient)
    return all(Q.contains(v) for v in P.vrep)


def translate(P: Polytope, t: Vector) -> Polytope:
    check_dim(t, P.dim_ambient)
    hrep = sorted(HalfSpace(h.normal, h.offset + dot(h.normal, t)) for h in P.hrep)
    vrep = sorted(add(v, t) for v in P.vrep)
    return Polytope(hrep=tuple(hrep), vrep=tuple(vrep), dim_ambient=P.dim_ambient, dim_affine=P.dim_affine)


def dilate(P: Polytope, r: Frac) -> Polytope:
    """The image r·P for r >= 0."""
    r = Frac(r)
    if r < 0:
        raise PreconditionError("dilation factor must be non-negative", factor=r)
    if r == 0:
        return dd_convert([tuple(Frac(0) for _ in range(P.dim_ambient))], P.dim_ambient)
    hrep = sorted(HalfSpace(h.normal, h.offset * r) for h in P.hrep)
    vrep = sorted(scale(r, v) for v in P.vrep)
    return Polytope(hrep=tuple(hrep), vrep=tuple(vrep), dim_ambient=P.dim_ambient, dim_affine=P.dim_affine)


def ray_max(P: Polytope, origin: Vector, direction: Vector) -> Frac:
    """Largest lambda >= 0 with origin + lambda*direction in P."""
    check_dim(origin, P.dim_ambient)
    check_dim(direction, P.dim_ambient)
    if all(c == 0 for c in direction):
        raise PreconditionError("ray direction must be nonzero")
    if not P.contains(origin):
        raise OriginOutside("ray origin is not in the polytope", origin=origin)
    bound = None
    for h in P.hrep:
        rate = dot(h.normal, direction)
        if rate > 0:
            limit = (h.offset - dot(h.normal, origin)) / rate
            if bound is None or limit < bound:
                bound = limit
    if bound is None:
        raise Unbounded("ray never leaves the polytope")
    return bound


def vertex_min(P: Polytope, objective: Vector) -> Tuple[Frac, Vector]:
    """Minimum of <objective, x> over P and its lexicographically smallest minimizer."""
    check_dim(objective, P.dim_ambient)
    low = min(dot(objective, v) for v in P.vrep)
    return low, next(v for v in P.vrep if dot(objective, v) == low)


def face_lattice(P: Polytope) -> List[Face]:
    """All non-empty faces, P included, sorted by dimension then vertex list."""
    tight_sets = [frozenset(i for i, v in enumerate(P.vrep) if h.is_tight(v)) for h in P.hrep]
    full = frozenset(range(len(P.vrep)))
    found = {full}
    frontier = [full]
    while frontier:
        current = frontier.pop()
        for tight in tight_sets:
            child = current & tight
            if child and child not in found:
                found.add(child)
                frontier.append(child)

    faces: List[Face] = []
    for index_set in found:
        points = [P.vrep[i] for i in sorted(index_set)]
        active = frozenset(j for j, tight in enumerate(tight_sets) if index_set <= tight)
        face = P if index_set == full else dd_convert(points, P.dim_ambient)
        faces.append(Face(active=active, polytope=face, sample=centroid(points)))
    faces.sort(key=lambda f: (f.dim, f.polytope.vrep))
    return faces


def cycle_order(points: Sequence[Vector]) -> List[Vector]:
    center = centroid(points)

    def half(p: Vector) -> int:
        dx, dy = p[0] - center[0], p[1] - center[1]
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def compare(p: Vector, q: Vector) -> int:
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        cross = (p[0] - center[0]) * (q[1] - center[1]) - (p[1] - center[1]) * (q[0] - center[0])
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(points, key=cmp_to_key(compare))


def polygon_area(P: Polytope) -> Frac:
    """Exact area of a planar polytope (zero when flat)."""
    if P.dim_ambient != 2:
        raise DimensionMismatch("area is defined for planar polytopes", dim=P.dim_ambient)
    if P.dim_affine < 2:
        return Frac(0)
    cycle = cycle_order(P.vrep)
    twice = Frac(0)
    for p, q in zip(cycle, cycle[1:] + cycle[:1]):
        twice += p[0] * q[1] - q[0] * p[1]
    return abs(twice) / 2
