"""Double description method for polyhedral cones.

``cone_generators`` turns { z : <h, z> >= 0 for every h } into a lineality
basis plus a minimal set of extreme rays. Constraints are added one at a
time starting from the whole space; adjacency uses the algebraic rank test.
"""

from __future__ import annotations

import logging
from fractions import Fraction as Frac
from typing import List, Sequence, Tuple

from .linalg import rank
from .rational import Vector, dot, neg, primitive, scale, sub

logger = logging.getLogger(__name__)


def _zero_set(ray: Vector, processed: Sequence[Vector]) -> frozenset[int]:
    return frozenset(j for j, h in enumerate(processed) if dot(h, ray) == 0)


def _adjacent(common: frozenset[int], processed: Sequence[Vector], dim: int, lineality_dim: int) -> bool:
    needed = dim - lineality_dim - 2
    if len(common) < needed:
        return False
    return rank([processed[j] for j in sorted(common)]) == needed


def cone_generators(constraints: Sequence[Vector], dim: int) -> Tuple[List[Vector], List[Vector]]:
    """Return (lineality basis, extreme rays) of the cone { z : <h, z> >= 0 }."""
    lineality: List[Vector] = [tuple(Frac(int(i == j)) for j in range(dim)) for i in range(dim)]
    rays: List[Vector] = []
    processed: List[Vector] = []

    for h in constraints:
        pick = next((i for i, l in enumerate(lineality) if dot(h, l) != 0), None)
        if pick is not None:
            line = lineality.pop(pick)
            hl = dot(h, line)
            if hl < 0:
                line, hl = neg(line), -hl
            lineality = [primitive(sub(m, scale(dot(h, m) / hl, line))) for m in lineality]
            rays = [primitive(sub(r, scale(dot(h, r) / hl, line))) for r in rays]
            rays.append(primitive(line))
            processed.append(h)
            continue

        values = [dot(h, r) for r in rays]
        positive = [r for r, v in zip(rays, values) if v > 0]
        negative = [(r, v) for r, v in zip(rays, values) if v < 0]
        kept = [r for r, v in zip(rays, values) if v >= 0]
        zeros = {r: _zero_set(r, processed) for r in positive + [q for q, _ in negative]}
        created: List[Vector] = []
        for p in positive:
            hp = dot(h, p)
            for q, hq in negative:
                if _adjacent(zeros[p] & zeros[q], processed, dim, len(lineality)):
                    created.append(primitive(sub(scale(hp, q), scale(hq, p))))
        rays = kept + created
        processed.append(h)

    logger.debug(f"double description: {len(constraints)} constraints, {len(lineality)} lines, {len(rays)} rays")
    return lineality, rays
