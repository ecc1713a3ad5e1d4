"""Hypothesis strategies for small rational point sets."""

from fractions import Fraction as Frac
from functools import lru_cache

from hypothesis import strategies as st

from src.norms import NormBody, make_norm

eighths = st.integers(min_value=-4, max_value=4).map(lambda k: Frac(k, 8))


@st.composite
def points(draw, dim: int = 2):
    return tuple(draw(eighths) for _ in range(dim))


@st.composite
def point_sets(draw, dim: int = 2, min_size: int = 1, max_size: int = 4):
    size = draw(st.integers(min_value=min_size, max_value=max_size))
    return [draw(points(dim)) for _ in range(size)]


@st.composite
def nested_boxes(draw):
    """Corner lists of two axis boxes, the first inside the second."""
    lo = [draw(st.integers(min_value=-4, max_value=0)) for _ in range(2)]
    hi = [draw(st.integers(min_value=0, max_value=4)) for _ in range(2)]
    grow = [draw(st.integers(min_value=0, max_value=2)) for _ in range(4)]

    def corners(low, high):
        return [(Frac(x, 8), Frac(y, 8)) for x in (low[0], high[0]) for y in (low[1], high[1])]

    inner = corners(lo, hi)
    outer = corners([lo[0] - grow[0], lo[1] - grow[1]], [hi[0] + grow[2], hi[1] + grow[3]])
    return inner, outer


planar_norm_names = st.sampled_from(["linf:2", "l1:2"])
polygon_norm_names = st.sampled_from(["linf:2", "l1:2", "regular:6", "regular:12"])


@lru_cache(maxsize=None)
def cached_norm(name: str) -> NormBody:
    return make_norm(name)
