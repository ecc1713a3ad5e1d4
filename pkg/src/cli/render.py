"""SVG scenes of planar instances."""

from __future__ import annotations

import logging
from fractions import Fraction as Frac
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon as PolygonPatch  # noqa: E402

from src.ballconv.hull import ball_hull  # noqa: E402
from src.geometry.errors import MalformedInput  # noqa: E402
from src.geometry.polytope import cycle_order  # noqa: E402
from src.geometry.rational import Vector  # noqa: E402
from src.geometry.types import Polytope  # noqa: E402
from src.settings import DEFAULT_SETTINGS, LabSettings  # noqa: E402

from .instance import InstanceFile  # noqa: E402

logger = logging.getLogger(__name__)

PALETTE = {
    "unit_ball": ("#9e9e9e", "none"),
    "center_set": ("#1565c0", "#90caf9"),
    "hull": ("#2e7d32", "#a5d6a7"),
    "body": ("#6a1b9a", "none"),
    "points": ("#c62828", "#c62828"),
}


def _xy(v: Sequence[Frac]) -> tuple[float, float]:
    return round(float(v[0]), 6), round(float(v[1]), 6)


def _outline(P: Polytope) -> list[tuple[float, float]]:
    corners: list[Vector] = list(P.vrep) if P.dim_affine < 2 else cycle_order(P.vrep)
    return [_xy(v) for v in corners]


def _draw(ax, P: Polytope, layer: str, label: str) -> None:
    edge, face = PALETTE[layer]
    outline = _outline(P)
    if len(outline) == 1:
        ax.plot(*outline[0], marker="o", color=edge, label=label)
    elif len(outline) == 2:
        ax.plot([p[0] for p in outline], [p[1] for p in outline], color=edge, linewidth=2, label=label)
    else:
        ax.add_patch(PolygonPatch(outline, closed=True, edgecolor=edge, facecolor=face, alpha=0.6, label=label))


def render_scene(instance: InstanceFile, out_path: Path, settings: LabSettings = DEFAULT_SETTINGS) -> Path:
    if instance.dim != 2:
        raise MalformedInput("render requires dim 2", dim=instance.dim)
    N = instance.norm_body(settings)
    fig, ax = plt.subplots(figsize=(6, 6))
    _draw(ax, N.unit_ball, "unit_ball", f"unit ball ({N.name})")

    for name, spec in sorted((instance.polytopes or {}).items()):
        _draw(ax, spec.polytope(instance.dim), "body", name)

    if instance.points:
        points = instance.point_vectors()
        hull = ball_hull(N, points)
        if not hull.center_set.is_empty:
            _draw(ax, hull.center_set.polytope, "center_set", "center set")
        if not hull.is_whole_space:
            _draw(ax, hull.polytope, "hull", "ball hull")
        edge, _ = PALETTE["points"]
        ax.scatter([_xy(p)[0] for p in points], [_xy(p)[1] for p in points], color=edge, zorder=5, label="points")

    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.grid(True, alpha=0.3)
    ax.legend(loc="upper right", fontsize="small")
    out_path = Path(out_path)
    fig.savefig(out_path, format="svg")
    plt.close(fig)
    logger.info(f"wrote {out_path}")
    return out_path
