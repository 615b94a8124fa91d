import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import PathPatch, Rectangle  # noqa: E402
from matplotlib.path import Path as MplPath  # noqa: E402

from ..config import Settings, get_settings  # noqa: E402
from ..exceptions import RenderError  # noqa: E402
from ..models.spadjor import RealizableSpadjor  # noqa: E402
from ..topology import is_bounded  # noqa: E402

logger = logging.getLogger(__name__)

Window = Tuple[float, float, float, float]


@dataclass(frozen=True)
class RenderStyle:
    fill: str = "#9ecae1"
    stroke: str = "#08306b"
    line_width: float = 1.5
    width_in: float = 6.0
    margin: float = 0.1
    arrow_scale: float = 0.03

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None) -> "RenderStyle":
        settings = settings or get_settings()
        return cls(
            fill=settings.render_fill,
            stroke=settings.render_stroke,
            width_in=settings.render_width_in,
        )


def default_window(j: RealizableSpadjor, margin: float = 0.1) -> Window:
    if j.is_special:
        return (0.0, 0.0, 1.0, 1.0)
    x0 = min(c.bbox[0] for c in j.curves)
    y0 = min(c.bbox[1] for c in j.curves)
    x1 = max(c.bbox[2] for c in j.curves)
    y1 = max(c.bbox[3] for c in j.curves)
    pad = margin * max(x1 - x0, y1 - y0)
    return (x0 - pad, y0 - pad, x1 + pad, y1 + pad)


def _fill_path(j: RealizableSpadjor, window: Window) -> Optional[MplPath]:
    """Compound path whose nonzero-winding fill is the Yin set inside the window"""
    x0, y0, x1, y1 = window
    frame = [(x0, y0), (x1, y0), (x1, y1), (x0, y1), (x0, y0)]
    frame_codes = [MplPath.MOVETO] + [MplPath.LINETO] * 3 + [MplPath.CLOSEPOLY]
    if j.is_zero:
        return None
    if j.is_one:
        return MplPath(frame, frame_codes)

    vertices, codes = [], []
    if not is_bounded(j):
        vertices.extend(frame)
        codes.extend(frame_codes)
    for curve in j.curves:
        pts = [(p.x, p.y) for p in curve.vertices]
        vertices.extend(pts + [pts[0]])
        codes.append(MplPath.MOVETO)
        codes.extend([MplPath.LINETO] * (len(pts) - 1))
        codes.append(MplPath.CLOSEPOLY)
    return MplPath(vertices, codes)


def _draw_arrow(ax, curve, style: RenderStyle, size: float):
    edge = curve.longest_edge()
    mid = edge.midpoint
    d = edge.direction
    length = edge.length
    tip = (mid.x + d.x / length * size, mid.y + d.y / length * size)
    ax.annotate(
        "",
        xy=tip,
        xytext=(mid.x, mid.y),
        arrowprops=dict(arrowstyle="-|>", color=style.stroke, lw=style.line_width),
    )


def render(
    j: RealizableSpadjor,
    path: str,
    style: Optional[RenderStyle] = None,
    window: Optional[Window] = None,
):
    """Draw the Yin set as SVG: solid positive curves, dashed negative ones"""
    style = style or RenderStyle.from_settings()
    window = window or default_window(j, style.margin)
    x0, y0, x1, y1 = window
    if not (x1 > x0 and y1 > y0):
        raise ValueError(f"Degenerate render window {window}")

    aspect = (y1 - y0) / (x1 - x0)
    fig, ax = plt.subplots(figsize=(style.width_in, style.width_in * aspect))
    try:
        ax.set_xlim(x0, x1)
        ax.set_ylim(y0, y1)
        ax.set_aspect("equal")
        ax.set_xticks([])
        ax.set_yticks([])
        ax.add_patch(
            Rectangle((x0, y0), x1 - x0, y1 - y0, fill=False, edgecolor="black", lw=0.8)
        )

        fill = _fill_path(j, window)
        if fill is not None:
            ax.add_patch(PathPatch(fill, facecolor=style.fill, edgecolor="none"))

        arrow_size = style.arrow_scale * max(x1 - x0, y1 - y0)
        for curve in j.curves:
            xs = [p.x for p in curve.vertices] + [curve.vertices[0].x]
            ys = [p.y for p in curve.vertices] + [curve.vertices[0].y]
            ax.plot(
                xs,
                ys,
                color=style.stroke,
                lw=style.line_width,
                linestyle="-" if curve.is_positive else "--",
            )
            _draw_arrow(ax, curve, style, arrow_size)

        fig.savefig(path, format="svg")
        logger.info(f"Rendered {j.describe()} to {path}")
    except OSError as e:
        logger.error(f"Error writing SVG to {path}: {e}")
        raise RenderError(f"Cannot write {path}: {e}") from e
    finally:
        plt.close(fig)
