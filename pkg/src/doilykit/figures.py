"""Incidence-structure figures rendered to PNG files.

Layout is this package's own: the 15 points sit on a circle in sorted label
order and every 3-point line is drawn as a polyline through its points in
circle order. Only the incidence content matters; renders are deterministic
(fixed layout, fixed palette, no timestamp metadata).
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import matplotlib

matplotlib.use("Agg")

import math

import matplotlib.pyplot as plt

from .correspondence import (
    ModuleGeometry,
    duad_vector_bijection,
    module_geometry,
    relabel_doily,
)
from .exports import format_point
from .incidence import IncidenceStructure, build_doily
from .ring import FiniteRing, canonical_ring

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#aec7e8", "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5",
)


def circle_layout(points) -> dict[Any, tuple[float, float]]:
    """Points on the unit circle, sorted by display token, starting at top."""
    ordered = sorted(points, key=format_point)
    layout = {}
    for index, point in enumerate(ordered):
        angle = math.pi / 2 - 2 * math.pi * index / len(ordered)
        layout[point] = (math.cos(angle), math.sin(angle))
    return layout


def _line_path(line, layout):
    # order the three points by their circle position so the polyline
    # does not double back on itself
    ordered = sorted(line, key=lambda p: format_point(p))
    return [layout[p] for p in ordered]


def _draw_structure(
    ax,
    structure: IncidenceStructure,
    layout,
    *,
    line_color=None,
    line_width: float = 1.2,
    point_color: str = "#222222",
    label_points: bool = True,
) -> None:
    for index, line in enumerate(sorted(structure.labeled_lines(), key=lambda l: sorted(map(format_point, l)))):
        color = line_color or _PALETTE[index % len(_PALETTE)]
        xs, ys = zip(*_line_path(line, layout))
        ax.plot(xs, ys, color=color, linewidth=line_width, zorder=1)
    xs = [layout[p][0] for p in structure.points]
    ys = [layout[p][1] for p in structure.points]
    ax.scatter(xs, ys, s=36, color=point_color, zorder=2)
    if label_points:
        for point in structure.points:
            x, y = layout[point]
            ax.text(
                x * 1.14, y * 1.14, format_point(point),
                ha="center", va="center", fontsize=7,
            )
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    # drop the Software chunk so bytes depend on data alone
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def draw_doily(structure: IncidenceStructure, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    _draw_structure(ax, structure, circle_layout(structure.points))
    ax.set_title(f"{structure.num_points} points, {structure.num_lines} lines")
    return _save(fig, path)


def draw_traces(geometry: ModuleGeometry, doily: IncidenceStructure, path: Path) -> Path:
    """3x3 grid, one panel per nonunimodular free submodule trace."""
    layout = circle_layout(doily.points)
    fig, axes = plt.subplots(3, 3, figsize=(9, 9))
    for ax, trace in zip(axes.flat, geometry.traces):
        for line in sorted(doily.labeled_lines(), key=lambda l: sorted(map(format_point, l))):
            xs, ys = zip(*_line_path(line, layout))
            ax.plot(xs, ys, color="#dddddd", linewidth=0.8, zorder=1)
        for index, line in enumerate(sorted(trace.trace_lines)):
            xs, ys = zip(*_line_path(line, layout))
            ax.plot(xs, ys, color=_PALETTE[index], linewidth=2.2, zorder=2)
        pts = sorted(trace.trace_points)
        ax.scatter(
            [layout[p][0] for p in pts], [layout[p][1] for p in pts],
            s=30, color="#222222", zorder=3,
        )
        cx, cy = layout[trace.concurrence_point]
        ax.scatter([cx], [cy], s=110, marker="*", color="#d62728", zorder=4)
        ax.set_title(f"R{format_point(trace.generator)}", fontsize=9)
        ax.set_xlim(-1.2, 1.2)
        ax.set_ylim(-1.2, 1.2)
        ax.set_aspect("equal")
        ax.axis("off")
    fig.suptitle(f"Jacobson traces, {geometry.side} module")
    return _save(fig, path)


def draw_core(geometry: ModuleGeometry, doily: IncidenceStructure, path: Path) -> Path:
    """Doily with the six distinguished lines and nine concurrence points."""
    layout = circle_layout(doily.points)
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    for line in sorted(doily.labeled_lines(), key=lambda l: sorted(map(format_point, l))):
        xs, ys = zip(*_line_path(line, layout))
        ax.plot(xs, ys, color="#dddddd", linewidth=0.8, zorder=1)
    for index, line in enumerate(sorted(geometry.core.distinguished_lines)):
        xs, ys = zip(*_line_path(line, layout))
        ax.plot(xs, ys, color=_PALETTE[index], linewidth=2.4, zorder=2)
    all_pts = sorted(doily.points, key=format_point)
    ax.scatter(
        [layout[p][0] for p in all_pts], [layout[p][1] for p in all_pts],
        s=24, color="#bbbbbb", zorder=3,
    )
    cps = sorted(geometry.core.concurrence_points)
    ax.scatter(
        [layout[p][0] for p in cps], [layout[p][1] for p in cps],
        s=60, color="#d62728", zorder=4,
    )
    for point in all_pts:
        x, y = layout[point]
        ax.text(x * 1.14, y * 1.14, format_point(point), ha="center", va="center", fontsize=7)
    ax.set_title("distinguished lines and concurrence points")
    return _save(fig, path)


def render_all_figures(out_dir: Path, ring: FiniteRing | None = None) -> list[Path]:
    """The standard figure set written next to the verify-all report."""
    if ring is None:
        ring = canonical_ring()
    doily = build_doily()
    relabeled = relabel_doily(doily, duad_vector_bijection())
    left = module_geometry(ring, "left", relabeled)
    right = module_geometry(ring, "right", relabeled)
    return [
        draw_doily(doily, out_dir / "doily.png"),
        draw_traces(left, relabeled, out_dir / "traces_left.png"),
        draw_traces(right, relabeled, out_dir / "traces_right.png"),
        draw_core(left, relabeled, out_dir / "core.png"),
    ]
