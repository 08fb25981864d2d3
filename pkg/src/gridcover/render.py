"""Figure rendering for planned trajectories and battery sweeps.

Figures follow the map conventions used throughout: red/yellow/green/blue
cells for high/medium/low/zero importance, a white base cell, white
target dots, a black outgoing stroke and a purple return stroke with
direction arrowheads. SVG output is byte-deterministic (fixed hash salt,
no embedded date).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .grid import GridMap  # noqa: E402

CLASS_COLORS = {
    "high": "#d62728",
    "medium": "#ffdf00",
    "low": "#2ca02c",
    "zero": "#1f4e9c",
}
OUTGOING_COLOR = "black"
RETURN_COLOR = "#7d2a9e"

plt.rcParams["svg.hashsalt"] = "gridcover"


def save_figure(fig, path) -> None:
    fig.savefig(path, metadata={"Date": None})
    plt.close(fig)


def _draw_grid(ax, grid: GridMap, base):
    for cell in grid.cells():
        color = "white" if tuple(cell) == tuple(base) else CLASS_COLORS[grid.class_at(cell)]
        ax.add_patch(plt.Rectangle((cell.x - 0.5, cell.y - 0.5), 1, 1,
                                   facecolor=color, edgecolor="0.6", linewidth=0.4))
    ax.set_xlim(0.5, grid.width + 0.5)
    ax.set_ylim(grid.height + 0.5, 0.5)  # row 1 at the top
    ax.set_aspect("equal")
    ax.set_xticks(range(1, grid.width + 1))
    ax.set_yticks(range(1, grid.height + 1))
    ax.tick_params(labelsize=6, length=0)


def _draw_walk(ax, waypoints, segments):
    for i, seg in enumerate(segments):
        a, b = waypoints[i], waypoints[i + 1]
        color = RETURN_COLOR if seg == "return" else OUTGOING_COLOR
        ax.annotate("", xy=(b[0], b[1]), xytext=(a[0], a[1]),
                    arrowprops=dict(arrowstyle="->", color=color,
                                    linewidth=1.4, shrinkA=0, shrinkB=2))


def render_trajectory(grid: GridMap, trajectory, base, path, title=None) -> None:
    """Render one planned trajectory over its importance map."""
    fig, ax = plt.subplots(figsize=(6, 6))
    _draw_grid(ax, grid, base)
    _draw_walk(ax, trajectory.waypoints, trajectory.segments)
    for target in trajectory.targets:
        ax.plot(target[0], target[1], "o", color="white", markeredgecolor="0.3",
                markersize=5, zorder=5)
    if title:
        ax.set_title(title, fontsize=9)
    save_figure(fig, path)


def render_sweep(series: dict, path, title="Accumulated reward vs starting battery") -> None:
    """Line plot of accumulated reward against battery, one line per series.

    `series` maps a label to a list of (battery, accumulated_reward)
    pairs; insertion order fixes drawing and legend order.
    """
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, points in series.items():
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        ax.plot(xs, ys, marker="o", label=label)
    ax.set_xlabel("starting battery")
    ax.set_ylabel("accumulated reward")
    ax.set_title(title, fontsize=10)
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    save_figure(fig, path)
