"""Plain-text serialization for trajectories and sweep tables.

Trajectory file: `key=value` header lines followed by one waypoint per
line as `x,y,segment`. The first waypoint carries segment `start`. All
output is deterministic (no timestamps) so files diff cleanly.
"""

from __future__ import annotations

import csv
import io

from .errors import ConfigError
from .grid import Cell
from .planner import Trajectory

SWEEP_COLUMNS = ["map", "base", "battery_start", "hops", "j1", "j2", "j3",
                 "j_total", "accumulated_reward", "revisit_count"]


def format_trajectory(trajectory: Trajectory, meta: dict) -> str:
    lines = [f"{k}={v}" for k, v in meta.items()]
    lines.append("targets=" + ";".join(f"{c[0]}:{c[1]}" for c in trajectory.targets))
    segments = ["start"] + list(trajectory.segments)
    for cell, seg in zip(trajectory.waypoints, segments):
        lines.append(f"{cell[0]},{cell[1]},{seg}")
    return "\n".join(lines) + "\n"


def parse_trajectory(text: str):
    """Inverse of format_trajectory; returns (meta, Trajectory)."""
    meta = {}
    waypoints = []
    segments = []
    targets = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if "=" in line and "," not in line.split("=", 1)[0]:
            key, value = line.split("=", 1)
            if key == "targets":
                targets = [Cell(*map(int, p.split(":"))) for p in value.split(";") if p]
            else:
                meta[key] = value
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise ConfigError(f"bad trajectory line: {raw!r}")
        x, y, seg = parts
        cell = Cell(int(x), int(y))
        if seg == "start":
            if waypoints:
                raise ConfigError("segment 'start' only allowed on the first waypoint")
            waypoints.append(cell)
        else:
            if seg not in ("outgoing", "return"):
                raise ConfigError(f"unknown segment label {seg!r}")
            waypoints.append(cell)
            segments.append(seg)
    if not waypoints:
        raise ConfigError("trajectory file has no waypoints")
    return meta, Trajectory(waypoints, segments, targets)


def format_objective_row(map_id, base, battery_start, report) -> dict:
    return {
        "map": map_id,
        "base": f"{base[0]}:{base[1]}",
        "battery_start": battery_start,
        "hops": battery_start - report.j2,
        "j1": report.j1,
        "j2": report.j2,
        "j3": report.j3,
        "j_total": report.j_total,
        "accumulated_reward": report.accumulated_reward,
        "revisit_count": report.revisit_count,
    }


def format_csv(rows: list) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()
