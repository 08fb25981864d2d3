"""Battery-constrained coverage planning on importance-weighted grids."""

from .grid import (
    Cell,
    GridMap,
    build_grid,
    dump_mask_map,
    generate_gaussian_map,
    load_mask_map,
    manhattan,
    neighbors,
)
from .objectives import ObjectiveReport, WeightVector
from .planner import BatteryLedger, PlanResult, Trajectory, feasibility_check, plan, replay
from .rewards import PenaltyConfig, VisitedSet, compute_reward_map, select_target
from .routing import Path, cross_check_path, reward_shortest_path, shortest_return_path

__all__ = [
    "Cell", "GridMap", "build_grid", "dump_mask_map", "generate_gaussian_map",
    "load_mask_map", "manhattan", "neighbors",
    "ObjectiveReport", "WeightVector",
    "BatteryLedger", "PlanResult", "Trajectory", "feasibility_check", "plan", "replay",
    "PenaltyConfig", "VisitedSet", "compute_reward_map", "select_target",
    "Path", "cross_check_path", "reward_shortest_path", "shortest_return_path",
]

__version__ = "0.1.0"
