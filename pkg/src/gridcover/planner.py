"""Greedy coverage planning loop with guaranteed-return battery gating.

The loop repeatedly picks the highest-reward target, routes to it while
collecting reward, and commits the leg only if the remaining battery
strictly exceeds the leg cost plus the reserve needed to return to base
from the target. When no positive-reward target exists or the next leg
is infeasible, the planner returns to base along the penalty-aware
shortest return path.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import objectives
from .errors import DomainError, TrajectoryError
from .grid import Cell, GridMap, manhattan
from .objectives import ObjectiveReport, WeightVector
from .rewards import PenaltyConfig, VisitedSet, compute_reward_map, select_target
from .routing import reward_shortest_path, shortest_return_path


@dataclass
class BatteryLedger:
    start: float
    remaining: float
    move_cost: float = 1


@dataclass
class Trajectory:
    """Closed walk from base back to base with per-hop segment labels.

    segments[i] labels the hop into waypoints[i+1] as "outgoing" or
    "return"; return hops form a suffix. targets lists the greedy goals
    in the order they were committed.
    """

    waypoints: list
    segments: list
    targets: list


@dataclass
class PlanResult:
    trajectory: Trajectory
    ledger: BatteryLedger
    objectives: ObjectiveReport


def feasibility_check(remaining, leg_cost, return_reserve) -> bool:
    """True iff the battery strictly covers the leg plus the return reserve."""
    if remaining < 0 or leg_cost < 0 or return_reserve < 0:
        raise DomainError("energy arguments must be nonnegative")
    return remaining > leg_cost + return_reserve


def plan(grid: GridMap, base, battery_start, penalties=None, weights=None,
         move_cost=1) -> PlanResult:
    """Run the greedy coverage loop and score the resulting trajectory."""
    grid.require_in_bounds(base)
    if battery_start < 0:
        raise DomainError(f"battery_start must be nonnegative, got {battery_start}")
    penalties = penalties or PenaltyConfig()
    weights = weights or WeightVector()

    base = Cell(*base)
    visited = VisitedSet()
    visited.mark(base)
    waypoints = [base]
    segments = []
    targets = []
    current = base
    remaining = battery_start

    while True:
        reward_map = compute_reward_map(grid, current, visited, penalties)
        target = select_target(reward_map, current)
        if target is None:
            break
        outgoing = reward_shortest_path(grid, reward_map, current, target)
        reserve_leg = shortest_return_path(grid, target, base, visited, penalties)
        leg_cost = outgoing.hop_count * move_cost
        reserve = reserve_leg.hop_count * move_cost
        if not feasibility_check(remaining, leg_cost, reserve):
            break
        for cell in outgoing.cells[1:]:
            waypoints.append(cell)
            segments.append("outgoing")
            visited.mark(cell)
            remaining -= move_cost
            # Safety: a min-hop return must stay affordable at every step.
            assert remaining >= manhattan(cell, base) * move_cost
        targets.append(target)
        current = target

    final_leg = shortest_return_path(grid, current, base, visited, penalties)
    for cell in final_leg.cells[1:]:
        waypoints.append(cell)
        segments.append("return")
        visited.mark(cell)
        remaining -= move_cost
        assert remaining >= 0

    trajectory = Trajectory(waypoints, segments, targets)
    ledger = BatteryLedger(battery_start, remaining, move_cost)
    report = replay(grid, trajectory, battery_start, penalties, weights, move_cost)
    return PlanResult(trajectory, ledger, report)


def validate_trajectory(grid: GridMap, trajectory: Trajectory) -> None:
    wps = trajectory.waypoints
    if not wps:
        raise TrajectoryError("trajectory has no waypoints")
    for cell in wps:
        grid.require_in_bounds(cell)
    if len(wps) > 1 and wps[0] != wps[-1]:
        raise TrajectoryError(f"trajectory must start and end at base, got {wps[0]}..{wps[-1]}")
    for a, b in zip(wps, wps[1:]):
        if manhattan(a, b) != 1:
            raise TrajectoryError(f"waypoints {tuple(a)} and {tuple(b)} are not adjacent")


def replay(grid: GridMap, trajectory: Trajectory, battery_start, penalties=None,
           weights=None, move_cost=1) -> ObjectiveReport:
    """Re-score a stored trajectory from scratch."""
    penalties = penalties or PenaltyConfig()
    weights = weights or WeightVector()
    validate_trajectory(grid, trajectory)

    n_return = sum(1 for s in trajectory.segments if s == "return")
    n_outgoing = len(trajectory.segments) - n_return
    j1 = objectives.j1_coverage(trajectory, grid.cell_size)
    j2 = objectives.j2_unspent(battery_start, [move_cost] * n_outgoing,
                               n_return * move_cost)
    j3 = objectives.j3_importance(trajectory, grid)
    total = objectives.j_total(j1, j2, j3, weights)
    reward = objectives.accumulated_reward(trajectory, grid, penalties, j2)
    return ObjectiveReport(
        j1=j1, j2=j2, j3=j3, j_total=total,
        accumulated_reward=reward,
        revisit_count=objectives.count_revisit_hops(trajectory),
        distinct_cells=len(set(trajectory.waypoints)),
    )
