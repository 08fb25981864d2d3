"""Brute-force verification tools for desk-scale instances.

Enumerates every closed walk from base within a hop budget, scores each
walk with an evaluator written independently of the objectives module,
and finds the exhaustive optimum for gap reporting against the greedy
planner. Hard caps keep the exponential enumeration out of trouble.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, TrajectoryError
from .grid import Cell, GridMap, manhattan, neighbors
from .objectives import ObjectiveReport, WeightVector
from .rewards import PenaltyConfig

MAX_CELLS = 25
MAX_BUDGET = 12


@dataclass
class WalkSet:
    walks: list


def enumerate_closed_walks(grid: GridMap, base, budget) -> WalkSet:
    """All closed walks from base with at most `budget` hops.

    Depth-first order with the fixed neighbor order (up, down, left,
    right); branches that cannot make it back within budget are pruned.
    """
    grid.require_in_bounds(base)
    if budget < 0:
        raise CapacityError(f"budget must be nonnegative, got {budget}")
    if grid.width * grid.height > MAX_CELLS or budget > MAX_BUDGET:
        raise CapacityError(
            f"instance {grid.width}x{grid.height}, budget {budget} exceeds caps "
            f"({MAX_CELLS} cells, budget {MAX_BUDGET})")

    base = Cell(*base)
    walks = []
    walk = [base]

    def extend(pos):
        if pos == base:
            walks.append(list(walk))
        used = len(walk) - 1
        for n in neighbors(grid, pos):
            if used + 1 + manhattan(n, base) <= budget:
                walk.append(n)
                extend(n)
                walk.pop()

    extend(base)
    return WalkSet(walks)


def evaluate_walk(grid: GridMap, walk, penalties: PenaltyConfig, battery_start,
                  weights: WeightVector) -> ObjectiveReport:
    """Score a closed walk from first principles.

    Kept structurally independent of the objectives module: every term is
    recomputed here with plain loops so the two code paths can be
    compared walk-by-walk.
    """
    if not walk:
        raise TrajectoryError("walk has no waypoints")
    for cell in walk:
        grid.require_in_bounds(cell)
    if len(walk) > 1 and walk[0] != walk[-1]:
        raise TrajectoryError("walk must start and end at the same cell")
    hops = len(walk) - 1
    if hops > battery_start:
        raise TrajectoryError(f"{hops} hops exceed battery {battery_start}")

    seen = set()
    distinct = 0
    gained = 0
    revisits = 0
    for i, cell in enumerate(walk):
        if manhattan(walk[i - 1], cell) != 1 and i > 0:
            raise TrajectoryError(f"cells {tuple(walk[i - 1])} and {tuple(cell)} not adjacent")
        if cell in seen:
            if i > 0:
                revisits += 1
        else:
            seen.add(cell)
            distinct += 1
            gained += grid.importance(cell)

    area = grid.cell_size * grid.cell_size
    j1 = area * distinct
    j2 = battery_start - hops
    j3 = area * gained
    total = -weights.alpha1 * j1 + weights.alpha2 * j2 - weights.alpha3 * j3
    reward = (gained
              - penalties.revisit_penalty * revisits
              - penalties.unspent_penalty * j2)
    return ObjectiveReport(j1=j1, j2=j2, j3=j3, j_total=total,
                           accumulated_reward=reward,
                           revisit_count=revisits, distinct_cells=distinct)


def optimal_walk(grid: GridMap, base, budget, penalties: PenaltyConfig,
                 weights: WeightVector):
    """Exhaustive minimum of the weighted objective over all closed walks.

    Ties go to fewer hops, then to the lexicographically smallest
    waypoint sequence.
    """
    walk_set = enumerate_closed_walks(grid, base, budget)
    best = None
    best_report = None
    best_key = None
    for walk in walk_set.walks:
        report = evaluate_walk(grid, walk, penalties, budget, weights)
        key = (report.j_total, len(walk) - 1, tuple(walk))
        if best_key is None or key < best_key:
            best, best_report, best_key = walk, report, key
    return best, best_report
