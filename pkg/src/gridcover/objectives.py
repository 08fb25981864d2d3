"""Objective terms scored over a finished trajectory.

J1 rewards covered area, J2 measures unspent energy, J3 rewards covered
importance; the weighted total combines them as -a1*J1 + a2*J2 - a3*J3
(lower is better). The accumulated-reward metric additionally penalizes
each revisiting hop and each unit of unspent energy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, LedgerError


@dataclass
class WeightVector:
    alpha1: float = 1
    alpha2: float = 1
    alpha3: float = 1


@dataclass
class ObjectiveReport:
    j1: float
    j2: float
    j3: float
    j_total: float
    accumulated_reward: float
    revisit_count: int
    distinct_cells: int


def _distinct_cells(trajectory):
    seen = set()
    out = []
    for cell in trajectory.waypoints:
        if cell not in seen:
            seen.add(cell)
            out.append(cell)
    return out


def j1_coverage(trajectory, cell_size):
    """Covered area: cell area times number of distinct cells."""
    return cell_size ** 2 * len(_distinct_cells(trajectory))


def j2_unspent(battery_start, leg_costs, final_return_cost):
    """Battery remaining after all legs and the final return."""
    if battery_start < 0 or final_return_cost < 0 or any(c < 0 for c in leg_costs):
        raise DomainError("energy quantities must be nonnegative")
    spent = sum(leg_costs) + final_return_cost
    if spent > battery_start:
        raise LedgerError(f"spent {spent} exceeds starting battery {battery_start}")
    return battery_start - spent


def j3_importance(trajectory, grid):
    """Importance-weighted covered area over distinct cells."""
    return grid.cell_size ** 2 * sum(grid.importance(c) for c in _distinct_cells(trajectory))


def j_total(j1, j2, j3, weights: WeightVector):
    """Weighted scalar objective; lower is better."""
    return -weights.alpha1 * j1 + weights.alpha2 * j2 - weights.alpha3 * j3


def count_revisit_hops(trajectory) -> int:
    """Hops whose destination cell was already covered earlier."""
    seen = set()
    count = 0
    for i, cell in enumerate(trajectory.waypoints):
        if i > 0 and cell in seen:
            count += 1
        seen.add(cell)
    return count


def accumulated_reward(trajectory, grid, penalties, unspent):
    """Collected importance minus revisit and unspent-energy penalties."""
    gained = sum(grid.importance(c) for c in _distinct_cells(trajectory))
    return (gained
            - penalties.revisit_penalty * count_revisit_hops(trajectory)
            - penalties.unspent_penalty * unspent)
