"""Visit history and the dynamic per-cell reward map used for targeting."""

from __future__ import annotations

from dataclasses import dataclass

from .grid import GridMap, manhattan


@dataclass
class PenaltyConfig:
    """Deductions applied during reward computation and scoring."""

    revisit_penalty: float = 100
    unspent_penalty: float = 1

    def __post_init__(self):
        if self.revisit_penalty < 0 or self.unspent_penalty < 0:
            raise ValueError("penalties must be nonnegative")


class VisitedSet:
    """Cells covered so far, with insertion order preserved."""

    def __init__(self):
        self.visit_order = []
        self.visited = set()

    def mark(self, cell) -> None:
        self.visit_order.append(cell)
        self.visited.add(cell)

    def __contains__(self, cell) -> bool:
        return cell in self.visited

    def __len__(self) -> int:
        return len(self.visited)

    def copy(self) -> "VisitedSet":
        clone = VisitedSet()
        clone.visit_order = list(self.visit_order)
        clone.visited = set(self.visited)
        return clone


def compute_reward_map(grid: GridMap, current, visited, penalties: PenaltyConfig) -> dict:
    """Reward of each cell from the agent's current position.

    W(c) = importance(c) - manhattan(current, c) * cell_size, minus the
    revisit penalty when c has already been covered.
    """
    grid.require_in_bounds(current)
    values = {}
    for cell in grid.cells():
        w = grid.importance(cell) - manhattan(current, cell) * grid.cell_size
        if cell in visited:
            w -= penalties.revisit_penalty
        values[cell] = w
    return values


def select_target(reward_map: dict, current):
    """Cell with the highest positive reward, or None to trigger return.

    Ties go to the cell nearer the current position (Manhattan), then to
    row-major order (smaller y, then smaller x).
    """
    best = None
    best_key = None
    for cell, w in reward_map.items():
        if cell == current or w <= 0:
            continue
        key = (-w, manhattan(current, cell), cell[1], cell[0])
        if best_key is None or key < best_key:
            best, best_key = cell, key
    return best
