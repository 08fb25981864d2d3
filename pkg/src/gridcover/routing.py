"""Shortest-path legs on the grid graph.

Legs optimize lexicographically: fewest hops first, then maximum
accumulated reward over entered cells. This is encoded as a composite
edge cost K - value(entered cell) with K large enough that one extra hop
always outweighs any achievable reward difference, so a nonnegative-cost
shortest-path search finds the lexicographic optimum.

Two searches are provided over the same costs: a priority-queue search
(`reward_shortest_path`) and an edge-relaxation search
(`cross_check_path`) kept as a differential check. Both reconstruct the
same canonical cell sequence: ties among optimal predecessors go to the
row-major smallest cell.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BoundsError
from .grid import Cell, GridMap, neighbors


@dataclass
class Path:
    cells: list
    hop_count: int
    accumulated_reward: float


def _hop_constant(values: dict) -> float:
    """Cost per hop that strictly dominates any reward differential."""
    max_abs = max((abs(v) for v in values.values()), default=0)
    n = len(values)
    return 2 * n * max(max_abs, 1) + 1


def _relax_order(grid: GridMap):
    """All directed edges (u, v), in deterministic row-major order."""
    for u in grid.cells():
        for v in neighbors(grid, u):
            yield u, v


def _reconstruct(grid, values, dist, start, goal, k):
    """Walk optimal predecessors backward from goal.

    Among neighbors u with dist[u] + (k - value[goal-side cell]) == dist[v],
    the row-major smallest u is chosen, giving a canonical sequence.
    """
    cells = [goal]
    v = goal
    while v != start:
        step_cost = k - values[v]
        pred = None
        for u in sorted(neighbors(grid, v), key=lambda c: (c.y, c.x)):
            if dist[u] + step_cost == dist[v]:
                pred = u
                break
        assert pred is not None, "tight predecessor must exist"
        cells.append(pred)
        v = pred
    cells.reverse()
    reward = sum(values[c] for c in cells[1:])
    return Path(cells, len(cells) - 1, reward)


def _dijkstra_dist(grid, values, start, k):
    dist = {start: 0}
    heap = [(0, start.y, start.x)]
    while heap:
        d, y, x = heapq.heappop(heap)
        u = Cell(x, y)
        if d > dist.get(u, float("inf")):
            continue
        for v in neighbors(grid, u):
            nd = d + k - values[v]
            if nd < dist.get(v, float("inf")):
                dist[v] = nd
                heapq.heappush(heap, (nd, v.y, v.x))
    return dist


def _bellman_ford_dist(grid, values, start, k):
    inf = float("inf")
    dist = {c: inf for c in grid.cells()}
    dist[start] = 0
    edges = list(_relax_order(grid))
    for _ in range(grid.width * grid.height - 1):
        changed = False
        for u, v in edges:
            if dist[u] == inf:
                continue
            nd = dist[u] + k - values[v]
            if nd < dist[v]:
                dist[v] = nd
                changed = True
        if not changed:
            break
    return dist


def _leg(grid, values, start, goal, dist_fn) -> Path:
    grid.require_in_bounds(start)
    grid.require_in_bounds(goal)
    start, goal = Cell(*start), Cell(*goal)
    if start == goal:
        return Path([start], 0, 0)
    k = _hop_constant(values)
    dist = dist_fn(grid, values, start, k)
    return _reconstruct(grid, values, dist, start, goal, k)


def reward_shortest_path(grid: GridMap, reward_map: dict, start, goal) -> Path:
    """Min-hop leg maximizing accumulated reward (priority-queue search)."""
    return _leg(grid, reward_map, start, goal, _dijkstra_dist)


def cross_check_path(grid: GridMap, reward_map: dict, start, goal) -> Path:
    """Same optimum computed by edge relaxation; differential oracle."""
    return _leg(grid, reward_map, start, goal, _bellman_ford_dist)


def return_values(grid: GridMap, visited, penalties) -> dict:
    """Per-cell value for return legs: importance if new, penalty if seen."""
    return {
        c: (-penalties.revisit_penalty if c in visited else grid.importance(c))
        for c in grid.cells()
    }


def shortest_return_path(grid: GridMap, start, base, visited, penalties) -> Path:
    """Min-hop path to base, preferring unvisited high-importance cells."""
    values = return_values(grid, visited, penalties)
    return _leg(grid, values, start, base, _dijkstra_dist)
