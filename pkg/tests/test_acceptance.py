"""Acceptance suite: one criterion per test, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -s` to see the status lines.
"""

import os
import random

from gridcover.cli import main as cli_main
from gridcover.grid import Cell, build_grid, manhattan
from gridcover.maps import gaussian_map, island_map
from gridcover.objectives import WeightVector
from gridcover.oracle import enumerate_closed_walks, evaluate_walk, optimal_walk
from gridcover.planner import Trajectory, plan, replay
from gridcover.rewards import PenaltyConfig
from gridcover.routing import cross_check_path, reward_shortest_path

PEN = PenaltyConfig()
W111 = WeightVector(1, 1, 1)
CLASSES = ["zero", "low", "medium", "high"]
CLASS_RANK = {c: i for i, c in enumerate(CLASSES)}


def _status(name, ok=True):
    print(f"\nACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")


def _random_grid(rng, width, height, density=0.4):
    assignments = [((x, y), rng.choice(CLASSES[1:]))
                   for x in range(1, width + 1) for y in range(1, height + 1)
                   if rng.random() < density]
    return build_grid(width, height, 1, assignments)


def test_criterion_1_safety_over_random_instances():
    """Every plan returns to base with J2 >= 0 and per-prefix reserve."""
    rng = random.Random(2024)
    try:
        for _ in range(1000):
            w = rng.randint(5, 15)
            h = rng.randint(5, 15)
            grid = _random_grid(rng, w, h)
            base = Cell(rng.randint(1, w), rng.randint(1, h))
            battery = rng.randint(0, 60)
            result = plan(grid, base, battery)
            wps = result.trajectory.waypoints
            assert wps[0] == base and wps[-1] == base
            assert result.objectives.j2 >= 0
            assert result.ledger.remaining == result.objectives.j2
            remaining = battery
            for cell in wps[1:]:
                remaining -= 1
                assert remaining >= manhattan(cell, base)
    except AssertionError:
        _status("1 safety", False)
        raise
    _status("1 safety")


def test_criterion_2_oracle_differential_3x3():
    """Exact evaluator agreement, plan membership, greedy vs optimum."""
    base = Cell(1, 1)
    budget = 8
    shape_grid = build_grid(3, 3, 1, [])
    walks = enumerate_closed_walks(shape_grid, base, budget).walks
    rng = random.Random(99)
    try:
        for _ in range(50):
            grid = _random_grid(rng, 3, 3, density=0.7)
            for walk in walks:
                hops = len(walk) - 1
                trajectory = Trajectory(list(walk), ["outgoing"] * hops, [])
                assert evaluate_walk(grid, walk, PEN, budget, W111) == \
                    replay(grid, trajectory, budget)
            greedy = plan(grid, base, budget)
            walk_keys = {tuple(tuple(c) for c in w) for w in walks}
            assert tuple(tuple(c) for c in greedy.trajectory.waypoints) in walk_keys
            _, best = optimal_walk(grid, base, budget, PEN, W111)
            assert greedy.objectives.j_total >= best.j_total
    except AssertionError:
        _status("2 oracle differential", False)
        raise
    _status("2 oracle differential")


def test_criterion_3_routing_optimality_5x5():
    """Lexicographic optimum matches min-hop enumeration; searches agree."""
    grid = build_grid(5, 5, 1, [])
    cells = list(grid.cells())
    rng = random.Random(77)

    def monotone_paths(start, goal):
        paths = []

        def extend(path):
            pos = path[-1]
            if pos == goal:
                paths.append(list(path))
                return
            if pos.x != goal.x:
                step = 1 if goal.x > pos.x else -1
                extend(path + [Cell(pos.x + step, pos.y)])
            if pos.y != goal.y:
                step = 1 if goal.y > pos.y else -1
                extend(path + [Cell(pos.x, pos.y + step)])

        extend([start])
        return paths

    try:
        for _ in range(20):
            reward_map = {c: rng.randint(-100, 100) for c in cells}
            for start in cells:
                for goal in cells:
                    p = reward_shortest_path(grid, reward_map, start, goal)
                    assert p.hop_count == manhattan(start, goal)
                    best = max(sum(reward_map[c] for c in path[1:])
                               for path in monotone_paths(start, goal))
                    assert p.accumulated_reward == best
                    q = cross_check_path(grid, reward_map, start, goal)
                    assert q.cells == p.cells
                    assert q.accumulated_reward == p.accumulated_reward
    except AssertionError:
        _status("3 routing optimality", False)
        raise
    _status("3 routing optimality")


def test_criterion_4_shipped_map_magnitudes():
    """Both shipped maps: return to base, small J2, first target in the
    highest importance class reachable within the battery."""
    try:
        for grid in (island_map(), gaussian_map()):
            for base in (Cell(7, 6), Cell(13, 8)):
                for battery in (25, 50):
                    result = plan(grid, base, battery)
                    wps = result.trajectory.waypoints
                    assert wps[0] == base and wps[-1] == base
                    assert result.objectives.j2 <= 10
                    reachable = [c for c in grid.cells()
                                 if c != base and battery > 2 * manhattan(base, c)]
                    top = max(CLASS_RANK[grid.class_at(c)] for c in reachable)
                    assert result.trajectory.targets, "no target committed"
                    first = result.trajectory.targets[0]
                    assert CLASS_RANK[grid.class_at(first)] == top
    except AssertionError:
        _status("4 shipped-map magnitudes", False)
        raise
    _status("4 shipped-map magnitudes")


def test_criterion_5_battery_sweep(tmp_path):
    """Default sweep: 20 deterministic rows, J3 monotone per series."""
    out1 = str(tmp_path / "a")
    out2 = str(tmp_path / "b")
    try:
        assert cli_main(["sweep", "--out", out1]) == 0
        assert cli_main(["sweep", "--out", out2]) == 0
        csv1 = open(os.path.join(out1, "sweep.csv"), "rb").read()
        csv2 = open(os.path.join(out2, "sweep.csv"), "rb").read()
        assert csv1 == csv2
        lines = csv1.decode().splitlines()
        header = lines[0].split(",")
        rows = [dict(zip(header, ln.split(","))) for ln in lines[1:]]
        assert len(rows) == 20
        series = {}
        for row in rows:
            series.setdefault((row["map"], row["base"]), []).append(row)
        assert len(series) == 4
        plateau_seen = False
        for key, group in series.items():
            j3s = [float(r["j3"]) for r in group]
            assert j3s == sorted(j3s), f"J3 not monotone for {key}"
            for a, b in zip(group, group[1:]):
                if (key[0] == "gaussian" and a["j3"] == b["j3"]
                        and a["accumulated_reward"] != b["accumulated_reward"]):
                    plateau_seen = True
        if not plateau_seen:
            print("\nnote: shipped Gaussian map shows no consecutive-battery "
                  "plateau with differing reward; recorded, not failed")
    except AssertionError:
        _status("5 battery sweep", False)
        raise
    _status("5 battery sweep")


def test_criterion_6_equation_arithmetic():
    """Direct arithmetic of the objective terms and the reward rule."""
    from gridcover.objectives import (
        accumulated_reward,
        j1_coverage,
        j2_unspent,
        j3_importance,
        j_total,
    )
    try:
        t5 = Trajectory([Cell(1, 1), Cell(2, 1), Cell(3, 1), Cell(3, 2), Cell(3, 3)], [], [])
        assert j1_coverage(t5, 1) == 5
        t4 = Trajectory([Cell(1, 1), Cell(2, 1), Cell(1, 1), Cell(2, 1),
                         Cell(2, 2), Cell(2, 3), Cell(2, 2)], [], [])
        assert j1_coverage(t4, 2) == 16
        assert j1_coverage(Trajectory([Cell(1, 1)], [], []), 1) == 1
        assert j2_unspent(25, [17], 5) == 3
        assert j2_unspent(50, [], 0) == 50
        g = build_grid(3, 1, 1, [((1, 1), "high"), ((2, 1), "medium"), ((3, 1), "low")])
        assert j3_importance(Trajectory([Cell(1, 1), Cell(2, 1), Cell(3, 1)], [], []), g) == 111
        g100 = build_grid(2, 1, 1, [((2, 1), "high")])
        revisit = Trajectory([Cell(1, 1), Cell(2, 1), Cell(1, 1), Cell(2, 1)], [], [])
        assert j3_importance(revisit, g100) == 100
        assert j_total(5, 3, 111, WeightVector(1, 1, 1)) == -113
        assert j_total(5, 3, 111, WeightVector(0, 0, 1)) == -111
        assert j_total(5, 3, 111, WeightVector(0, 0, 0)) == 0
        g210 = build_grid(3, 1, 1, [((1, 1), "high"), ((2, 1), "high"), ((3, 1), "medium")])
        walk210 = Trajectory([Cell(1, 1), Cell(2, 1), Cell(3, 1), Cell(2, 1)], [], [])
        assert accumulated_reward(walk210, g210, PEN, 2) == 108
        g_plain = build_grid(2, 1, 1, [((2, 1), "medium")])
        out = Trajectory([Cell(1, 1), Cell(2, 1)], [], [])
        assert accumulated_reward(out, g_plain, PEN, 0) == 10
    except AssertionError:
        _status("6 equation arithmetic", False)
        raise
    _status("6 equation arithmetic")
