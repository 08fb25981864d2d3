"""Command-line front end.

Verbs:
  plan    one map/base/battery run; writes trajectory, objectives, figure
  sweep   battery sweep over one or more maps and bases; CSV plus figure
  oracle  brute-force gap report on a small instance
  render  re-render a stored trajectory file

A config file of `key=value` lines may supply defaults; command-line
flags override it.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import ConfigError, GridCoverError
from .grid import Cell, generate_gaussian_map
from .maps import load_named_map
from .objectives import WeightVector
from .oracle import enumerate_closed_walks, evaluate_walk, optimal_walk
from .planner import plan, replay
from .render import render_sweep, render_trajectory
from .rewards import PenaltyConfig
from .trajio import format_csv, format_objective_row, format_trajectory, parse_trajectory

DEFAULT_MAPS = ["island", "gaussian"]
DEFAULT_BASES = ["7,6", "13,8"]
DEFAULT_BATTERIES = "20,30,40,50,60"


def _num(text):
    """Parse a number, preferring int so scoring stays exact."""
    value = float(text)
    return int(value) if value == int(value) else value


def _parse_cell(text) -> Cell:
    try:
        x, y = (int(p) for p in str(text).split(","))
    except ValueError:
        raise ConfigError(f"expected a cell as X,Y, got {text!r}")
    return Cell(x, y)


def _parse_scores(text) -> dict:
    try:
        z, lo, m, h = (_num(p) for p in str(text).split(","))
    except ValueError:
        raise ConfigError(f"expected scores as z,l,m,h, got {text!r}")
    return {"zero": z, "low": lo, "medium": m, "high": h}


def _parse_alphas(text) -> WeightVector:
    try:
        a1, a2, a3 = (_num(p) for p in str(text).split(","))
    except ValueError:
        raise ConfigError(f"expected alphas as a1,a2,a3, got {text!r}")
    return WeightVector(a1, a2, a3)


def _parse_gaussian_tokens(tokens) -> dict:
    params = {}
    for token in tokens:
        if "=" not in token:
            raise ConfigError(f"gaussian parameter must be key=value, got {token!r}")
        key, value = token.split("=", 1)
        params[key] = value
    try:
        seed = int(params.pop("seed", "0"))
        mean = tuple(float(p) for p in params.pop("mean").split(","))
        c = [float(p) for p in params.pop("cov").split(",")]
        cov = ((c[0], c[1]), (c[2], c[3]))
        thresholds = tuple(float(p) for p in params.pop("thresholds").split(","))
        size = int(params.pop("size", "15"))
    except (KeyError, ValueError, IndexError) as exc:
        raise ConfigError(f"bad gaussian parameters: {exc}")
    if params:
        raise ConfigError(f"unknown gaussian parameters: {sorted(params)}")
    return {"width": size, "height": size, "mean": mean, "covariance": cov,
            "thresholds": thresholds, "seed": seed}


def _read_config_file(path) -> dict:
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"bad config line {raw!r} in {path}")
                key, value = line.split("=", 1)
                values[key.strip()] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}")
    return values


def _setting(args, config, name, default=None):
    value = getattr(args, name, None)
    if value is not None:
        return value
    return config.get(name, default)


def _load_map(args, config):
    gaussian = getattr(args, "gaussian", None)
    cell_size = _num(_setting(args, config, "cell_size", 1) or 1)
    scores_text = _setting(args, config, "scores")
    scores = _parse_scores(scores_text) if scores_text else None
    if gaussian:
        params = _parse_gaussian_tokens(gaussian)
        return "gaussian-custom", generate_gaussian_map(cell_size=cell_size,
                                                        scores=scores, **params)
    source = _setting(args, config, "map")
    if source is None:
        raise ConfigError("no map source given (use --map or --gaussian)")
    map_id = source if source in DEFAULT_MAPS else os.path.splitext(os.path.basename(source))[0]
    return map_id, load_named_map(source, cell_size=cell_size, scores=scores)


def _penalties(args, config) -> PenaltyConfig:
    return PenaltyConfig(
        revisit_penalty=_num(_setting(args, config, "revisit_penalty", 100)),
        unspent_penalty=_num(_setting(args, config, "unspent_penalty", 1)),
    )


def _weights(args, config) -> WeightVector:
    text = _setting(args, config, "alphas")
    return _parse_alphas(text) if text else WeightVector()


def _out_dir(args, config) -> str:
    out = _setting(args, config, "out", ".")
    os.makedirs(out, exist_ok=True)
    return out


def _run_meta(map_id, base, battery, penalties, weights, grid):
    return {
        "map": map_id,
        "base": f"{base.x},{base.y}",
        "battery": battery,
        "cell_size": grid.cell_size,
        "revisit_penalty": penalties.revisit_penalty,
        "unspent_penalty": penalties.unspent_penalty,
        "alphas": f"{weights.alpha1},{weights.alpha2},{weights.alpha3}",
    }


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_plan(args) -> int:
    config = _read_config_file(args.config) if args.config else {}
    map_id, grid = _load_map(args, config)
    base = _parse_cell(_setting(args, config, "base"))
    grid.require_in_bounds(base)
    battery = int(_setting(args, config, "battery"))
    penalties = _penalties(args, config)
    weights = _weights(args, config)
    out = _out_dir(args, config)

    result = plan(grid, base, battery, penalties, weights)
    stem = f"{map_id}_base{base.x}-{base.y}_B{battery}"
    meta = _run_meta(map_id, base, battery, penalties, weights, grid)
    _write(os.path.join(out, stem + ".traj.txt"),
           format_trajectory(result.trajectory, meta))
    row = format_objective_row(map_id, base, battery, result.objectives)
    _write(os.path.join(out, stem + ".objectives.csv"), format_csv([row]))
    render_trajectory(grid, result.trajectory, base,
                      os.path.join(out, stem + ".svg"),
                      title=f"{map_id}, base ({base.x},{base.y}), battery {battery}")
    o = result.objectives
    print(f"{stem}: hops={battery - o.j2:.0f} J1={o.j1} J2={o.j2} J3={o.j3} "
          f"J_total={o.j_total} reward={o.accumulated_reward}")
    return 0


def cmd_sweep(args) -> int:
    config = _read_config_file(args.config) if args.config else {}
    batteries_text = _setting(args, config, "batteries", DEFAULT_BATTERIES)
    batteries = [int(p) for p in str(batteries_text).split(",") if p]
    if not batteries:
        raise ConfigError("battery list is empty")
    map_sources = args.map if args.map else [config["map"]] if "map" in config else DEFAULT_MAPS
    base_texts = args.base if args.base else [config["base"]] if "base" in config else DEFAULT_BASES
    penalties = _penalties(args, config)
    weights = _weights(args, config)
    out = _out_dir(args, config)
    cell_size = _num(_setting(args, config, "cell_size", 1) or 1)
    scores_text = _setting(args, config, "scores")
    scores = _parse_scores(scores_text) if scores_text else None

    rows = []
    series = {}
    for source in map_sources:
        map_id = source if source in DEFAULT_MAPS else os.path.splitext(os.path.basename(source))[0]
        grid = load_named_map(source, cell_size=cell_size, scores=scores)
        for base_text in base_texts:
            base = _parse_cell(base_text)
            grid.require_in_bounds(base)
            points = []
            for battery in batteries:
                result = plan(grid, base, battery, penalties, weights)
                rows.append(format_objective_row(map_id, base, battery, result.objectives))
                points.append((battery, result.objectives.accumulated_reward))
            series[f"{map_id} base ({base.x},{base.y})"] = points
    _write(os.path.join(out, "sweep.csv"), format_csv(rows))
    render_sweep(series, os.path.join(out, "reward_vs_battery.svg"))
    print(format_csv(rows), end="")
    return 0


def cmd_oracle(args) -> int:
    config = _read_config_file(args.config) if args.config else {}
    map_id, grid = _load_map(args, config)
    base = _parse_cell(_setting(args, config, "base"))
    grid.require_in_bounds(base)
    battery = int(_setting(args, config, "battery"))
    penalties = _penalties(args, config)
    weights = _weights(args, config)

    walks = enumerate_closed_walks(grid, base, battery)
    greedy = plan(grid, base, battery, penalties, weights)
    best_walk, best_report = optimal_walk(grid, base, battery, penalties, weights)
    greedy_walk = [tuple(c) for c in greedy.trajectory.waypoints]
    member = greedy_walk in [[tuple(c) for c in w] for w in walks.walks]
    check = evaluate_walk(grid, greedy.trajectory.waypoints, penalties, battery, weights)

    print(f"instance: {map_id}, base ({base.x},{base.y}), battery {battery}")
    print(f"enumerated closed walks: {len(walks.walks)}")
    print(f"greedy J_total: {greedy.objectives.j_total} "
          f"(independent evaluation: {check.j_total})")
    print(f"optimal J_total: {best_report.j_total} over {len(best_walk) - 1} hops")
    print(f"optimality gap: {greedy.objectives.j_total - best_report.j_total}")
    print(f"greedy walk enumerated: {member}")
    return 0


def cmd_render(args) -> int:
    config = _read_config_file(args.config) if args.config else {}
    map_id, grid = _load_map(args, config)
    try:
        with open(args.trajectory, "r", encoding="utf-8") as fh:
            meta, trajectory = parse_trajectory(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read trajectory {args.trajectory!r}: {exc}")
    base = _parse_cell(meta.get("base") or _setting(args, config, "base"))
    battery = int(meta.get("battery", _setting(args, config, "battery", 0)))
    penalties = _penalties(args, config)
    weights = _weights(args, config)
    report = replay(grid, trajectory, battery, penalties, weights)
    out = _out_dir(args, config)
    stem = os.path.splitext(os.path.basename(args.trajectory))[0]
    path = os.path.join(out, stem + ".svg")
    render_trajectory(grid, trajectory, base, path,
                      title=f"{map_id}, base ({base.x},{base.y}), battery {battery}")
    print(f"rendered {path} (J_total={report.j_total})")
    return 0


def _add_common(p, base_flag=True):
    p.add_argument("--map", help="shipped map name (island, gaussian) or mask file path")
    p.add_argument("--gaussian", nargs="+", metavar="KEY=VALUE",
                   help="generate a thresholded Gaussian map "
                        "(seed=, mean=X,Y, cov=a,b,c,d, thresholds=h,m,l, size=N)")
    if base_flag:
        p.add_argument("--base", help="base cell as X,Y")
    p.add_argument("--battery", type=int, help="starting battery level")
    p.add_argument("--revisit-penalty", dest="revisit_penalty", type=float)
    p.add_argument("--unspent-penalty", dest="unspent_penalty", type=float)
    p.add_argument("--alphas", help="objective weights as a1,a2,a3")
    p.add_argument("--scores", help="class scores as zero,low,medium,high")
    p.add_argument("--cell-size", dest="cell_size", type=float)
    p.add_argument("--out", help="output directory")
    p.add_argument("--config", help="key=value config file; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridcover",
        description="Battery-constrained coverage planning on importance-weighted grids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_plan = sub.add_parser("plan", help="run a single plan")
    _add_common(p_plan)
    p_plan.set_defaults(func=cmd_plan)

    p_sweep = sub.add_parser("sweep", help="battery sweep over maps and bases")
    p_sweep.add_argument("--map", action="append",
                         help="map to sweep (repeatable; default: both shipped maps)")
    p_sweep.add_argument("--base", action="append",
                         help="base cell X,Y (repeatable; default: 7,6 and 13,8)")
    p_sweep.add_argument("--batteries", help=f"battery list (default {DEFAULT_BATTERIES})")
    p_sweep.add_argument("--revisit-penalty", dest="revisit_penalty", type=float)
    p_sweep.add_argument("--unspent-penalty", dest="unspent_penalty", type=float)
    p_sweep.add_argument("--alphas")
    p_sweep.add_argument("--scores")
    p_sweep.add_argument("--cell-size", dest="cell_size", type=float)
    p_sweep.add_argument("--out")
    p_sweep.add_argument("--config")
    p_sweep.set_defaults(func=cmd_sweep)

    p_oracle = sub.add_parser("oracle", help="brute-force gap report (small instances)")
    _add_common(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    p_render = sub.add_parser("render", help="re-render a stored trajectory")
    p_render.add_argument("--trajectory", required=True, help="trajectory file to render")
    _add_common(p_render)
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GridCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
