"""The two frozen 15x15 maps shipped with the package.

The island mask traces a volcanic island with two high-importance
clusters (a summit around (7,6) and a flow region near (10,9)); the
Gaussian map thresholds a bivariate normal centered at (7,6).
"""

from __future__ import annotations

from importlib import resources

from .errors import ConfigError
from .grid import GridMap, generate_gaussian_map, load_mask_map

GAUSSIAN_PARAMS = {
    "width": 15,
    "height": 15,
    "mean": (7, 6),
    "covariance": ((9, 0), (0, 9)),
    "thresholds": (0.0142, 0.0044, 0.0005),
    "seed": 7,
}


def island_map(cell_size=1, scores=None) -> GridMap:
    text = resources.files("gridcover.data").joinpath("island.mask").read_text()
    return load_mask_map(text, cell_size=cell_size, scores=scores)


def gaussian_map(cell_size=1, scores=None) -> GridMap:
    return generate_gaussian_map(cell_size=cell_size, scores=scores, **GAUSSIAN_PARAMS)


SHIPPED_MAPS = {"island": island_map, "gaussian": gaussian_map}


def load_named_map(source: str, cell_size=1, scores=None) -> GridMap:
    """Resolve a shipped map name or a mask file path."""
    if source in SHIPPED_MAPS:
        return SHIPPED_MAPS[source](cell_size=cell_size, scores=scores)
    try:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read map {source!r}: {exc}")
    return load_mask_map(text, cell_size=cell_size, scores=scores)
