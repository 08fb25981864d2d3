"""Grid world: cell lattice, importance classes, adjacency, map builders.

Cells are addressed by 1-based (x, y) with x the column and y the row;
row y=1 is the first line of a mask file (top of the rendered map).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from .errors import (
    BoundsError,
    ConflictError,
    CovarianceError,
    DimensionError,
    MaskAlphabetError,
    MaskShapeError,
    ThresholdError,
)


class Cell(NamedTuple):
    x: int
    y: int


# Importance classes, lowest to highest.
CLASSES = ("zero", "low", "medium", "high")

DEFAULT_SCORES = {"zero": 0, "low": 1, "medium": 10, "high": 100}

# Mask file alphabet: Blue ocean, Green low, Yellow medium, Red high.
CHAR_TO_CLASS = {"B": "zero", "G": "low", "Y": "medium", "R": "high"}
CLASS_TO_CHAR = {v: k for k, v in CHAR_TO_CLASS.items()}


@dataclass(frozen=True)
class GridMap:
    """Immutable rectangular lattice with a per-cell importance class.

    `classes` is stored row-major: classes[y-1][x-1] is the class of cell
    (x, y). Scores map each class name to its importance value.
    """

    width: int
    height: int
    cell_size: float
    classes: tuple
    scores: dict = field(default_factory=lambda: dict(DEFAULT_SCORES))

    def in_bounds(self, cell) -> bool:
        x, y = cell
        return 1 <= x <= self.width and 1 <= y <= self.height

    def require_in_bounds(self, cell) -> None:
        if not self.in_bounds(cell):
            raise BoundsError(f"cell {tuple(cell)} outside {self.width}x{self.height} grid")

    def class_at(self, cell) -> str:
        self.require_in_bounds(cell)
        x, y = cell
        return self.classes[y - 1][x - 1]

    def importance(self, cell):
        """Importance score gamma for one cell."""
        return self.scores[self.class_at(cell)]

    def cells(self) -> Iterator[Cell]:
        """All cells in row-major order (y, then x)."""
        for y in range(1, self.height + 1):
            for x in range(1, self.width + 1):
                yield Cell(x, y)


def _check_dimensions(width: int, height: int, cell_size) -> None:
    if width < 1 or height < 1:
        raise DimensionError(f"grid dimensions must be >= 1, got {width}x{height}")
    if cell_size <= 0:
        raise DimensionError(f"cell size must be positive, got {cell_size}")


def build_grid(width, height, cell_size, assignments, scores=None) -> GridMap:
    """Build a map from explicit (cell, class) assignments.

    Unassigned cells default to class "zero". Duplicate assignments for
    one cell conflict even if they agree.
    """
    _check_dimensions(width, height, cell_size)
    table = [["zero"] * width for _ in range(height)]
    seen = set()
    for cell, cls in assignments:
        x, y = cell
        if not (1 <= x <= width and 1 <= y <= height):
            raise BoundsError(f"assignment {tuple(cell)} outside {width}x{height} grid")
        if cls not in CLASSES:
            raise MaskAlphabetError(f"unknown importance class {cls!r}")
        if (x, y) in seen:
            raise ConflictError(f"duplicate assignment for cell {(x, y)}")
        seen.add((x, y))
        table[y - 1][x - 1] = cls
    return GridMap(width, height, cell_size,
                   tuple(tuple(row) for row in table),
                   dict(scores) if scores else dict(DEFAULT_SCORES))


def load_mask_map(text: str, cell_size=1, scores=None) -> GridMap:
    """Parse a character mask ({B,G,Y,R} rows) into a GridMap."""
    lines = [ln for ln in text.splitlines() if ln.strip() != ""]
    if not lines:
        raise MaskShapeError("mask text is empty")
    width = len(lines[0])
    rows = []
    for i, line in enumerate(lines):
        if len(line) != width:
            raise MaskShapeError(f"row {i + 1} has length {len(line)}, expected {width}")
        row = []
        for ch in line:
            if ch not in CHAR_TO_CLASS:
                raise MaskAlphabetError(f"unknown mask character {ch!r} in row {i + 1}")
            row.append(CHAR_TO_CLASS[ch])
        rows.append(tuple(row))
    _check_dimensions(width, len(rows), cell_size)
    return GridMap(width, len(rows), cell_size, tuple(rows),
                   dict(scores) if scores else dict(DEFAULT_SCORES))


def dump_mask_map(grid: GridMap) -> str:
    """Serialize a GridMap back to mask text (round-trips load_mask_map)."""
    return "\n".join(
        "".join(CLASS_TO_CHAR[grid.classes[y][x]] for x in range(grid.width))
        for y in range(grid.height)
    )


def generate_gaussian_map(width, height, mean, covariance, thresholds,
                          seed=0, cell_size=1, scores=None) -> GridMap:
    """Threshold a bivariate normal density at cell centers into classes.

    Density >= t_high is "high", >= t_med "medium", >= t_low "low", else
    "zero". The construction is fully deterministic; `seed` is recorded
    in run metadata only.
    """
    _check_dimensions(width, height, cell_size)
    cov = np.asarray(covariance, dtype=float)
    if cov.shape != (2, 2) or not np.allclose(cov, cov.T):
        raise CovarianceError(f"covariance must be symmetric 2x2, got {cov.tolist()}")
    try:
        np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        raise CovarianceError(f"covariance {cov.tolist()} is not positive definite")
    t_high, t_med, t_low = thresholds
    if not (t_high > t_med > t_low > 0):
        raise ThresholdError(f"thresholds must satisfy t_high > t_med > t_low > 0, got {thresholds}")

    inv = np.linalg.inv(cov)
    norm = 1.0 / (2.0 * math.pi * math.sqrt(np.linalg.det(cov)))
    mx, my = float(mean[0]), float(mean[1])
    rows = []
    for y in range(1, height + 1):
        row = []
        for x in range(1, width + 1):
            d = np.array([x - mx, y - my])
            density = norm * math.exp(-0.5 * d @ inv @ d)
            if density >= t_high:
                row.append("high")
            elif density >= t_med:
                row.append("medium")
            elif density >= t_low:
                row.append("low")
            else:
                row.append("zero")
        rows.append(tuple(row))
    return GridMap(width, height, cell_size, tuple(rows),
                   dict(scores) if scores else dict(DEFAULT_SCORES))


def manhattan(a, b) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def neighbors(grid: GridMap, cell) -> list:
    """4-adjacent in-bounds cells, in fixed order: up, down, left, right."""
    grid.require_in_bounds(cell)
    x, y = cell
    out = []
    for nx, ny in ((x, y - 1), (x, y + 1), (x - 1, y), (x + 1, y)):
        if 1 <= nx <= grid.width and 1 <= ny <= grid.height:
            out.append(Cell(nx, ny))
    return out
