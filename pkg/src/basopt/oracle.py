"""Brute-force references for validating the search and its objectives.

``grid_search`` exhaustively evaluates an axis-aligned lattice and is the
ground truth the test suite checks objectives and thresholds against.
``random_search_baseline`` spends a fixed evaluation budget on uniform
samples; it exists so "the beetle beats blind sampling at equal budget" is
a checkable statement rather than a slogan.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Array, _as_box
from .objectives import Objective

_CHUNK = 1 << 16


@dataclass(frozen=True)
class GridSpec:
    """Axis-aligned lattice: per-axis (lo, hi) bounds and points per axis."""

    box: tuple
    resolution: int
    max_nodes: int = 10 ** 8  # runtime guard for resolution ** k

    def __post_init__(self):
        object.__setattr__(self, "box", _as_box(self.box, None, "box"))
        if self.resolution < 2:
            raise ValueError(f"resolution must be >= 2, got {self.resolution}")
        if self.max_nodes < 1:
            raise ValueError(f"max_nodes must be >= 1, got {self.max_nodes}")
        if self.n_nodes > self.max_nodes:
            raise ValueError(
                f"grid of {self.n_nodes} nodes exceeds the cap of {self.max_nodes}")

    @property
    def dimension(self) -> int:
        return len(self.box)

    @property
    def n_nodes(self) -> int:
        return self.resolution ** self.dimension


def _axis(lo: float, hi: float, resolution: int) -> Array:
    # (i * span) / steps keeps rational nodes exact: e.g. [-2, 2] at
    # resolution 401 contains 0.0 and -1.0 bit-exactly.
    nodes = lo + (np.arange(resolution) * (hi - lo)) / (resolution - 1)
    nodes[-1] = hi
    return nodes


def grid_search(objective: Objective, grid: GridSpec) -> tuple[Array, float]:
    """Minimize over every lattice node; ties go to the lexicographically
    smallest coordinates."""
    if grid.dimension != objective.dimension:
        raise ValueError(
            f"grid has {grid.dimension} axes but {objective.name} expects {objective.dimension}")

    axes = [_axis(lo, hi, grid.resolution) for lo, hi in grid.box]
    shape = (grid.resolution,) * grid.dimension
    total = grid.n_nodes

    best_value = np.inf
    best_flat = -1
    # Enumerate nodes in C order = lexicographic coordinate order, so the
    # first occurrence of the minimum is the lexicographic tie-winner.
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(start + _CHUNK, total))
        multi = np.unravel_index(flat, shape)
        points = np.stack([axes[j][multi[j]] for j in range(grid.dimension)], axis=-1)
        values = objective.batch(points)
        i = int(np.argmin(values))
        if values[i] < best_value:
            best_value = float(values[i])
            best_flat = int(flat[i])

    multi = np.unravel_index(best_flat, shape)
    best_point = np.array([axes[j][multi[j]] for j in range(grid.dimension)])
    return best_point, best_value


def random_search_baseline(objective: Objective, box, n_evals: int,
                           rng: np.random.Generator) -> tuple[Array, float]:
    """Best of ``n_evals`` uniform samples in ``box``; ties go to the
    earliest sample."""
    box = np.asarray(_as_box(box, objective.dimension, "box"), dtype=float)
    if n_evals < 1:
        raise ValueError(f"n_evals must be >= 1, got {n_evals}")
    best_value = np.inf
    best_point = None
    for start in range(0, n_evals, _CHUNK):
        count = min(_CHUNK, n_evals - start)
        points = rng.uniform(box[:, 0], box[:, 1], size=(count, objective.dimension))
        values = objective.batch(points)
        i = int(np.argmin(values))
        if values[i] < best_value:
            best_value = float(values[i])
            best_point = points[i].copy()
    return best_point, best_value
