import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mazeforge import (
    DfsParams,
    PercolationParams,
    SolvedMaze,
    gen_dfs,
    gen_dfs_percolation,
    gen_percolation,
    gen_wilson,
)


def random_maze(kind: str, rows: int, cols: int, rng: np.random.Generator):
    """One maze from the named generator with a usable default parameterization."""
    if kind == "gen_dfs":
        return gen_dfs(rows, cols, rng)
    if kind == "gen_wilson":
        return gen_wilson(rows, cols, rng)
    if kind == "gen_percolation":
        return gen_percolation(rows, cols, rng, PercolationParams(p=0.6))
    if kind == "gen_dfs_percolation":
        return gen_dfs_percolation(rows, cols, rng, DfsParams(), PercolationParams(p=0.3))
    raise ValueError(kind)


def random_solved(kind: str, rows: int, cols: int, rng: np.random.Generator) -> SolvedMaze:
    """A solved maze; retries unsolvable draws (possible under percolation)."""
    while True:
        maze = random_maze(kind, rows, cols, rng)
        comp = maze.largest_component()
        if len(comp) >= 2:
            origin, target = maze.select_endpoints(rng)
            return SolvedMaze.solve(maze, origin, target)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
