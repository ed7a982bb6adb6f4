"""Maze generation algorithms.

All generators write the same LatticeMaze format and draw every random
decision from a caller-supplied numpy Generator, so a stream seed fully
determines the output maze.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .lattice import Coord, LatticeMaze


def _resolve_cell_quantity(value, total: int, name: str) -> int:
    """Resolve an absolute-or-fractional parameter against a cell total.

    Values in (0, 1) are fractions of the total cell count; values >= 1 are
    absolute counts. The result is clamped to [1, total].
    """
    if isinstance(value, float) and 0 < value < 1:
        resolved = int(value * total)
    else:
        resolved = int(value)
    if resolved < 1:
        raise ValueError(f"{name}={value!r} resolves to {resolved}, must be at least 1")
    return min(resolved, total)


@dataclass(frozen=True)
class DfsParams:
    """Constraints on the randomized depth-first search generator.

    accessible_cells and max_tree_depth accept an absolute integer or a
    fraction in (0, 1) of the total cell count. do_forks=False turns the
    search into a single self-avoiding walk that stops at its first dead end.
    """

    accessible_cells: int | float | None = None
    do_forks: bool = True
    max_tree_depth: int | float | None = None
    start_coord: Coord | None = None

    def __post_init__(self):
        for name in ("accessible_cells", "max_tree_depth"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive, got {value!r}")
        if self.start_coord is not None:
            r, c = self.start_coord
            object.__setattr__(self, "start_coord", (int(r), int(c)))

    def as_dict(self) -> dict:
        out: dict = {}
        if self.accessible_cells is not None:
            out["accessible_cells"] = self.accessible_cells
        if not self.do_forks:
            out["do_forks"] = False
        if self.max_tree_depth is not None:
            out["max_tree_depth"] = self.max_tree_depth
        if self.start_coord is not None:
            out["start_coord"] = list(self.start_coord)
        return out


@dataclass(frozen=True)
class PercolationParams:
    """Independent edge-inclusion probability."""

    p: float

    def __post_init__(self):
        if not 0 <= self.p <= 1:
            raise ValueError(f"p must be in [0, 1], got {self.p!r}")

    def as_dict(self) -> dict:
        return {"p": self.p}


def gen_dfs(
    rows: int, cols: int, rng: np.random.Generator, params: DfsParams | None = None
) -> LatticeMaze:
    """Randomized depth-first search.

    Unconstrained, the walk visits every cell and the result is a spanning
    tree. accessible_cells caps how many cells are ever visited,
    max_tree_depth caps how far the walk may recurse from the start, and
    do_forks=False stops the whole walk at the first dead end, producing a
    single corridor. Constrained outputs are trees on the visited subset.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"grid must be at least 1x1, got {rows}x{cols}")
    params = params or DfsParams()
    total = rows * cols
    budget = (
        total
        if params.accessible_cells is None
        else _resolve_cell_quantity(params.accessible_cells, total, "accessible_cells")
    )
    max_depth = (
        None
        if params.max_tree_depth is None
        else _resolve_cell_quantity(params.max_tree_depth, total, "max_tree_depth")
    )
    if params.start_coord is None:
        start = (int(rng.integers(rows)), int(rng.integers(cols)))
    else:
        start = params.start_coord
        if not (0 <= start[0] < rows and 0 <= start[1] < cols):
            raise ValueError(f"start_coord {start} out of bounds for {rows}x{cols}")

    conn = np.zeros((2, rows, cols), dtype=bool)
    visited = np.zeros((rows, cols), dtype=bool)
    visited[start] = True
    n_visited = 1
    stack: list[tuple[int, int, int]] = [(start[0], start[1], 0)]

    while stack:
        if n_visited >= budget:
            break
        r, c, depth = stack[-1]
        if max_depth is not None and depth >= max_depth:
            if not params.do_forks:
                break
            stack.pop()
            continue
        candidates = []
        if r + 1 < rows and not visited[r + 1, c]:
            candidates.append((r + 1, c))
        if c + 1 < cols and not visited[r, c + 1]:
            candidates.append((r, c + 1))
        if r > 0 and not visited[r - 1, c]:
            candidates.append((r - 1, c))
        if c > 0 and not visited[r, c - 1]:
            candidates.append((r, c - 1))
        if not candidates:
            if not params.do_forks:
                break
            stack.pop()
            continue
        nr, nc = candidates[int(rng.integers(len(candidates)))]
        if nr != r:
            conn[0, min(r, nr), c] = True
        else:
            conn[1, r, min(c, nc)] = True
        visited[nr, nc] = True
        n_visited += 1
        stack.append((nr, nc, depth + 1))

    return LatticeMaze(conn, {"algorithm": "gen_dfs", "params": params.as_dict()})


@lru_cache(maxsize=None)
def _lattice_neighbor_table(rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    """Flat-index adjacency table for the full rows x cols lattice."""
    table = []
    for r in range(rows):
        for c in range(cols):
            nbrs = []
            if r + 1 < rows:
                nbrs.append((r + 1) * cols + c)
            if c + 1 < cols:
                nbrs.append(r * cols + c + 1)
            if r > 0:
                nbrs.append((r - 1) * cols + c)
            if c > 0:
                nbrs.append(r * cols + c - 1)
            table.append(tuple(nbrs))
    return tuple(table)


def gen_wilson(rows: int, cols: int, rng: np.random.Generator) -> LatticeMaze:
    """Uniformly random spanning tree, built from loop-erased random walks.

    A random root seeds the tree; from each remaining cell a random walk runs
    until it touches the tree, loops are erased as they close (each revisit
    overwrites the stored successor), and the surviving walk joins the tree.
    Every spanning tree of the lattice is produced with equal probability.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"grid must be at least 1x1, got {rows}x{cols}")
    n = rows * cols
    conn = np.zeros((2, rows, cols), dtype=bool)
    meta = {"algorithm": "gen_wilson", "params": {}}
    if n == 1:
        return LatticeMaze(conn, meta)

    nbrs = _lattice_neighbor_table(rows, cols)
    in_tree = np.zeros(n, dtype=bool)
    in_tree[int(rng.integers(n))] = True
    successor = [0] * n

    for start in range(n):
        if in_tree[start]:
            continue
        u = start
        while not in_tree[u]:
            options = nbrs[u]
            v = options[int(rng.integers(len(options)))]
            successor[u] = v
            u = v
        u = start
        while not in_tree[u]:
            v = successor[u]
            ur, uc = divmod(u, cols)
            vr, vc = divmod(v, cols)
            if ur != vr:
                conn[0, min(ur, vr), uc] = True
            else:
                conn[1, ur, min(uc, vc)] = True
            in_tree[u] = True
            u = v

    return LatticeMaze(conn, meta)


def gen_percolation(
    rows: int, cols: int, rng: np.random.Generator, params: PercolationParams
) -> LatticeMaze:
    """Bond percolation: every candidate connection is included independently
    with probability p. The output may be disconnected and may contain cycles."""
    if rows < 1 or cols < 1:
        raise ValueError(f"grid must be at least 1x1, got {rows}x{cols}")
    p = params.p
    conn = np.zeros((2, rows, cols), dtype=bool)
    if rows > 1:
        conn[0, :-1, :] = rng.random((rows - 1, cols)) < p
    if cols > 1:
        conn[1, :, :-1] = rng.random((rows, cols - 1)) < p
    return LatticeMaze(conn, {"algorithm": "gen_percolation", "params": params.as_dict()})


def gen_dfs_percolation(
    rows: int,
    cols: int,
    rng: np.random.Generator,
    dfs: DfsParams | None = None,
    perc: PercolationParams | None = None,
) -> LatticeMaze:
    """Union of a DFS maze and a percolation maze drawn from the same stream,
    DFS first. With an unconstrained DFS the result is connected and, for
    p > 0, generally cyclic."""
    if perc is None:
        raise ValueError("gen_dfs_percolation requires a percolation probability p")
    dfs = dfs or DfsParams()
    dfs_maze = gen_dfs(rows, cols, rng, dfs)
    perc_maze = gen_percolation(rows, cols, rng, perc)
    conn = dfs_maze.connection_list | perc_maze.connection_list
    meta = {
        "algorithm": "gen_dfs_percolation",
        "params": {**dfs.as_dict(), **perc.as_dict()},
    }
    return LatticeMaze(conn, meta)


# -- registry ----------------------------------------------------------------
# Stable algorithm names used by dataset configs and the CLI.


def _dfs_params(params: dict) -> DfsParams:
    if "start_coord" in params and params["start_coord"] is not None:
        params = {**params, "start_coord": tuple(params["start_coord"])}
    try:
        return DfsParams(**params)
    except TypeError as exc:
        raise ValueError(str(exc)) from exc


def _percolation_params(params: dict) -> PercolationParams:
    try:
        return PercolationParams(**params)
    except TypeError as exc:
        raise ValueError(str(exc)) from exc


def _make_dfs(rows, cols, rng, **params):
    return gen_dfs(rows, cols, rng, _dfs_params(params))


def _make_wilson(rows, cols, rng, **params):
    if params:
        raise ValueError(f"gen_wilson takes no parameters, got {sorted(params)}")
    return gen_wilson(rows, cols, rng)


def _make_percolation(rows, cols, rng, **params):
    return gen_percolation(rows, cols, rng, _percolation_params(params))


def _make_dfs_percolation(rows, cols, rng, **params):
    if "p" not in params:
        raise ValueError("gen_dfs_percolation requires parameter p")
    p = params.pop("p")
    return gen_dfs_percolation(rows, cols, rng, _dfs_params(params), PercolationParams(p=p))


GENERATORS = {
    "gen_dfs": _make_dfs,
    "gen_wilson": _make_wilson,
    "gen_percolation": _make_percolation,
    "gen_dfs_percolation": _make_dfs_percolation,
}


def validate_generator_params(generator: str, params: dict) -> None:
    """Check an algorithm name and its flat parameter map, raising ValueError
    on unknown names, unknown keys, or out-of-range values."""
    if generator not in GENERATORS:
        raise ValueError(
            f"unknown algorithm {generator!r}; available: {', '.join(sorted(GENERATORS))}"
        )
    params = dict(params)
    if generator == "gen_wilson":
        if params:
            raise ValueError(f"gen_wilson takes no parameters, got {sorted(params)}")
        return
    if generator == "gen_percolation":
        _percolation_params(params)
        return
    if generator == "gen_dfs_percolation":
        if "p" not in params:
            raise ValueError("gen_dfs_percolation requires parameter p")
        PercolationParams(p=params.pop("p"))
    _dfs_params(params)
