"""Tour of the four generation algorithms and the DFS constraints.

Each algorithm writes the same connection-list format, so everything
downstream (solving, formats, datasets) works with any of them.
"""

import numpy as np

from mazeforge import (
    DfsParams,
    PercolationParams,
    gen_dfs,
    gen_dfs_percolation,
    gen_percolation,
    gen_wilson,
)

rng = np.random.default_rng(21)
ROWS = COLS = 6


def describe(label, maze):
    comp = maze.largest_component()
    print(f"{label:36} edges={maze.n_connections:3}  largest component={len(comp):3}")


describe("gen_dfs (spanning tree)", gen_dfs(ROWS, COLS, rng))
describe("gen_wilson (uniform spanning tree)", gen_wilson(ROWS, COLS, rng))

# Percolation keeps each candidate connection independently with
# probability p; the result is usually disconnected and cyclic.
describe("gen_percolation p=0.3", gen_percolation(ROWS, COLS, rng, PercolationParams(p=0.3)))
describe("gen_percolation p=0.7", gen_percolation(ROWS, COLS, rng, PercolationParams(p=0.7)))

# The union of a DFS tree and a percolation draw stays connected but
# gains cycles, useful for mazes with more than one route.
describe(
    "gen_dfs_percolation p=0.2",
    gen_dfs_percolation(ROWS, COLS, rng, DfsParams(), PercolationParams(p=0.2)),
)

print()
print("constrained DFS variants:")

# Budget on how many cells the walk may ever visit (absolute or fraction).
describe("  accessible_cells=12", gen_dfs(ROWS, COLS, rng, DfsParams(accessible_cells=12)))

# Cap on how deep the walk may recurse from its start cell.
describe("  max_tree_depth=0.25", gen_dfs(ROWS, COLS, rng, DfsParams(max_tree_depth=0.25)))

# Without forks the walk stops at its first dead end: a single corridor.
corridor = gen_dfs(ROWS, COLS, rng, DfsParams(do_forks=False))
describe("  do_forks=False", corridor)
