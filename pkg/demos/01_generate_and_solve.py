"""Generate a single maze, pick endpoints, solve it, and print it.

Every random decision flows through a numpy Generator, so the same seed
always reproduces the same maze.
"""

import numpy as np

from mazeforge import SolvedMaze, gen_dfs, to_ascii

rng = np.random.default_rng(7)

# A randomized depth-first search maze is a spanning tree: every cell is
# reachable and there is exactly one path between any two cells.
maze = gen_dfs(8, 8, rng)
print(f"maze: {maze}")
print(f"edges: {maze.n_connections} (spanning tree of 64 cells has 63)")

# Endpoints are drawn uniformly from the largest connected component,
# then A* finds the shortest path between them.
origin, target = maze.select_endpoints(rng)
solved = SolvedMaze.solve(maze, origin, target)
print(f"origin {solved.origin} -> target {solved.target}, "
      f"{len(solved.solution) - 1} steps")
print()
print("\n".join(to_ascii(solved)))
