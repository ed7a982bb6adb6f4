"""Lattice maze representation, connectivity analysis, and shortest-path solving.

A maze is a sub-graph of the 2D grid lattice. Connections are stored in a
boolean array of shape (2, rows, cols): plane 0 holds downward connections
(cell (i,j) to (i+1,j)), plane 1 holds rightward connections (cell (i,j) to
(i,j+1)). Each undirected lattice edge is therefore stored exactly once.
The last row of the down plane and the last column of the right plane are
kept all-False so the graph never wraps around the grid edge.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque

import numpy as np

Coord = tuple[int, int]

# (dr, dc) offsets in the fixed expansion order: down, right, up, left.
_DIRECTIONS = ((1, 0), (0, 1), (-1, 0), (0, -1))


class NoPathError(Exception):
    """Raised when no path exists between the requested endpoints."""


class UnsolvableMazeError(Exception):
    """Raised when a maze has no component large enough to place endpoints."""


def candidate_connection_count(rows: int, cols: int) -> int:
    """Number of lattice edges a rows x cols maze can possibly contain."""
    return rows * (cols - 1) + (rows - 1) * cols


class LatticeMaze:
    """Immutable maze over a rows x cols lattice.

    Equality and hashing consider only the grid shape and connection bits;
    ``generation_meta`` (algorithm name, parameters, per-maze seed) is
    carried along for provenance but never affects comparisons.
    """

    __slots__ = ("_cl", "generation_meta")

    def __init__(self, connection_list, generation_meta: dict | None = None):
        cl = np.array(connection_list, dtype=bool)
        if cl.ndim != 3 or cl.shape[0] != 2:
            raise ValueError(
                f"connection list must have shape (2, rows, cols), got {cl.shape}"
            )
        rows, cols = int(cl.shape[1]), int(cl.shape[2])
        if rows < 1 or cols < 1:
            raise ValueError(f"grid must be at least 1x1, got {rows}x{cols}")
        if cl[0, -1, :].any() or cl[1, :, -1].any():
            raise ValueError(
                "periodic guard violated: last row of the down plane and last "
                "column of the right plane must be all False"
            )
        cl.setflags(write=False)
        self._cl = cl
        self.generation_meta = generation_meta

    @classmethod
    def empty(cls, rows: int, cols: int) -> "LatticeMaze":
        """A maze of the given shape with no connections."""
        if not isinstance(rows, (int, np.integer)) or not isinstance(cols, (int, np.integer)):
            raise ValueError(f"dimensions must be integers, got {rows!r}, {cols!r}")
        if rows < 1 or cols < 1:
            raise ValueError(f"grid must be at least 1x1, got {rows}x{cols}")
        return cls(np.zeros((2, rows, cols), dtype=bool))

    # -- basic geometry ----------------------------------------------------

    @property
    def rows(self) -> int:
        return self._cl.shape[1]

    @property
    def cols(self) -> int:
        return self._cl.shape[2]

    @property
    def grid_shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def connection_list(self) -> np.ndarray:
        """Read-only (2, rows, cols) boolean array of connections."""
        return self._cl

    @property
    def down(self) -> np.ndarray:
        return self._cl[0]

    @property
    def right(self) -> np.ndarray:
        return self._cl[1]

    @property
    def n_connections(self) -> int:
        """Number of connections (edges) present."""
        return int(np.count_nonzero(self._cl))

    def with_meta(self, generation_meta: dict | None) -> "LatticeMaze":
        """Copy of this maze carrying different generation metadata."""
        return LatticeMaze(self._cl, generation_meta)

    def _check_bounds(self, c: Coord) -> None:
        r, k = c
        if not (0 <= r < self.rows and 0 <= k < self.cols):
            raise ValueError(f"coordinate {c} out of bounds for {self.rows}x{self.cols} maze")

    # -- adjacency ---------------------------------------------------------

    def has_connection(self, a: Coord, b: Coord) -> bool:
        """True iff a and b are lattice-adjacent and connected in this maze.

        Symmetric in its arguments; non-adjacent pairs are never connected.
        """
        self._check_bounds(a)
        self._check_bounds(b)
        (ar, ac), (br, bc) = a, b
        if ar == br and abs(ac - bc) == 1:
            return bool(self._cl[1, ar, min(ac, bc)])
        if ac == bc and abs(ar - br) == 1:
            return bool(self._cl[0, min(ar, br), ac])
        return False

    def neighbors(self, c: Coord) -> list[Coord]:
        """Connected neighbors of c, in the fixed order down, right, up, left."""
        self._check_bounds(c)
        r, k = c
        cl = self._cl
        out = []
        if r + 1 < self.rows and cl[0, r, k]:
            out.append((r + 1, k))
        if k + 1 < self.cols and cl[1, r, k]:
            out.append((r, k + 1))
        if r > 0 and cl[0, r - 1, k]:
            out.append((r - 1, k))
        if k > 0 and cl[1, r, k - 1]:
            out.append((r, k - 1))
        return out

    # -- connectivity ------------------------------------------------------

    def connected_component(self, start: Coord) -> set[Coord]:
        """All coordinates reachable from start, including start itself."""
        self._check_bounds(start)
        seen = {start}
        queue = deque((start,))
        while queue:
            cur = queue.popleft()
            for nb in self.neighbors(cur):
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return seen

    def components(self) -> list[set[Coord]]:
        """All connected components, ordered by their smallest (row, col) member."""
        out: list[set[Coord]] = []
        seen: set[Coord] = set()
        for r in range(self.rows):
            for k in range(self.cols):
                if (r, k) not in seen:
                    comp = self.connected_component((r, k))
                    seen |= comp
                    out.append(comp)
        return out

    def largest_component(self) -> set[Coord]:
        """Maximum-cardinality component; ties go to the one containing the
        lexicographically smallest (row, col) cell."""
        best: set[Coord] | None = None
        for comp in self.components():
            if best is None or len(comp) > len(best):
                best = comp
        assert best is not None
        return best

    # -- solving -----------------------------------------------------------

    def shortest_path(self, origin: Coord, target: Coord) -> tuple[Coord, ...]:
        """Shortest path from origin to target by edge count, as an A* search.

        Uses the Manhattan-distance heuristic (admissible on a unit-cost
        lattice). Deterministic: neighbors are expanded in the fixed order of
        ``neighbors`` and equal-f frontier entries pop in FIFO order.

        Raises NoPathError if target is unreachable from origin.
        """
        self._check_bounds(origin)
        self._check_bounds(target)
        tr, tc = target

        counter = itertools.count()
        g_score: dict[Coord, int] = {origin: 0}
        parent: dict[Coord, Coord] = {}
        frontier: list[tuple[int, int, Coord]] = [
            (abs(origin[0] - tr) + abs(origin[1] - tc), next(counter), origin)
        ]
        closed: set[Coord] = set()

        while frontier:
            _, _, cur = heapq.heappop(frontier)
            if cur == target:
                path = [cur]
                while cur in parent:
                    cur = parent[cur]
                    path.append(cur)
                path.reverse()
                return tuple(path)
            if cur in closed:
                continue
            closed.add(cur)
            g_cur = g_score[cur]
            for nb in self.neighbors(cur):
                tentative = g_cur + 1
                if nb in g_score and tentative >= g_score[nb]:
                    continue
                g_score[nb] = tentative
                parent[nb] = cur
                f = tentative + abs(nb[0] - tr) + abs(nb[1] - tc)
                heapq.heappush(frontier, (f, next(counter), nb))

        raise NoPathError(f"no path from {origin} to {target}")

    def select_endpoints(
        self, rng: np.random.Generator, min_component_size: int = 2
    ) -> tuple[Coord, Coord]:
        """Two distinct cells drawn uniformly without replacement from the
        largest connected component.

        Raises UnsolvableMazeError if that component is smaller than
        max(2, min_component_size).
        """
        comp = self.largest_component()
        need = max(2, min_component_size)
        if len(comp) < need:
            raise UnsolvableMazeError(
                f"largest component has {len(comp)} cells, need at least {need}"
            )
        cells = sorted(comp)
        i, j = rng.choice(len(cells), size=2, replace=False)
        return cells[int(i)], cells[int(j)]

    # -- comparisons -------------------------------------------------------

    def __reduce__(self):
        # Re-run __init__ on unpickle so the guard check and the read-only
        # flag survive process boundaries.
        return (LatticeMaze, (np.asarray(self._cl), self.generation_meta))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeMaze):
            return NotImplemented
        return self._cl.shape == other._cl.shape and bool(np.array_equal(self._cl, other._cl))

    def __hash__(self) -> int:
        return hash((self._cl.shape, self._cl.tobytes()))

    def __repr__(self) -> str:
        return f"LatticeMaze({self.rows}x{self.cols}, {self.n_connections} connections)"


class SolvedMaze:
    """A maze together with an origin, a target, and a path between them.

    The path must start at origin, end at target, visit no cell twice, and
    move only along existing connections. Origin and target are distinct.
    """

    __slots__ = ("maze", "origin", "target", "solution")

    def __init__(self, maze: LatticeMaze, origin: Coord, target: Coord, solution):
        origin = (int(origin[0]), int(origin[1]))
        target = (int(target[0]), int(target[1]))
        solution = tuple((int(r), int(c)) for r, c in solution)
        if not solution:
            raise ValueError("solution must not be empty")
        if origin == target:
            raise ValueError("origin and target must differ")
        if solution[0] != origin:
            raise ValueError(f"solution starts at {solution[0]}, expected origin {origin}")
        if solution[-1] != target:
            raise ValueError(f"solution ends at {solution[-1]}, expected target {target}")
        if len(set(solution)) != len(solution):
            raise ValueError("solution revisits a cell")
        for a, b in zip(solution, solution[1:]):
            if not maze.has_connection(a, b):
                raise ValueError(f"solution step {a} -> {b} is not a connection")
        self.maze = maze
        self.origin = origin
        self.target = target
        self.solution = solution

    @classmethod
    def solve(cls, maze: LatticeMaze, origin: Coord, target: Coord) -> "SolvedMaze":
        """Solve the maze between the given endpoints with A*."""
        return cls(maze, origin, target, maze.shortest_path(origin, target))

    @property
    def grid_shape(self) -> tuple[int, int]:
        return self.maze.grid_shape

    def __reduce__(self):
        return (SolvedMaze, (self.maze, self.origin, self.target, self.solution))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SolvedMaze):
            return NotImplemented
        return (
            self.maze == other.maze
            and self.origin == other.origin
            and self.target == other.target
            and self.solution == other.solution
        )

    def __hash__(self) -> int:
        return hash((self.maze, self.origin, self.target, self.solution))

    def __repr__(self) -> str:
        return (
            f"SolvedMaze({self.maze.rows}x{self.maze.cols}, "
            f"{self.origin} -> {self.target}, {len(self.solution)} cells)"
        )
