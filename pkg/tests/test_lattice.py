import numpy as np
import pytest

from mazeforge import (
    LatticeMaze,
    NoPathError,
    SolvedMaze,
    UnsolvableMazeError,
    candidate_connection_count,
    gen_dfs,
)
from oracles import bfs_shortest_path_length, component_of
from conftest import random_maze


def full_maze(rows, cols):
    cl = np.zeros((2, rows, cols), dtype=bool)
    cl[0, :-1, :] = True
    cl[1, :, :-1] = True
    return LatticeMaze(cl)


class TestEmpty:
    def test_1x1_has_no_candidate_connections(self):
        maze = LatticeMaze.empty(1, 1)
        assert candidate_connection_count(1, 1) == 0
        assert maze.n_connections == 0

    def test_2x2_candidate_slots(self):
        maze = LatticeMaze.empty(2, 2)
        assert candidate_connection_count(2, 2) == 4
        assert maze.n_connections == 0
        assert not maze.connection_list.any()

    def test_5x5_candidate_slots_match_enumeration(self):
        # independent count: enumerate adjacent cell pairs
        pairs = 0
        for r in range(5):
            for c in range(5):
                if r + 1 < 5:
                    pairs += 1
                if c + 1 < 5:
                    pairs += 1
        assert pairs == 40
        assert candidate_connection_count(5, 5) == 40

    @pytest.mark.parametrize("rows,cols", [(0, 3), (3, 0), (-1, 2)])
    def test_bad_dimensions_rejected(self, rows, cols):
        with pytest.raises(ValueError):
            LatticeMaze.empty(rows, cols)

    def test_guard_bits_rejected(self):
        cl = np.zeros((2, 3, 3), dtype=bool)
        cl[0, 2, 1] = True  # down from the last row
        with pytest.raises(ValueError):
            LatticeMaze(cl)
        cl = np.zeros((2, 3, 3), dtype=bool)
        cl[1, 0, 2] = True  # right from the last column
        with pytest.raises(ValueError):
            LatticeMaze(cl)

    def test_immutable(self):
        maze = LatticeMaze.empty(2, 2)
        with pytest.raises(ValueError):
            maze.connection_list[0, 0, 0] = True


class TestHasConnection:
    def test_empty_maze_has_none(self):
        maze = LatticeMaze.empty(2, 2)
        assert maze.has_connection((0, 0), (0, 1)) is False

    def test_symmetric_on_stored_down_bit(self):
        cl = np.zeros((2, 2, 1), dtype=bool)
        cl[0, 0, 0] = True
        maze = LatticeMaze(cl)
        assert maze.has_connection((1, 0), (0, 0)) is True
        assert maze.has_connection((0, 0), (1, 0)) is True

    def test_non_adjacent_pairs_false(self):
        maze = full_maze(3, 3)
        assert maze.has_connection((0, 0), (1, 1)) is False
        assert maze.has_connection((0, 0), (0, 2)) is False
        assert maze.has_connection((0, 0), (0, 0)) is False

    def test_out_of_bounds_rejected(self):
        maze = LatticeMaze.empty(2, 2)
        with pytest.raises(ValueError):
            maze.has_connection((0, 0), (0, 2))

    def test_symmetry_on_random_mazes(self, rng):
        for _ in range(20):
            maze = random_maze("gen_percolation", 4, 5, rng)
            for r in range(4):
                for c in range(5):
                    for nr, nc in ((r + 1, c), (r, c + 1)):
                        if nr < 4 and nc < 5:
                            assert maze.has_connection((r, c), (nr, nc)) == maze.has_connection(
                                (nr, nc), (r, c)
                            )


class TestNeighbors:
    def test_empty_maze_no_neighbors(self):
        assert LatticeMaze.empty(3, 3).neighbors((0, 0)) == []

    def test_order_down_right_up_left(self):
        maze = full_maze(2, 2)
        assert maze.neighbors((0, 0)) == [(1, 0), (0, 1)]
        assert maze.neighbors((1, 1)) == [(0, 1), (1, 0)]

    def test_full_interior_order(self):
        maze = full_maze(3, 3)
        assert maze.neighbors((1, 1)) == [(2, 1), (1, 2), (0, 1), (1, 0)]

    def test_out_of_bounds_rejected(self):
        with pytest.raises(ValueError):
            LatticeMaze.empty(2, 2).neighbors((2, 0))


class TestComponents:
    def test_isolated_cell(self):
        assert LatticeMaze.empty(3, 3).connected_component((0, 0)) == {(0, 0)}

    def test_spanning_tree_is_one_component(self, rng):
        maze = gen_dfs(2, 2, rng)
        assert maze.connected_component((1, 1)) == {(0, 0), (0, 1), (1, 0), (1, 1)}

    def test_single_edge(self):
        cl = np.zeros((2, 1, 2), dtype=bool)
        cl[1, 0, 0] = True
        maze = LatticeMaze(cl)
        assert maze.connected_component((0, 0)) == {(0, 0), (0, 1)}

    def test_components_partition_cells(self, rng):
        for _ in range(20):
            maze = random_maze("gen_percolation", 5, 4, rng)
            comps = maze.components()
            cells = [c for comp in comps for c in comp]
            assert len(cells) == 20
            assert len(set(cells)) == 20

    def test_largest_component_tie_breaks_to_smallest_member(self):
        maze = LatticeMaze.empty(3, 3)
        assert maze.largest_component() == {(0, 0)}

    def test_largest_component_two_cell_edge(self):
        cl = np.zeros((2, 3, 3), dtype=bool)
        cl[1, 2, 0] = True  # (2,0)-(2,1)
        maze = LatticeMaze(cl)
        assert maze.largest_component() == {(2, 0), (2, 1)}

    def test_largest_component_size_tie(self):
        # two 2-cell components: the one holding the smaller cell wins
        cl = np.zeros((2, 3, 3), dtype=bool)
        cl[1, 0, 0] = True  # (0,0)-(0,1)
        cl[1, 2, 0] = True  # (2,0)-(2,1)
        maze = LatticeMaze(cl)
        assert maze.largest_component() == {(0, 0), (0, 1)}

    def test_largest_matches_oracle(self, rng):
        for _ in range(30):
            maze = random_maze("gen_percolation", 5, 5, rng)
            got = maze.largest_component()
            sizes = [
                len(component_of(maze.connection_list, (r, c)))
                for r in range(5)
                for c in range(5)
            ]
            assert len(got) == max(sizes)


class TestShortestPath:
    def test_corridor(self):
        cl = np.zeros((2, 1, 5), dtype=bool)
        cl[1, 0, :4] = True
        maze = LatticeMaze(cl)
        path = maze.shortest_path((0, 0), (0, 4))
        assert path == ((0, 0), (0, 1), (0, 2), (0, 3), (0, 4))

    def test_unreachable_target(self):
        with pytest.raises(NoPathError):
            LatticeMaze.empty(2, 2).shortest_path((0, 0), (1, 1))

    def test_deterministic(self, rng):
        maze = random_maze("gen_dfs_percolation", 6, 6, rng)
        origin, target = maze.select_endpoints(rng)
        assert maze.shortest_path(origin, target) == maze.shortest_path(origin, target)

    @pytest.mark.parametrize("kind", ["gen_dfs", "gen_wilson", "gen_percolation", "gen_dfs_percolation"])
    def test_matches_bfs_oracle(self, kind, rng):
        checked = 0
        while checked < 50:
            maze = random_maze(kind, 6, 5, rng)
            comp = sorted(maze.largest_component())
            if len(comp) < 2:
                continue
            i, j = rng.choice(len(comp), size=2, replace=False)
            origin, target = comp[int(i)], comp[int(j)]
            expected = bfs_shortest_path_length(maze.connection_list, origin, target)
            path = maze.shortest_path(origin, target)
            assert len(path) == expected + 1
            checked += 1


class TestSelectEndpoints:
    def test_two_cell_component(self):
        cl = np.zeros((2, 1, 2), dtype=bool)
        cl[1, 0, 0] = True
        maze = LatticeMaze(cl)
        endpoints = maze.select_endpoints(np.random.default_rng(0))
        assert set(endpoints) == {(0, 0), (0, 1)}

    def test_1x1_unsolvable(self):
        with pytest.raises(UnsolvableMazeError):
            LatticeMaze.empty(1, 1).select_endpoints(np.random.default_rng(0))

    def test_min_component_size(self, rng):
        cl = np.zeros((2, 1, 3), dtype=bool)
        cl[1, 0, 0] = True
        maze = LatticeMaze(cl)
        with pytest.raises(UnsolvableMazeError):
            maze.select_endpoints(rng, min_component_size=3)

    def test_uniform_over_pairs(self):
        # 2x2 spanning tree: all 4 cells reachable, C(4,2)=6 unordered pairs.
        rng = np.random.default_rng(977)
        maze = gen_dfs(2, 2, rng)
        counts = {}
        n = 10_000
        for _ in range(n):
            a, b = maze.select_endpoints(rng)
            pair = frozenset((a, b))
            counts[pair] = counts.get(pair, 0) + 1
        assert len(counts) == 6
        sigma = (1 / 6 * 5 / 6 / n) ** 0.5
        for count in counts.values():
            assert abs(count / n - 1 / 6) <= 3 * sigma


class TestSolvedMaze:
    def test_validates_path(self, rng):
        maze = gen_dfs(3, 3, rng)
        origin, target = maze.select_endpoints(rng)
        path = maze.shortest_path(origin, target)
        sm = SolvedMaze(maze, origin, target, path)
        assert sm.solution[0] == origin
        assert sm.solution[-1] == target

    def test_rejects_equal_endpoints(self, rng):
        maze = gen_dfs(3, 3, rng)
        with pytest.raises(ValueError):
            SolvedMaze(maze, (0, 0), (0, 0), [(0, 0)])

    def test_rejects_disconnected_step(self):
        maze = LatticeMaze.empty(2, 2)
        with pytest.raises(ValueError):
            SolvedMaze(maze, (0, 0), (0, 1), [(0, 0), (0, 1)])

    def test_rejects_revisit(self, rng):
        cl = np.zeros((2, 1, 3), dtype=bool)
        cl[1, 0, :2] = True
        maze = LatticeMaze(cl)
        with pytest.raises(ValueError):
            SolvedMaze(maze, (0, 0), (0, 1), [(0, 0), (0, 1), (0, 0), (0, 1)])

    def test_equality_ignores_meta(self, rng):
        maze = gen_dfs(3, 3, rng)
        origin, target = maze.select_endpoints(rng)
        a = SolvedMaze.solve(maze, origin, target)
        b = SolvedMaze.solve(maze.with_meta({"algorithm": "x"}), origin, target)
        assert a == b
