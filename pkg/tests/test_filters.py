import numpy as np
import pytest

from mazeforge import (
    LatticeMaze,
    SolvedMaze,
    filter_path_length,
    filter_start_end_distance,
    remove_duplicates,
    remove_duplicates_fast,
)
from mazeforge.filters import _similarity_key
from oracles import quadratic_exact_dedup, quadratic_hamming_dedup
from conftest import random_solved


def corridor_maze(length, n_open):
    """1 x length maze with the first n_open right-connections set."""
    cl = np.zeros((2, 1, length), dtype=bool)
    cl[1, 0, :n_open] = True
    return LatticeMaze(cl)


def make_pool(rng, n, kind="gen_dfs", rows=4, cols=4):
    return [random_solved(kind, rows, cols, rng) for _ in range(n)]


class TestPathLength:
    def test_min_one_keeps_all(self, rng):
        mazes = make_pool(rng, 20)
        assert filter_path_length(mazes, 1) == mazes

    def test_short_solution_removed(self):
        maze = corridor_maze(3, 2)
        two_coord = SolvedMaze(maze, (0, 0), (0, 1), [(0, 0), (0, 1)])
        assert filter_path_length([two_coord], 3) == []

    def test_matches_recount_oracle(self, rng):
        mazes = make_pool(rng, 100, kind="gen_dfs", rows=5, cols=5)
        kept = filter_path_length(mazes, 3)
        expected = [m for m in mazes if len(m.solution) - 1 >= 3]
        assert kept == expected

    def test_bad_min_length(self):
        with pytest.raises(ValueError):
            filter_path_length([], 0)

    def test_idempotent(self, rng):
        mazes = make_pool(rng, 50)
        once = filter_path_length(mazes, 4)
        assert filter_path_length(once, 4) == once


class TestStartEndDistance:
    def test_zero_is_identity(self, rng):
        mazes = make_pool(rng, 20)
        assert filter_start_end_distance(mazes, 0) == mazes

    def test_exact_threshold_kept(self, rng):
        sm = None
        while sm is None:
            cand = random_solved("gen_dfs", 3, 4, rng)
            if cand.origin == (0, 0) and cand.target == (2, 3):
                sm = cand
        assert filter_start_end_distance([sm], 5) == [sm]
        assert filter_start_end_distance([sm], 6) == []

    def test_matches_recount_oracle(self, rng):
        mazes = make_pool(rng, 100, rows=5, cols=5)
        kept = filter_start_end_distance(mazes, 4)
        expected = [
            m
            for m in mazes
            if abs(m.origin[0] - m.target[0]) + abs(m.origin[1] - m.target[1]) >= 4
        ]
        assert kept == expected


class TestRemoveDuplicates:
    def test_exact_duplicate_removed(self, rng):
        mazes = make_pool(rng, 10)
        with_dup = mazes + [mazes[0]]
        assert remove_duplicates(with_dup, 1) == mazes

    def test_one_bit_apart_removed_at_two(self):
        a = SolvedMaze(corridor_maze(3, 2), (0, 0), (0, 1), [(0, 0), (0, 1)])
        b = SolvedMaze(corridor_maze(3, 1), (0, 0), (0, 1), [(0, 0), (0, 1)])
        assert remove_duplicates([a, b], 2) == [a]
        assert remove_duplicates([a, b], 1) == [a, b]

    def test_matches_quadratic_oracle(self, rng):
        mazes = make_pool(rng, 50, rows=3, cols=3)
        for min_h in (1, 2, 5):
            keys = [_similarity_key(m) for m in mazes]
            expected = [mazes[i] for i in quadratic_hamming_dedup(keys, min_h)]
            assert remove_duplicates(mazes, min_h) == expected

    def test_mixed_shapes_rejected(self, rng):
        a = random_solved("gen_dfs", 3, 3, rng)
        b = random_solved("gen_dfs", 3, 4, rng)
        with pytest.raises(ValueError):
            remove_duplicates([a, b], 1)

    def test_idempotent(self, rng):
        mazes = make_pool(rng, 40, rows=3, cols=3)
        once = remove_duplicates(mazes, 3)
        assert remove_duplicates(once, 3) == once


class TestRemoveDuplicatesFast:
    def test_no_duplicates_identity(self, rng):
        mazes = make_pool(rng, 30)
        assert remove_duplicates_fast(mazes) == mazes

    def test_triplicate_kept_once(self, rng):
        sm = random_solved("gen_dfs", 3, 3, rng)
        assert remove_duplicates_fast([sm, sm, sm]) == [sm]

    def test_matches_quadratic_oracle(self, rng):
        base = make_pool(rng, 80, rows=3, cols=3)
        copies = [base[int(i)] for i in rng.integers(0, len(base), size=40)]
        mixed = base + copies
        order = rng.permutation(len(mixed))
        mixed = [mixed[int(i)] for i in order]
        expected = quadratic_exact_dedup(
            mixed, key=lambda m: (m.maze, m.origin, m.target, m.solution)
        )
        assert remove_duplicates_fast(mixed) == expected

    def test_fast_keeps_superset_of_threshold(self, rng):
        mazes = make_pool(rng, 60, rows=3, cols=3)
        fast = remove_duplicates_fast(mazes)
        for min_h in (1, 2, 4):
            threshold = remove_duplicates(mazes, min_h)
            assert set(id(m) for m in threshold) <= set(id(m) for m in fast)

    def test_idempotent(self, rng):
        mazes = make_pool(rng, 40)
        once = remove_duplicates_fast(mazes + mazes[:10])
        assert remove_duplicates_fast(once) == once
