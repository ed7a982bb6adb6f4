"""Dataset filters: subset a list of solved mazes by path or similarity rules.

Filters are pure, order-stable, and idempotent. Applying one through
MazeDataset.apply_filter records a FilterRecord in the dataset metadata.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .lattice import SolvedMaze


@dataclass(frozen=True)
class FilterRecord:
    """Name and parameters of one applied filter."""

    name: str
    params: dict = field(default_factory=dict)


def filter_path_length(mazes: list[SolvedMaze], min_length: int) -> list[SolvedMaze]:
    """Keep mazes whose solution is at least min_length edges long."""
    if min_length < 1:
        raise ValueError(f"min_length must be at least 1, got {min_length}")
    return [m for m in mazes if len(m.solution) - 1 >= min_length]


def filter_start_end_distance(mazes: list[SolvedMaze], min_distance: int) -> list[SolvedMaze]:
    """Keep mazes whose endpoints are at least min_distance apart in Manhattan
    distance, ignoring walls."""
    if min_distance < 0:
        raise ValueError(f"min_distance must be non-negative, got {min_distance}")
    return [
        m
        for m in mazes
        if abs(m.origin[0] - m.target[0]) + abs(m.origin[1] - m.target[1]) >= min_distance
    ]


def _similarity_key(maze: SolvedMaze) -> np.ndarray:
    """Flat boolean key: connection bits plus one-hot origin and target grids."""
    rows, cols = maze.grid_shape
    origin = np.zeros((rows, cols), dtype=bool)
    target = np.zeros((rows, cols), dtype=bool)
    origin[maze.origin] = True
    target[maze.target] = True
    return np.concatenate(
        [maze.maze.connection_list.ravel(), origin.ravel(), target.ravel()]
    )


def remove_duplicates(mazes: list[SolvedMaze], min_hamming: int) -> list[SolvedMaze]:
    """Drop every maze whose similarity key lies within Hamming distance
    min_hamming (exclusive) of an earlier kept maze.

    The key covers connection bits and one-hot endpoint grids, so equal mazes
    with different endpoints stay distinguishable. Pairwise scan, O(n^2).
    """
    if min_hamming < 1:
        raise ValueError(f"min_hamming must be at least 1, got {min_hamming}")
    if not mazes:
        return []
    shapes = {m.grid_shape for m in mazes}
    if len(shapes) > 1:
        raise ValueError(f"mixed grid shapes in dataset: {sorted(shapes)}")
    kept: list[SolvedMaze] = []
    kept_keys: list[np.ndarray] = []
    for maze in mazes:
        key = _similarity_key(maze)
        if kept_keys:
            distances = (np.vstack(kept_keys) != key).sum(axis=1)
            if int(distances.min()) < min_hamming:
                continue
        kept.append(maze)
        kept_keys.append(key)
    return kept


def _exact_key(maze: SolvedMaze) -> bytes:
    rows, cols = maze.grid_shape
    coords = np.array(
        [maze.origin, maze.target, *maze.solution], dtype=np.int64
    ).tobytes()
    return (
        rows.to_bytes(4, "little")
        + cols.to_bytes(4, "little")
        + maze.maze.connection_list.tobytes()
        + coords
    )


def remove_duplicates_fast(mazes: list[SolvedMaze]) -> list[SolvedMaze]:
    """Keep the first occurrence of each exactly-identical maze. O(n) via a
    hash of the canonical byte encoding."""
    seen: set[bytes] = set()
    kept: list[SolvedMaze] = []
    for maze in mazes:
        key = _exact_key(maze)
        if key not in seen:
            seen.add(key)
            kept.append(maze)
    return kept


# Registered filters take (mazes, **params) and return a new list.
FILTERS = {
    "path_length": filter_path_length,
    "start_end_distance": filter_start_end_distance,
    "remove_duplicates": remove_duplicates,
    "remove_duplicates_fast": remove_duplicates_fast,
}


def register_filter(name: str, fn) -> None:
    """Register a custom dataset filter under a stable name."""
    if name in FILTERS:
        raise ValueError(f"filter {name!r} already registered")
    FILTERS[name] = fn
