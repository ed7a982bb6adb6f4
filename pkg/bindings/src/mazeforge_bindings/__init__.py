"""Array-oriented access to mazeforge datasets for ML data pipelines.

Wraps dataset generation, loading, and rendering behind three calls
(`generate`, `load`, `render`) and a sequence type (`BoundDataset`) whose
items come back as contiguous numpy arrays ready for batching: connection
bits as uint8, coordinates as uint8 (uint16 for grids wider than 256).
Everything delegates to mazeforge, so outputs are bit-identical to the
library and CLI for the same seed.
"""

from __future__ import annotations

import numpy as np

import mazeforge

__version__ = "0.1.0"

__all__ = ["BoundDataset", "generate", "load", "render"]


class BoundDataset:
    """Sequence view over a MazeDataset delivering numpy arrays.

    Item i is (connections, origin, target, solution): connections is a
    read-only uint8 view of shape (2, rows, cols) backed by the maze's own
    storage (zero-copy), origin and target have shape (2,), and solution has
    shape (path_length, 2), all in the dataset's coordinate index dtype.
    """

    def __init__(self, dataset: mazeforge.MazeDataset):
        self.dataset = dataset
        side = max(dataset.config.grid_rows, dataset.config.grid_cols)
        self.index_dtype = np.uint8 if side <= 256 else np.uint16

    def __len__(self) -> int:
        return len(self.dataset)

    def __getitem__(self, index: int):
        sm = self.dataset[index]
        connections = sm.maze.connection_list.view(np.uint8)
        origin = np.array(sm.origin, dtype=self.index_dtype)
        target = np.array(sm.target, dtype=self.index_dtype)
        solution = np.array(sm.solution, dtype=self.index_dtype)
        return connections, origin, target, solution

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    def render(self, index: int, fmt: str, scheme: str = mazeforge.COORD_SINGLE):
        return render(self, index, fmt, scheme=scheme)

    def save(self, path) -> None:
        mazeforge.save_dataset(self.dataset, path)

    def __repr__(self) -> str:
        return f"BoundDataset({self.dataset!r})"


def generate(
    *,
    name: str = "",
    grid_n: int | None = None,
    grid_rows: int | None = None,
    grid_cols: int | None = None,
    n_mazes: int,
    algorithm: str,
    params: dict | None = None,
    seed: int = 0,
    workers: int = 1,
) -> BoundDataset:
    """Generate a dataset in process. Identical to the CLI for the same seed."""
    if grid_n is not None:
        if grid_rows is not None or grid_cols is not None:
            raise ValueError("grid_n cannot be combined with grid_rows/grid_cols")
        grid_rows = grid_cols = grid_n
    if grid_rows is None or grid_cols is None:
        raise ValueError("specify grid_n or both grid_rows and grid_cols")
    config = mazeforge.MazeDatasetConfig(
        name=name,
        grid_rows=grid_rows,
        grid_cols=grid_cols,
        n_mazes=n_mazes,
        generator=algorithm,
        generator_params=dict(params or {}),
        seed=seed,
    )
    return BoundDataset(mazeforge.generate_dataset(config, workers=workers))


def load(path) -> BoundDataset:
    """Load a container file written by the library, the CLI, or a binding."""
    return BoundDataset(mazeforge.load_dataset(path))


def render(ds: BoundDataset, index: int, fmt: str, scheme: str = mazeforge.COORD_SINGLE):
    """Render one maze: 'ascii' and 'tokens' as str, 'pixels' as a uint8 array.

    Output equals mazeforge.render_item (and therefore the CLI) exactly.
    """
    return mazeforge.render_item(ds.dataset, index, fmt, scheme=scheme)
