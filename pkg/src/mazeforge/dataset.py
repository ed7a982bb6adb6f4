"""Dataset configuration, generation, persistence, and benchmarking.

A dataset is fully determined by its config, including the seed: maze i is
generated from an independent stream derived from (seed, i), which makes
serial and parallel generation bit-identical and lets any maze be
regenerated in isolation. Datasets persist to a single human-readable JSON
container that embeds the config and the full filter history.
"""

from __future__ import annotations

import json
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from .filters import FILTERS, FilterRecord
from .formats import (
    COORD_SINGLE,
    TOKEN_SCHEMES,
    to_ascii,
    to_pixels,
    to_tokens,
    tokens_to_text,
)
from .generators import GENERATORS, validate_generator_params
from .lattice import LatticeMaze, SolvedMaze, UnsolvableMazeError

FORMAT_VERSION = "1.0"

_SEED_MASK = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_MAX_GENERATION_ATTEMPTS = 10
# Salt index for the deterministic adjacency shuffle used when rendering
# tokens from a stored dataset.
_RENDER_STREAM_INDEX = 0x52454E44


class DatasetLoadError(ValueError):
    """A container file that cannot be loaded; the message names the field."""


class GenerationExhaustedError(RuntimeError):
    """All attempts to produce a solvable maze for some index failed."""


def derive_maze_seed(global_seed: int, index: int) -> int:
    """Stream seed for maze `index` of a dataset seeded with `global_seed`.

    Splitmix-style avalanche of the seed xor an odd-multiplied index. For a
    fixed global seed this is injective in the index (both the multiply and
    the finalizer are bijections mod 2^64), so distinct mazes never share a
    stream.
    """
    if index < 0:
        raise ValueError(f"index must be non-negative, got {index}")
    z = (global_seed ^ (index * _SPLITMIX_GAMMA)) & _SEED_MASK
    z = (z + _SPLITMIX_GAMMA) & _SEED_MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _SEED_MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _SEED_MASK
    return (z ^ (z >> 31)) & _SEED_MASK


@dataclass(frozen=True)
class EndpointOptions:
    """Rules for placing origin and target."""

    min_component_size: int = 2

    def __post_init__(self):
        if self.min_component_size < 2:
            raise ValueError(
                f"min_component_size must be at least 2, got {self.min_component_size}"
            )


@dataclass(frozen=True)
class MazeDatasetConfig:
    """Everything needed to regenerate a dataset byte-for-byte."""

    name: str
    grid_rows: int
    grid_cols: int
    n_mazes: int
    generator: str
    generator_params: dict = field(default_factory=dict)
    seed: int = 0
    endpoint_options: EndpointOptions = field(default_factory=EndpointOptions)

    def __post_init__(self):
        if not self.name:
            object.__setattr__(self, "name", "dataset")
        if self.grid_rows < 1 or self.grid_cols < 1:
            raise ValueError(
                f"grid must be at least 1x1, got {self.grid_rows}x{self.grid_cols}"
            )
        if self.n_mazes < 1:
            raise ValueError(f"n_mazes must be at least 1, got {self.n_mazes}")
        if not 0 <= self.seed <= _SEED_MASK:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        validate_generator_params(self.generator, self.generator_params)

    @classmethod
    def square(cls, name: str, grid_n: int, **kwargs) -> "MazeDatasetConfig":
        """Convenience constructor for square grids."""
        return cls(name=name, grid_rows=grid_n, grid_cols=grid_n, **kwargs)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "grid_rows": self.grid_rows,
            "grid_cols": self.grid_cols,
            "n_mazes": self.n_mazes,
            "generator": self.generator,
            "generator_params": dict(sorted(self.generator_params.items())),
            "seed": self.seed,
            "endpoint_options": {"min_component_size": self.endpoint_options.min_component_size},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MazeDatasetConfig":
        required = (
            "name",
            "grid_rows",
            "grid_cols",
            "n_mazes",
            "generator",
            "generator_params",
            "seed",
            "endpoint_options",
        )
        for key in required:
            if key not in data:
                raise DatasetLoadError(f"config missing field {key!r}")
        options = data["endpoint_options"]
        if "min_component_size" not in options:
            raise DatasetLoadError("endpoint_options missing field 'min_component_size'")
        try:
            return cls(
                name=data["name"],
                grid_rows=data["grid_rows"],
                grid_cols=data["grid_cols"],
                n_mazes=data["n_mazes"],
                generator=data["generator"],
                generator_params=dict(data["generator_params"]),
                seed=data["seed"],
                endpoint_options=EndpointOptions(
                    min_component_size=options["min_component_size"]
                ),
            )
        except ValueError as exc:
            raise DatasetLoadError(f"config: {exc}") from exc


class MazeDataset:
    """A list of solved mazes plus the config and filter history that made it."""

    def __init__(self, config: MazeDatasetConfig, applied_filters=(), mazes=()):
        self.config = config
        self.applied_filters: list[FilterRecord] = list(applied_filters)
        self.mazes: list[SolvedMaze] = list(mazes)

    def __len__(self) -> int:
        return len(self.mazes)

    def __getitem__(self, index: int) -> SolvedMaze:
        return self.mazes[index]

    def __iter__(self):
        return iter(self.mazes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MazeDataset):
            return NotImplemented
        return (
            self.config == other.config
            and self.applied_filters == other.applied_filters
            and self.mazes == other.mazes
        )

    def __repr__(self) -> str:
        return (
            f"MazeDataset({self.config.name!r}, {len(self.mazes)} mazes, "
            f"{len(self.applied_filters)} filters applied)"
        )

    def apply_filter(self, name: str, **params) -> "MazeDataset":
        """Apply a registered filter, recording it in the filter history."""
        if name not in FILTERS:
            raise ValueError(
                f"unknown filter {name!r}; available: {', '.join(sorted(FILTERS))}"
            )
        kept = FILTERS[name](self.mazes, **params)
        record = FilterRecord(name=name, params=dict(params))
        return MazeDataset(self.config, self.applied_filters + [record], kept)

    @classmethod
    def generate(cls, config: MazeDatasetConfig, workers: int = 1) -> "MazeDataset":
        return generate_dataset(config, workers=workers)

    def save(self, path) -> None:
        save_dataset(self, path)

    @classmethod
    def load(cls, path) -> "MazeDataset":
        return load_dataset(path)


# -- generation ---------------------------------------------------------------


def _generate_single(config: MazeDatasetConfig, index: int) -> SolvedMaze:
    """Produce the solved maze for one dataset index.

    Each attempt runs on its own derived substream so a retry after an
    unsolvable draw (possible under percolation) stays deterministic.
    """
    maze_seed = derive_maze_seed(config.seed, index)
    generate = GENERATORS[config.generator]
    for attempt in range(_MAX_GENERATION_ATTEMPTS):
        rng = np.random.default_rng(derive_maze_seed(maze_seed, attempt))
        maze = generate(config.grid_rows, config.grid_cols, rng, **config.generator_params)
        try:
            origin, target = maze.select_endpoints(
                rng, config.endpoint_options.min_component_size
            )
        except UnsolvableMazeError:
            continue
        solution = maze.shortest_path(origin, target)
        meta = dict(maze.generation_meta or {})
        meta["seed"] = maze_seed
        return SolvedMaze(maze.with_meta(meta), origin, target, solution)
    raise GenerationExhaustedError(
        f"no solvable maze for index {index} after {_MAX_GENERATION_ATTEMPTS} attempts "
        f"(config {config.name!r}, generator {config.generator}, "
        f"grid {config.grid_rows}x{config.grid_cols})"
    )


def generate_dataset(config: MazeDatasetConfig, workers: int = 1) -> MazeDataset:
    """Generate all mazes of a config, optionally across worker processes.

    Output is identical for any worker count: maze i depends only on
    (config.seed, i).
    """
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    indices = range(config.n_mazes)
    if workers == 1:
        mazes = [_generate_single(config, i) for i in indices]
    else:
        chunksize = max(1, config.n_mazes // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            mazes = list(
                pool.map(partial(_generate_single, config), indices, chunksize=chunksize)
            )
    return MazeDataset(config, [], mazes)


def default_workers() -> int:
    """Worker count for generation: MAZEFORGE_WORKERS or the CPU count."""
    env = os.environ.get("MAZEFORGE_WORKERS")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"MAZEFORGE_WORKERS must be an integer, got {env!r}") from None
        if value < 1:
            raise ValueError(f"MAZEFORGE_WORKERS must be at least 1, got {value}")
        return value
    return os.cpu_count() or 1


# -- persistence ----------------------------------------------------------------


def _maze_to_json_dict(sm: SolvedMaze) -> dict:
    cl = sm.maze.connection_list.astype(int)
    return {
        "connection_list": {
            "down": cl[0].tolist(),
            "right": cl[1].tolist(),
        },
        "origin": list(sm.origin),
        "target": list(sm.target),
        "solution": [list(c) for c in sm.solution],
    }


def _maze_from_json_dict(data: dict, config: MazeDatasetConfig, index: int) -> SolvedMaze:
    where = f"mazes[{index}]"
    for key in ("connection_list", "origin", "target", "solution"):
        if key not in data:
            raise DatasetLoadError(f"{where} missing field {key!r}")
    cl_data = data["connection_list"]
    for key in ("down", "right"):
        if key not in cl_data:
            raise DatasetLoadError(f"{where}.connection_list missing field {key!r}")
    shape = (config.grid_rows, config.grid_cols)
    planes = []
    for key in ("down", "right"):
        plane = np.asarray(cl_data[key])
        if plane.shape != shape:
            raise DatasetLoadError(
                f"{where}.connection_list.{key} has shape {plane.shape}, "
                f"config says {shape}"
            )
        if not np.isin(plane, (0, 1)).all():
            raise DatasetLoadError(f"{where}.connection_list.{key} has values outside 0/1")
        planes.append(plane.astype(bool))
    try:
        maze = LatticeMaze(np.stack(planes))
    except ValueError as exc:
        raise DatasetLoadError(f"{where}.connection_list: {exc}") from exc
    try:
        return SolvedMaze(maze, tuple(data["origin"]), tuple(data["target"]), data["solution"])
    except (ValueError, TypeError) as exc:
        raise DatasetLoadError(f"{where}: {exc}") from exc


def save_dataset(dataset: MazeDataset, path) -> None:
    """Write the canonical single-file container (UTF-8 JSON).

    Key order and number formatting are fixed, so equal datasets always
    serialize to identical bytes.
    """
    doc = {
        "format_version": FORMAT_VERSION,
        "config": dataset.config.to_json_dict(),
        "applied_filters": [
            {"name": rec.name, "params": dict(sorted(rec.params.items()))}
            for rec in dataset.applied_filters
        ],
        "mazes": [_maze_to_json_dict(m) for m in dataset.mazes],
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def load_dataset(path) -> MazeDataset:
    """Read a container file, validating schema, shapes, and maze invariants."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DatasetLoadError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DatasetLoadError("top-level document must be an object")
    if "format_version" not in doc:
        raise DatasetLoadError("missing field 'format_version'")
    if doc["format_version"] != FORMAT_VERSION:
        raise DatasetLoadError(
            f"format_version is {doc['format_version']!r}, expected {FORMAT_VERSION!r}"
        )
    for key in ("config", "applied_filters", "mazes"):
        if key not in doc:
            raise DatasetLoadError(f"missing field {key!r}")
    config = MazeDatasetConfig.from_json_dict(doc["config"])
    filters = []
    for i, rec in enumerate(doc["applied_filters"]):
        if "name" not in rec or "params" not in rec:
            raise DatasetLoadError(f"applied_filters[{i}] missing 'name' or 'params'")
        filters.append(FilterRecord(name=rec["name"], params=dict(rec["params"])))
    mazes = [
        _maze_from_json_dict(m, config, i) for i, m in enumerate(doc["mazes"])
    ]
    return MazeDataset(config, filters, mazes)


# -- rendering stored mazes -----------------------------------------------------


def render_item(dataset: MazeDataset, index: int, fmt: str, scheme: str = COORD_SINGLE):
    """Render one stored maze as 'ascii' (str), 'pixels' (uint8 array), or
    'tokens' (str).

    Token rendering shuffles the adjacency list with a stream derived from
    the dataset seed and the maze index, so repeated renders are identical.
    """
    if index < 0 or index >= len(dataset.mazes):
        raise IndexError(f"index {index} out of range for {len(dataset.mazes)} mazes")
    sm = dataset.mazes[index]
    if fmt == "ascii":
        return "\n".join(to_ascii(sm))
    if fmt == "pixels":
        return to_pixels(sm)
    if fmt == "tokens":
        if scheme not in TOKEN_SCHEMES:
            raise ValueError(f"unknown scheme {scheme!r}; expected one of {TOKEN_SCHEMES}")
        rng = np.random.default_rng(
            derive_maze_seed(derive_maze_seed(dataset.config.seed, index), _RENDER_STREAM_INDEX)
        )
        return tokens_to_text(to_tokens(sm, scheme, rng))
    raise ValueError(f"unknown format {fmt!r}; expected ascii, pixels, or tokens")


# -- benchmarking ----------------------------------------------------------------


def size_class(grid_n: int) -> str:
    """Benchmark size buckets: small (<=10), medium (<=32), large (>32)."""
    if grid_n <= 10:
        return "small"
    if grid_n <= 32:
        return "medium"
    return "large"


@dataclass(frozen=True)
class BenchmarkRow:
    algorithm: str
    params: dict
    grid_n: int
    n_mazes: int
    mean_ms: float
    median_ms: float


@dataclass
class BenchmarkTable:
    rows: list[BenchmarkRow]

    def to_csv(self, path) -> None:
        import csv

        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["algorithm", "params", "grid_n", "n_mazes", "mean_ms", "median_ms"])
            for row in self.rows:
                params = json.dumps(dict(sorted(row.params.items()))) if row.params else ""
                writer.writerow(
                    [row.algorithm, params, row.grid_n, row.n_mazes,
                     f"{row.mean_ms:.4f}", f"{row.median_ms:.4f}"]
                )

    def mean_ms(self, algorithm: str, grid_n: int) -> float:
        for row in self.rows:
            if row.algorithm == algorithm and row.grid_n == grid_n:
                return row.mean_ms
        raise KeyError(f"no benchmark row for {algorithm} at g={grid_n}")

    def class_means(self) -> dict[tuple[str, str], float]:
        """Mean per-maze time for each (algorithm, size class)."""
        groups: dict[tuple[str, str], list[float]] = {}
        for row in self.rows:
            groups.setdefault((row.algorithm, size_class(row.grid_n)), []).append(row.mean_ms)
        return {key: statistics.fmean(values) for key, values in groups.items()}

    def format_table(self) -> str:
        lines = [f"{'algorithm':24} {'params':28} {'class':7} {'g':>4} "
                 f"{'mean_ms':>10} {'median_ms':>10}"]
        for row in self.rows:
            params = json.dumps(dict(sorted(row.params.items()))) if row.params else "-"
            lines.append(
                f"{row.algorithm:24} {params:28} {size_class(row.grid_n):7} "
                f"{row.grid_n:>4} {row.mean_ms:>10.3f} {row.median_ms:>10.3f}"
            )
        return "\n".join(lines)


def run_benchmark(
    sizes: list[int],
    algorithms: list[tuple[str, dict]],
    n_per_cell: int = 20,
    seed: int = 0,
    warmup: int = 3,
) -> BenchmarkTable:
    """Time solved-maze production per (algorithm, size) cell, single worker.

    Each cell times n_per_cell mazes individually with a monotonic clock
    after `warmup` discarded iterations. The timed unit is the full per-maze
    pipeline (generate, pick endpoints, solve), the unit of dataset
    generation throughput.
    """
    rows = []
    for name, params in algorithms:
        validate_generator_params(name, params)
        for g in sizes:
            config = MazeDatasetConfig(
                name=f"benchmark-{name}-g{g}",
                grid_rows=g,
                grid_cols=g,
                n_mazes=warmup + n_per_cell,
                generator=name,
                generator_params=dict(params),
                seed=seed,
            )
            times_ms = []
            for i in range(warmup + n_per_cell):
                t0 = time.perf_counter()
                _generate_single(config, i)
                times_ms.append((time.perf_counter() - t0) * 1000.0)
            kept = times_ms[warmup:]
            rows.append(
                BenchmarkRow(
                    algorithm=name,
                    params=dict(params),
                    grid_n=g,
                    n_mazes=n_per_cell,
                    mean_ms=statistics.fmean(kept),
                    median_ms=statistics.median(kept),
                )
            )
    return BenchmarkTable(rows)
