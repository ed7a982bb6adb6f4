"""Datasets end to end: configure, generate, filter, persist, reload.

The config (with its seed) fully determines the dataset, worker count
included, and travels inside the container file next to the mazes and the
filter history.
"""

import tempfile
from pathlib import Path

from mazeforge import MazeDatasetConfig, generate_dataset, load_dataset, save_dataset

config = MazeDatasetConfig(
    name="demo",
    grid_rows=5,
    grid_cols=5,
    n_mazes=64,
    generator="gen_dfs_percolation",
    generator_params={"p": 0.15},
    seed=42,
)

dataset = generate_dataset(config, workers=2)
print(f"generated: {dataset}")
lengths = sorted(len(m.solution) - 1 for m in dataset)
print(f"solution lengths: min={lengths[0]} median={lengths[len(lengths) // 2]} "
      f"max={lengths[-1]}")

# Filters subset the mazes and append a record to the dataset metadata.
filtered = (
    dataset
    .apply_filter("remove_duplicates_fast")
    .apply_filter("path_length", min_length=4)
    .apply_filter("start_end_distance", min_distance=3)
)
print(f"after filtering: {len(filtered)} of {len(dataset)} mazes kept")
for record in filtered.applied_filters:
    print(f"  applied {record.name} {record.params}")

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "demo.json"
    save_dataset(filtered, path)
    print(f"\nwrote {path.stat().st_size} bytes")

    # Loading restores config, filter history, and mazes exactly.
    loaded = load_dataset(path)
    assert loaded == filtered

    # The embedded config regenerates the original (pre-filter) dataset.
    assert generate_dataset(loaded.config) == dataset
    print("reload and regeneration verified")
