"""Time per-maze production across algorithms and grid sizes.

The harness times the full pipeline for one maze (generate, pick
endpoints, solve) with a monotonic clock, discards warm-up iterations,
and reports mean and median per cell. Runs single-worker by design.
"""

import tempfile
from pathlib import Path

from mazeforge import run_benchmark

table = run_benchmark(
    sizes=[5, 10, 20],
    algorithms=[
        ("gen_dfs", {}),
        ("gen_dfs", {"do_forks": False}),
        ("gen_percolation", {"p": 0.5}),
        ("gen_wilson", {}),
    ],
    n_per_cell=10,
    seed=0,
)

print(table.format_table())

print("\nmean per size class:")
for (algorithm, cls), mean in sorted(table.class_means().items()):
    print(f"  {algorithm:8} {cls:7} {mean:9.3f} ms")

with tempfile.TemporaryDirectory() as tmp:
    csv_path = Path(tmp) / "benchmark.csv"
    table.to_csv(csv_path)
    print(f"\nCSV ({csv_path.name}):")
    print(csv_path.read_text().strip())
