"""mazeforge: procedural maze dataset toolkit.

Generates solved lattice mazes under several algorithms, filters them,
converts them losslessly between ASCII, RGB raster, token-sequence, and
rasterized input/target formats, and persists datasets with their full
generation metadata.
"""

from .dataset import (
    BenchmarkRow,
    BenchmarkTable,
    DatasetLoadError,
    EndpointOptions,
    GenerationExhaustedError,
    MazeDataset,
    MazeDatasetConfig,
    default_workers,
    derive_maze_seed,
    generate_dataset,
    load_dataset,
    render_item,
    run_benchmark,
    save_dataset,
    size_class,
)
from .filters import (
    FILTERS,
    FilterRecord,
    filter_path_length,
    filter_start_end_distance,
    register_filter,
    remove_duplicates,
    remove_duplicates_fast,
)
from .formats import (
    COORD_PAIR,
    COORD_SINGLE,
    PALETTE,
    SPECIAL_TOKENS,
    ParseError,
    TokenVocab,
    coord_token,
    from_ascii,
    from_pixels,
    from_tokens,
    shell_rank,
    to_ascii,
    to_pixels,
    to_raster_pair,
    to_tokens,
    tokens_to_text,
)
from .generators import (
    GENERATORS,
    DfsParams,
    PercolationParams,
    gen_dfs,
    gen_dfs_percolation,
    gen_percolation,
    gen_wilson,
    validate_generator_params,
)
from .lattice import (
    Coord,
    LatticeMaze,
    NoPathError,
    SolvedMaze,
    UnsolvableMazeError,
    candidate_connection_count,
)

__version__ = "0.1.0"

__all__ = [
    "BenchmarkRow",
    "BenchmarkTable",
    "COORD_PAIR",
    "COORD_SINGLE",
    "Coord",
    "DatasetLoadError",
    "DfsParams",
    "EndpointOptions",
    "FILTERS",
    "FilterRecord",
    "GENERATORS",
    "GenerationExhaustedError",
    "LatticeMaze",
    "MazeDataset",
    "MazeDatasetConfig",
    "NoPathError",
    "PALETTE",
    "ParseError",
    "PercolationParams",
    "SPECIAL_TOKENS",
    "SolvedMaze",
    "TokenVocab",
    "UnsolvableMazeError",
    "candidate_connection_count",
    "coord_token",
    "default_workers",
    "derive_maze_seed",
    "filter_path_length",
    "filter_start_end_distance",
    "from_ascii",
    "from_pixels",
    "from_tokens",
    "gen_dfs",
    "gen_dfs_percolation",
    "gen_percolation",
    "gen_wilson",
    "generate_dataset",
    "load_dataset",
    "register_filter",
    "remove_duplicates",
    "remove_duplicates_fast",
    "render_item",
    "run_benchmark",
    "save_dataset",
    "shell_rank",
    "size_class",
    "to_ascii",
    "to_pixels",
    "to_raster_pair",
    "to_tokens",
    "tokens_to_text",
    "validate_generator_params",
]
