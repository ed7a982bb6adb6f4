"""The output formats and their exact inverses.

A solved maze converts to ASCII text, an RGB pixel grid, a token sequence
for autoregressive models, and a rasterized (input, target) training pair.
ASCII, pixels, and tokens all parse back to the identical SolvedMaze.
"""

import numpy as np

from mazeforge import (
    SPECIAL_TOKENS,
    SolvedMaze,
    TokenVocab,
    from_ascii,
    from_pixels,
    from_tokens,
    gen_dfs,
    to_ascii,
    to_pixels,
    to_raster_pair,
    to_tokens,
    tokens_to_text,
)

rng = np.random.default_rng(5)
maze = gen_dfs(4, 4, rng)
solved = SolvedMaze.solve(maze, *maze.select_endpoints(rng))

# -- ASCII: '#' wall, ' ' open, S/E endpoints, X the solution path.
lines = to_ascii(solved)
print("\n".join(lines))
assert from_ascii(lines) == solved

# -- pixels: same geometry, five-color palette, uint8 RGB.
pixels = to_pixels(solved)
print(f"\npixels: shape={pixels.shape} dtype={pixels.dtype} "
      f"distinct colors={len(np.unique(pixels.reshape(-1, 3), axis=0))}")
assert from_pixels(pixels) == solved

# -- tokens: adjacency list (randomly ordered), origin, target, path.
tokens = to_tokens(solved, rng=rng)
print(f"\ntokens ({len(tokens)} total):")
print(tokens_to_text(tokens))
assert from_tokens(tokens, grid_shape=(4, 4)) == solved

# A second shuffle changes the adjacency order but not the parsed maze.
assert from_tokens(to_tokens(solved, rng=rng), grid_shape=(4, 4)) == solved

# The vocabulary nests: a maze of size m uses only the first m*m
# coordinate indices of any larger vocabulary.
vocab = TokenVocab(max_grid_size=10)
coord_indices = [vocab.index(t) for t in tokens if t not in SPECIAL_TOKENS]
print(f"\nvocab size={len(vocab)}; max coordinate index used by this 4x4 maze: "
      f"{max(coord_indices)} < {len(SPECIAL_TOKENS) + 16}")

# -- rasterized training pair: input hides the path, target shows only it.
inp, tgt = to_raster_pair(solved, include_endpoints=True, fill_empty=False)
print(f"\nraster pair shapes: input={inp.shape} target={tgt.shape}")
