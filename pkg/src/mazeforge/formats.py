"""Lossless conversions between solved mazes and their external formats.

A rows x cols maze renders on a (2*rows+1) x (2*cols+1) character or pixel
grid: cell (i,j) sits at position (2i+1, 2j+1), the position between two
adjacent cells is open iff they are connected, and every (even, even)
position is a wall. The token format serializes the adjacency list followed
by origin, target, and solution path. Each conversion has an exact inverse.
"""

from __future__ import annotations

import re

import numpy as np

from .lattice import Coord, LatticeMaze, SolvedMaze

AsciiMaze = list[str]

WALL = "#"
OPEN = " "
ORIGIN_MARK = "S"
TARGET_MARK = "E"
PATH_MARK = "X"

# Colors mirror the ASCII marks: wall, open, origin, target, path.
PALETTE: dict[str, tuple[int, int, int]] = {
    WALL: (0, 0, 0),
    OPEN: (255, 255, 255),
    ORIGIN_MARK: (0, 255, 0),
    TARGET_MARK: (255, 0, 0),
    PATH_MARK: (0, 0, 255),
}
_COLOR_TO_CHAR = {color: char for char, color in PALETTE.items()}


class ParseError(ValueError):
    """A malformed ASCII grid, pixel grid, or token sequence.

    The message names the offending position (line/column or token index).
    """


# -- ASCII ---------------------------------------------------------------


def to_ascii(sm: SolvedMaze) -> AsciiMaze:
    """Render a solved maze as (2*rows+1) lines of (2*cols+1) characters.

    Corridor cells and connected gaps are spaces; solution cells carry 'X'
    with 'S' at the origin and 'E' at the target, and the gap between two
    consecutive solution cells carries 'X' as well.
    """
    maze = sm.maze
    rows, cols = maze.rows, maze.cols
    height, width = 2 * rows + 1, 2 * cols + 1
    grid = [[WALL] * width for _ in range(height)]

    for r in range(rows):
        for c in range(cols):
            grid[2 * r + 1][2 * c + 1] = OPEN
            if r + 1 < rows and maze.down[r, c]:
                grid[2 * r + 2][2 * c + 1] = OPEN
            if c + 1 < cols and maze.right[r, c]:
                grid[2 * r + 1][2 * c + 2] = OPEN

    for (ar, ac), (br, bc) in zip(sm.solution, sm.solution[1:]):
        grid[ar + br + 1][ac + bc + 1] = PATH_MARK
    for r, c in sm.solution:
        grid[2 * r + 1][2 * c + 1] = PATH_MARK
    grid[2 * sm.origin[0] + 1][2 * sm.origin[1] + 1] = ORIGIN_MARK
    grid[2 * sm.target[0] + 1][2 * sm.target[1] + 1] = TARGET_MARK

    return ["".join(line) for line in grid]


def from_ascii(ascii_maze: AsciiMaze | str) -> SolvedMaze:
    """Parse an ASCII rendering back into a SolvedMaze.

    Raises ParseError, naming the offending position, for bad dimensions,
    unknown characters, missing or duplicated endpoint marks, or a path
    marking that does not form one contiguous walk from 'S' to 'E'.
    """
    lines = ascii_maze.splitlines() if isinstance(ascii_maze, str) else list(ascii_maze)
    height = len(lines)
    if height < 3 or height % 2 == 0:
        raise ParseError(f"expected an odd number of lines >= 3, got {height}")
    width = len(lines[0])
    if width < 3 or width % 2 == 0:
        raise ParseError(f"expected an odd line width >= 3, got {width}")
    for y, line in enumerate(lines):
        if len(line) != width:
            raise ParseError(f"line {y}: length {len(line)} != {width}")
    rows, cols = height // 2, width // 2

    origin = target = None
    path_cells: set[Coord] = set()
    conn = np.zeros((2, rows, cols), dtype=bool)
    path_gaps: set[tuple[int, int]] = set()

    for y, line in enumerate(lines):
        for x, ch in enumerate(line):
            on_border = y in (0, height - 1) or x in (0, width - 1)
            if on_border:
                if ch != WALL:
                    raise ParseError(f"line {y}, column {x}: border must be '#', got {ch!r}")
                continue
            if y % 2 == 1 and x % 2 == 1:  # cell
                cell = (y // 2, x // 2)
                if ch == ORIGIN_MARK:
                    if origin is not None:
                        raise ParseError(f"line {y}, column {x}: duplicate 'S'")
                    origin = cell
                    path_cells.add(cell)
                elif ch == TARGET_MARK:
                    if target is not None:
                        raise ParseError(f"line {y}, column {x}: duplicate 'E'")
                    target = cell
                    path_cells.add(cell)
                elif ch == PATH_MARK:
                    path_cells.add(cell)
                elif ch != OPEN:
                    raise ParseError(f"line {y}, column {x}: unknown cell character {ch!r}")
            elif y % 2 == 0 and x % 2 == 0:  # junction
                if ch != WALL:
                    raise ParseError(f"line {y}, column {x}: junction must be '#', got {ch!r}")
            else:  # gap between two adjacent cells
                if ch == WALL:
                    continue
                if ch not in (OPEN, PATH_MARK):
                    raise ParseError(f"line {y}, column {x}: unknown gap character {ch!r}")
                if y % 2 == 0:
                    conn[0, y // 2 - 1, x // 2] = True
                else:
                    conn[1, y // 2, x // 2 - 1] = True
                if ch == PATH_MARK:
                    path_gaps.add((y, x))

    if origin is None:
        raise ParseError("missing 'S' mark")
    if target is None:
        raise ParseError("missing 'E' mark")

    maze = LatticeMaze(conn)
    solution = _walk_marked_path(maze, origin, target, path_cells, path_gaps)
    try:
        return SolvedMaze(maze, origin, target, solution)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _walk_marked_path(maze, origin, target, path_cells, path_gaps):
    """Order the marked cells by walking the marked gaps from origin to target."""
    solution = [origin]
    used_gaps: set[tuple[int, int]] = set()
    current, previous = origin, None
    while current != target:
        steps = []
        for nb in maze.neighbors(current):
            gap = (current[0] + nb[0] + 1, current[1] + nb[1] + 1)
            if nb != previous and gap in path_gaps:
                steps.append((nb, gap))
        if len(steps) != 1:
            raise ParseError(
                f"path marking is not a single contiguous walk at cell {current} "
                f"({len(steps)} marked continuations)"
            )
        (nb, gap) = steps[0]
        if nb in solution:
            raise ParseError(f"path marking revisits cell {nb}")
        used_gaps.add(gap)
        solution.append(nb)
        previous, current = current, nb
    if set(solution) != path_cells:
        stray = sorted(path_cells - set(solution))
        raise ParseError(f"marked cells not on the S-to-E walk: {stray}")
    if used_gaps != path_gaps:
        raise ParseError("marked gaps not on the S-to-E walk")
    return solution


# -- pixels ----------------------------------------------------------------


def _chars_to_pixels(lines: AsciiMaze) -> np.ndarray:
    out = np.zeros((len(lines), len(lines[0]), 3), dtype=np.uint8)
    for y, line in enumerate(lines):
        for x, ch in enumerate(line):
            out[y, x] = PALETTE[ch]
    return out


def to_pixels(sm: SolvedMaze) -> np.ndarray:
    """RGB rendering, shape (2*rows+1, 2*cols+1, 3), dtype uint8."""
    return _chars_to_pixels(to_ascii(sm))


def from_pixels(pixels: np.ndarray) -> SolvedMaze:
    """Parse an RGB rendering back into a SolvedMaze."""
    pixels = np.asarray(pixels)
    if pixels.ndim != 3 or pixels.shape[2] != 3:
        raise ParseError(f"expected an RGB array of shape (h, w, 3), got {pixels.shape}")
    lines = []
    for y in range(pixels.shape[0]):
        chars = []
        for x in range(pixels.shape[1]):
            color = tuple(int(v) for v in pixels[y, x])
            char = _COLOR_TO_CHAR.get(color)
            if char is None:
                raise ParseError(f"line {y}, column {x}: unknown color {color}")
            chars.append(char)
        lines.append("".join(chars))
    return from_ascii(lines)


def to_raster_pair(
    sm: SolvedMaze, include_endpoints: bool = True, fill_empty: bool = False
) -> tuple[np.ndarray, np.ndarray]:
    """Rasterized (input, target) training pair.

    The input grid is the maze with no path marks; endpoint colors appear
    only when include_endpoints is set. The target grid keeps walls, marks
    every solution cell and the gaps joining consecutive solution cells with
    the path color, and blanks all other corridor positions, filling them as
    walls when fill_empty is set.
    """
    input_chars = []
    target_chars = []
    for line in to_ascii(sm):
        in_line = []
        tg_line = []
        for ch in line:
            if ch == WALL:
                in_line.append(WALL)
                tg_line.append(WALL)
            elif ch in (ORIGIN_MARK, TARGET_MARK):
                in_line.append(ch if include_endpoints else OPEN)
                tg_line.append(PATH_MARK)
            elif ch == PATH_MARK:
                in_line.append(OPEN)
                tg_line.append(PATH_MARK)
            else:
                in_line.append(OPEN)
                tg_line.append(WALL if fill_empty else OPEN)
        input_chars.append("".join(in_line))
        target_chars.append("".join(tg_line))
    return _chars_to_pixels(input_chars), _chars_to_pixels(target_chars)


# -- token vocabulary --------------------------------------------------------

SPECIAL_TOKENS = (
    "<ADJLIST_START>",
    "<ADJLIST_END>",
    "<ORIGIN_START>",
    "<ORIGIN_END>",
    "<TARGET_START>",
    "<TARGET_END>",
    "<PATH_START>",
    "<PATH_END>",
    "<-->",
    ";",
    "<PADDING>",
)

COORD_SINGLE = "coord-single"
COORD_PAIR = "coord-pair"
TOKEN_SCHEMES = (COORD_SINGLE, COORD_PAIR)


def shell_rank(c: Coord) -> int:
    """Position of a coordinate in the nested shell ordering.

    Shell k holds every coordinate with max(row, col) == k: first the cells
    on the right edge of the shell top-down, then the cells on the bottom
    edge right-to-left. After shell k exactly (k+1)^2 coordinates have been
    ranked, so a size-m grid occupies precisely the first m^2 ranks.
    """
    row, col = c
    k = max(row, col)
    if row < k:
        return k * k + row
    return k * k + k + (k - col)


def _shell_order(n: int) -> list[Coord]:
    order: list[Coord] = [(0, 0)] * (n * n)
    for i in range(n):
        for j in range(n):
            order[shell_rank((i, j))] = (i, j)
    return order


def coord_token(c: Coord) -> str:
    """Single-token spelling of a coordinate, e.g. '(2,5)'."""
    return f"({c[0]},{c[1]})"


class TokenVocab:
    """Token-to-index vocabulary for a maximum grid size.

    Special tokens occupy the first indices. Under the coord-single scheme
    each coordinate is one token, ordered by shell_rank, so any m x m maze
    with m <= n uses only the first m^2 coordinate indices. Under coord-pair
    a coordinate is a row token followed by a column token, drawn from
    disjoint index ranges.
    """

    def __init__(self, max_grid_size: int, scheme: str = COORD_SINGLE):
        if max_grid_size < 1:
            raise ValueError(f"max_grid_size must be at least 1, got {max_grid_size}")
        if scheme not in TOKEN_SCHEMES:
            raise ValueError(f"unknown scheme {scheme!r}; expected one of {TOKEN_SCHEMES}")
        self.max_grid_size = max_grid_size
        self.scheme = scheme
        self.special = SPECIAL_TOKENS
        if scheme == COORD_SINGLE:
            self.coord_tokens = tuple(coord_token(c) for c in _shell_order(max_grid_size))
        else:
            self.coord_tokens = tuple(
                [f"R{i}" for i in range(max_grid_size)]
                + [f"C{j}" for j in range(max_grid_size)]
            )
        self.tokens = self.special + self.coord_tokens
        self._index = {tok: i for i, tok in enumerate(self.tokens)}

    def __len__(self) -> int:
        return len(self.tokens)

    def index(self, token: str) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise ValueError(f"token {token!r} not in vocabulary") from None

    def encode(self, tokens: list[str]) -> list[int]:
        return [self.index(t) for t in tokens]

    def decode(self, indices) -> list[str]:
        return [self.tokens[int(i)] for i in indices]


# -- token sequences ---------------------------------------------------------


def _maze_edges(maze: LatticeMaze) -> list[tuple[Coord, Coord]]:
    """Edges in canonical order: down plane row-major, then right plane."""
    edges: list[tuple[Coord, Coord]] = []
    rs, cs = np.nonzero(maze.down[:-1, :]) if maze.rows > 1 else ((), ())
    for r, c in zip(rs, cs):
        edges.append(((int(r), int(c)), (int(r) + 1, int(c))))
    rs, cs = np.nonzero(maze.right[:, :-1]) if maze.cols > 1 else ((), ())
    for r, c in zip(rs, cs):
        edges.append(((int(r), int(c)), (int(r), int(c) + 1)))
    return edges


def _coord_tokens(c: Coord, scheme: str) -> list[str]:
    if scheme == COORD_SINGLE:
        return [coord_token(c)]
    return [f"R{c[0]}", f"C{c[1]}"]


def to_tokens(
    sm: SolvedMaze,
    scheme: str = COORD_SINGLE,
    rng: np.random.Generator | None = None,
    adjacency_order: list[tuple[Coord, Coord]] | None = None,
) -> list[str]:
    """Serialize a solved maze as a token sequence.

    The adjacency list is emitted in an order shuffled by rng, with the two
    endpoints of each entry also in random order. Passing adjacency_order
    (a full list of the maze's edges) fixes the adjacency block instead.
    """
    if scheme not in TOKEN_SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {TOKEN_SCHEMES}")
    edges = _maze_edges(sm.maze)
    if adjacency_order is not None:
        given = [((int(a[0]), int(a[1])), (int(b[0]), int(b[1]))) for a, b in adjacency_order]
        if {frozenset(e) for e in given} != {frozenset(e) for e in edges}:
            raise ValueError("adjacency_order does not match the maze's edge set")
        ordered = given
    else:
        if rng is None:
            rng = np.random.default_rng()
        order = rng.permutation(len(edges)) if edges else []
        flips = rng.integers(0, 2, size=len(edges)) if edges else []
        ordered = []
        for idx, flip in zip(order, flips):
            a, b = edges[int(idx)]
            ordered.append((b, a) if flip else (a, b))

    tokens = ["<ADJLIST_START>"]
    for a, b in ordered:
        tokens += _coord_tokens(a, scheme)
        tokens.append("<-->")
        tokens += _coord_tokens(b, scheme)
        tokens.append(";")
    tokens.append("<ADJLIST_END>")
    tokens.append("<ORIGIN_START>")
    tokens += _coord_tokens(sm.origin, scheme)
    tokens.append("<ORIGIN_END>")
    tokens.append("<TARGET_START>")
    tokens += _coord_tokens(sm.target, scheme)
    tokens.append("<TARGET_END>")
    tokens.append("<PATH_START>")
    for c in sm.solution:
        tokens += _coord_tokens(c, scheme)
    tokens.append("<PATH_END>")
    return tokens


_COORD_SINGLE_RE = re.compile(r"^\((\d+),(\d+)\)$")
_ROW_TOKEN_RE = re.compile(r"^R(\d+)$")
_COL_TOKEN_RE = re.compile(r"^C(\d+)$")


class _TokenReader:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0
        self.scheme: str | None = None

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def expect(self, token: str) -> None:
        got = self.peek()
        if got != token:
            raise ParseError(f"token {self.pos}: expected {token!r}, got {got!r}")
        self.pos += 1

    def at_coord(self) -> bool:
        tok = self.peek()
        if tok is None:
            return False
        return bool(_COORD_SINGLE_RE.match(tok) or _ROW_TOKEN_RE.match(tok))

    def read_coord(self) -> Coord:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"token {self.pos}: expected a coordinate, got end of sequence")
        m = _COORD_SINGLE_RE.match(tok)
        if m:
            if self.scheme == COORD_PAIR:
                raise ParseError(f"token {self.pos}: mixed coordinate schemes")
            self.scheme = COORD_SINGLE
            self.pos += 1
            return (int(m.group(1)), int(m.group(2)))
        m = _ROW_TOKEN_RE.match(tok)
        if m:
            if self.scheme == COORD_SINGLE:
                raise ParseError(f"token {self.pos}: mixed coordinate schemes")
            self.scheme = COORD_PAIR
            row = int(m.group(1))
            self.pos += 1
            col_tok = self.peek()
            cm = _COL_TOKEN_RE.match(col_tok) if col_tok is not None else None
            if not cm:
                raise ParseError(
                    f"token {self.pos}: expected a column token after {tok!r}, got {col_tok!r}"
                )
            self.pos += 1
            return (row, int(cm.group(1)))
        raise ParseError(f"token {self.pos}: expected a coordinate, got {tok!r}")


def from_tokens(
    tokens: list[str] | str, grid_shape: tuple[int, int] | None = None
) -> SolvedMaze:
    """Parse a token sequence back into a SolvedMaze.

    With grid_shape given, coordinates are checked against those bounds;
    otherwise the grid is inferred as the bounding box of all mentioned
    coordinates. Grammar violations raise ParseError naming the token index.
    """
    if isinstance(tokens, str):
        tokens = tokens.split()
    reader = _TokenReader(tokens)

    edges: list[tuple[int, Coord, Coord]] = []
    reader.expect("<ADJLIST_START>")
    while reader.peek() != "<ADJLIST_END>":
        entry_pos = reader.pos
        a = reader.read_coord()
        reader.expect("<-->")
        b = reader.read_coord()
        reader.expect(";")
        edges.append((entry_pos, a, b))
    reader.expect("<ADJLIST_END>")
    reader.expect("<ORIGIN_START>")
    origin = reader.read_coord()
    reader.expect("<ORIGIN_END>")
    reader.expect("<TARGET_START>")
    target = reader.read_coord()
    reader.expect("<TARGET_END>")
    reader.expect("<PATH_START>")
    path = []
    while reader.at_coord():
        path.append(reader.read_coord())
    if not path:
        raise ParseError(f"token {reader.pos}: path must contain at least one coordinate")
    reader.expect("<PATH_END>")
    if reader.pos != len(tokens):
        raise ParseError(f"token {reader.pos}: trailing tokens after <PATH_END>")

    mentioned = [a for _, a, _ in edges] + [b for _, _, b in edges] + [origin, target] + path
    if grid_shape is None:
        rows = max(c[0] for c in mentioned) + 1
        cols = max(c[1] for c in mentioned) + 1
    else:
        rows, cols = grid_shape
        for c in mentioned:
            if c[0] >= rows or c[1] >= cols:
                raise ParseError(
                    f"coordinate {c} out of declared bounds {rows}x{cols}"
                )

    conn = np.zeros((2, rows, cols), dtype=bool)
    for pos, (ar, ac), (br, bc) in edges:
        if ar == br and abs(ac - bc) == 1:
            conn[1, ar, min(ac, bc)] = True
        elif ac == bc and abs(ar - br) == 1:
            conn[0, min(ar, br), ac] = True
        else:
            raise ParseError(
                f"token {pos}: adjacency entry ({ar},{ac}) <--> ({br},{bc}) "
                "is not a lattice edge"
            )
    try:
        return SolvedMaze(LatticeMaze(conn), origin, target, path)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def tokens_to_text(tokens: list[str]) -> str:
    """Plain-text serialization: tokens joined by single spaces."""
    return " ".join(tokens)
