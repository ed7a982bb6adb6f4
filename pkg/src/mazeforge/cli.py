"""Command-line front end: generate, filter, render, stats, benchmark.

Every subcommand is a thin wrapper over the library, so CLI output matches
the equivalent library calls byte for byte. Exit codes: 0 success, 1 usage
error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .dataset import (
    DatasetLoadError,
    GenerationExhaustedError,
    MazeDataset,
    MazeDatasetConfig,
    default_workers,
    load_dataset,
    render_item,
    run_benchmark,
    save_dataset,
)
from .filters import FILTERS
from .formats import COORD_PAIR, COORD_SINGLE, ParseError
from .generators import GENERATORS
from .lattice import NoPathError, UnsolvableMazeError


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; remap to this tool's usage code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _parse_value(text: str):
    """Parse a flag value: JSON where possible, bare string otherwise."""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _parse_kv(pairs: list[str], flag: str) -> dict:
    out = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise _UsageError(f"{flag} expects key=value, got {pair!r}")
        out[key] = _parse_value(value)
    return out


def _parse_algorithm_spec(spec: str) -> tuple[str, dict]:
    """Parse 'name' or 'name:k=v,k=v' benchmark algorithm specs."""
    name, sep, rest = spec.partition(":")
    params = {}
    if sep and rest:
        params = _parse_kv(rest.split(","), "--algorithms")
    return name, params


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mazeforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a dataset and write a container file")
    p.add_argument("--name", default="dataset")
    p.add_argument("--grid-n", type=int, help="square grid size (sets rows and cols)")
    p.add_argument("--grid-rows", type=int)
    p.add_argument("--grid-cols", type=int)
    p.add_argument("--n-mazes", type=int, required=True)
    p.add_argument("--algorithm", required=True)
    p.add_argument("--param", action="append", default=[], metavar="K=V")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", required=True)

    p = sub.add_parser("filter", help="apply a filter and append its record")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--filter", dest="filter_name", required=True)
    p.add_argument("--arg", action="append", default=[], metavar="K=V")

    p = sub.add_parser("render", help="render one maze from a dataset")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--format", required=True, choices=["ascii", "pixels", "tokens"])
    p.add_argument("--scheme", choices=[COORD_SINGLE, COORD_PAIR], default=COORD_SINGLE)
    p.add_argument("--out", default=None)

    p = sub.add_parser("stats", help="print config, filter history, and path lengths")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("benchmark", help="time maze production and write a CSV")
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument(
        "--algorithms", nargs="+", required=True, metavar="NAME[:K=V,...]",
    )
    p.add_argument("--n-per-cell", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    return parser


def _cmd_generate(args) -> int:
    if args.grid_n is not None:
        if args.grid_rows is not None or args.grid_cols is not None:
            raise _UsageError("--grid-n cannot be combined with --grid-rows/--grid-cols")
        rows = cols = args.grid_n
    elif args.grid_rows is not None and args.grid_cols is not None:
        rows, cols = args.grid_rows, args.grid_cols
    else:
        raise _UsageError("specify --grid-n or both --grid-rows and --grid-cols")
    if args.algorithm not in GENERATORS:
        raise _UsageError(
            f"unknown algorithm {args.algorithm!r}; "
            f"available: {', '.join(sorted(GENERATORS))}"
        )
    params = _parse_kv(args.param, "--param")
    try:
        config = MazeDatasetConfig(
            name=args.name,
            grid_rows=rows,
            grid_cols=cols,
            n_mazes=args.n_mazes,
            generator=args.algorithm,
            generator_params=params,
            seed=args.seed,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    workers = args.workers if args.workers is not None else default_workers()
    dataset = MazeDataset.generate(config, workers=workers)
    save_dataset(dataset, args.out)
    print(f"wrote {len(dataset)} mazes to {args.out}")
    return 0


def _cmd_filter(args) -> int:
    if args.filter_name not in FILTERS:
        raise _UsageError(
            f"unknown filter {args.filter_name!r}; available: {', '.join(sorted(FILTERS))}"
        )
    params = _parse_kv(args.arg, "--arg")
    dataset = load_dataset(args.infile)
    before = len(dataset)
    try:
        filtered = dataset.apply_filter(args.filter_name, **params)
    except (ValueError, TypeError) as exc:
        raise _UsageError(str(exc)) from exc
    save_dataset(filtered, args.out)
    print(f"kept {len(filtered)} of {before} mazes; wrote {args.out}")
    return 0


def _write_pixels(pixels, path: str) -> None:
    if path.endswith(".ppm"):
        height, width = pixels.shape[:2]
        with open(path, "wb") as fh:
            fh.write(f"P6\n{width} {height}\n255\n".encode("ascii"))
            fh.write(pixels.tobytes())
    elif path.endswith(".png"):
        from PIL import Image

        Image.fromarray(pixels, mode="RGB").save(path)
    else:
        raise _UsageError(f"pixel output must end in .ppm or .png, got {path!r}")


def _cmd_render(args) -> int:
    dataset = load_dataset(args.infile)
    rendered = render_item(dataset, args.index, args.format, scheme=args.scheme)
    if args.format == "pixels":
        if args.out is None:
            raise _UsageError("--format pixels requires --out (a .ppm or .png path)")
        _write_pixels(rendered, args.out)
        return 0
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(rendered + "\n")
    else:
        print(rendered)
    return 0


def _cmd_stats(args) -> int:
    dataset = load_dataset(args.infile)
    print(f"name: {dataset.config.name}")
    print(f"config: {json.dumps(dataset.config.to_json_dict())}")
    print(f"mazes: {len(dataset)}")
    if dataset.applied_filters:
        print("applied filters:")
        for rec in dataset.applied_filters:
            print(f"  {rec.name} {json.dumps(dict(sorted(rec.params.items())))}")
    else:
        print("applied filters: none")
    lengths = Counter(len(m.solution) - 1 for m in dataset.mazes)
    print("solution length histogram (edges):")
    for length in sorted(lengths):
        print(f"  {length}: {lengths[length]}")
    return 0


def _cmd_benchmark(args) -> int:
    algorithms = []
    for spec in args.algorithms:
        name, params = _parse_algorithm_spec(spec)
        if name not in GENERATORS:
            raise _UsageError(
                f"unknown algorithm {name!r}; available: {', '.join(sorted(GENERATORS))}"
            )
        algorithms.append((name, params))
    try:
        table = run_benchmark(
            sizes=args.sizes,
            algorithms=algorithms,
            n_per_cell=args.n_per_cell,
            seed=args.seed,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    table.to_csv(args.out)
    print(table.format_table())
    print(f"wrote {args.out}")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "filter": _cmd_filter,
    "render": _cmd_render,
    "stats": _cmd_stats,
    "benchmark": _cmd_benchmark,
}


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        DatasetLoadError,
        ParseError,
        GenerationExhaustedError,
        UnsolvableMazeError,
        NoPathError,
        IndexError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
