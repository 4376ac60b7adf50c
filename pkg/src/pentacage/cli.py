"""Command-line surface: isomer generation, censuses, partition
classification, boundary bounds, inflation, and tube construction.

Graphs travel as planar_code on stdin/stdout; analysis records go out as
TSV or JSON lines.  Results stay on stdout and progress chatter on stderr,
so every subcommand can sit in a shell pipeline.  Exit codes: 0 success,
1 usage error, 2 bad data (unreadable stream, impossible request).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import BinaryIO, Iterator

from .clusters import (
    classify_partition,
    hog_keyword,
    parse_pip,
    pip,
    pip_text,
    separation_number,
)
from .generate import generate_isomers
from .graph import FullereneGraph, GraphError
from .inflate import (
    InflationError,
    inflate_preserving_clusters,
    seed_fullerene_for_partition,
    tube_fullerene_6_6,
)
from .planarcode import (
    AnalysisRecord,
    PlanarCodeError,
    read_fullerenes,
    write_planar_code,
    write_records,
)
from .spiral import spiral_id
from .symmetry import point_group


class UsageError(Exception):
    """Bad flags or flag combinations; mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want 1
        raise UsageError(message)


def _build_parser() -> _Parser:
    top = _Parser(
        prog="pentacage",
        description="fullerene isomers and their pentagon-cluster partitions",
    )
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser(
        "generate", help="write every isomer with --n vertices as planar_code"
    )
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")

    p = sub.add_parser(
        "analyze", help="one record per planar_code graph on --in or stdin"
    )
    p.add_argument("--in", dest="infile", default="-", metavar="FILE|-")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument(
        "--ids",
        action="store_true",
        help="rank each graph among its isomers (costly for large n)",
    )

    p = sub.add_parser(
        "census",
        help="scan all isomers up to --n-max, filtered by --pip or summarised",
    )
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--pip", metavar="a,b,c", help="keep only this partition")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser(
        "classify", help="which of the four fates a partition of 12 has"
    )
    p.add_argument("partition", metavar="a,b,c")

    p = sub.add_parser(
        "bounds",
        help="hexagon/vertex caps for a big cluster, or a patch boundary bound",
    )
    p.add_argument("--cluster", type=int, metavar="K", help="cluster size 7..12")
    p.add_argument("--pentagons", type=int, metavar="P")
    p.add_argument("--hexagons", type=int, metavar="H")

    p = sub.add_parser(
        "inflate",
        help="grow a fullerene 25x per round, keeping its cluster partition",
    )
    p.add_argument("--pip", metavar="a,b,c", help="start from a catalogued seed")
    p.add_argument("--in", dest="infile", metavar="FILE|-", help="start from a graph")
    p.add_argument("--rounds", type=int, default=1)
    p.add_argument(
        "--seed-table",
        dest="seed_table",
        metavar="PATH",
        help="planar_code file searched for a --pip match instead of the "
        "bundled table",
    )

    p = sub.add_parser("tube", help="the (6,6) nanotube fullerene with J rings")
    p.add_argument("--rings", type=int, required=True, metavar="J")

    p = sub.add_parser("spiral-id", help="n:rank id per graph on --in or stdin")
    p.add_argument("--in", dest="infile", default="-", metavar="FILE|-")

    p = sub.add_parser("point-group", help="point group per graph on --in or stdin")
    p.add_argument("--in", dest="infile", default="-", metavar="FILE|-")

    return top


@contextlib.contextmanager
def _binary_in(path: str) -> Iterator[BinaryIO]:
    if path == "-":
        yield sys.stdin.buffer
    else:
        with open(path, "rb") as f:
            yield f


def _even_range(n_max: int) -> list[int]:
    return [n for n in range(20, n_max + 1, 2) if n != 22]


def _record(g: FullereneGraph, sid: str | None) -> AnalysisRecord:
    parts = pip(g)
    return AnalysisRecord(
        n=g.n,
        spiral_id=sid,
        pip=parts,
        separation=separation_number(g),
        group=point_group(g),
        hog_keyword=hog_keyword(parts),
    )


def _cmd_generate(args) -> int:
    graphs = generate_isomers(args.n, jobs=args.jobs)
    write_planar_code(sys.stdout.buffer, graphs)
    sys.stdout.buffer.flush()
    print(f"{len(graphs)} isomers of n={args.n}", file=sys.stderr)
    return 0


def _cmd_analyze(args) -> int:
    count = 0
    with _binary_in(args.infile) as stream:
        for g in read_fullerenes(stream):
            sid = spiral_id(g) if args.ids else None
            write_records(sys.stdout, [_record(g, sid)], fmt=args.format)
            count += 1
    print(f"{count} graphs analyzed", file=sys.stderr)
    return 0


def _cmd_census(args) -> int:
    target = parse_pip(args.pip) if args.pip else None
    tally: dict[tuple[int, ...], int] = {}
    for n in _even_range(args.n_max):
        isomers = generate_isomers(n, jobs=args.jobs)
        hits = 0
        for rank, g in enumerate(isomers, start=1):
            parts = pip(g)
            if target is None:
                tally[parts] = tally.get(parts, 0) + 1
            elif parts == target:
                write_records(
                    sys.stdout, [_record(g, f"{n}:{rank}")], fmt=args.format
                )
                hits += 1
        print(
            f"n={n}: {len(isomers)} isomers"
            + (f", {hits} with pip {pip_text(target)}" if target else ""),
            file=sys.stderr,
        )
    if target is None:
        for parts in sorted(tally):
            if args.format == "tsv":
                print(f"{pip_text(parts)}\t{tally[parts]}")
            else:
                print(
                    json.dumps(
                        {"pip": list(parts), "count": tally[parts]},
                        separators=(",", ":"),
                    )
                )
    return 0


def _cmd_classify(args) -> int:
    cls = classify_partition(parse_pip(args.partition))
    if cls.count is not None:
        print(f"{cls.label} ({cls.letter}): {cls.count} fullerenes")
    else:
        print(f"{cls.label} ({cls.letter})")
    return 0


def _cmd_bounds(args) -> int:
    from .patches import max_hexagons_with_cluster, min_boundary_length

    if args.cluster is not None:
        h = max_hexagons_with_cluster(args.cluster)
        print(f"max hexagons {h}, max vertices {2 * h + 20}")
        return 0
    if args.pentagons is not None and args.hexagons is not None:
        print(
            f"min boundary length "
            f"{min_boundary_length(args.pentagons, args.hexagons)}"
        )
        return 0
    raise UsageError("bounds needs --cluster K or --pentagons P --hexagons H")


def _first_graph_with_pip(path: str, parts: tuple[int, ...]) -> FullereneGraph:
    with _binary_in(path) as stream:
        for g in read_fullerenes(stream):
            if pip(g) == parts:
                return g
    raise InflationError(f"{path} holds no graph with pip {pip_text(parts)}")


def _cmd_inflate(args) -> int:
    if args.pip:
        parts = parse_pip(args.pip)
        if args.seed_table:
            g = _first_graph_with_pip(args.seed_table, parts)
        else:
            g = seed_fullerene_for_partition(parts)
    elif args.infile:
        with _binary_in(args.infile) as stream:
            g = next(read_fullerenes(stream), None)
        if g is None:
            raise PlanarCodeError("no graph on the input stream")
    else:
        raise UsageError("inflate needs --pip or --in")
    big = inflate_preserving_clusters(g, rounds=args.rounds)
    write_planar_code(sys.stdout.buffer, [big])
    sys.stdout.buffer.flush()
    print(
        f"n={g.n} -> n={big.n}, pip {pip_text(pip(big))}, "
        f"separation {separation_number(big)}",
        file=sys.stderr,
    )
    return 0


def _cmd_tube(args) -> int:
    t = tube_fullerene_6_6(args.rings)
    write_planar_code(sys.stdout.buffer, [t])
    sys.stdout.buffer.flush()
    print(
        f"n={t.n}, separation {separation_number(t)}",
        file=sys.stderr,
    )
    return 0


def _cmd_spiral_id(args) -> int:
    with _binary_in(args.infile) as stream:
        for g in read_fullerenes(stream):
            print(spiral_id(g))
    return 0


def _cmd_point_group(args) -> int:
    with _binary_in(args.infile) as stream:
        for g in read_fullerenes(stream):
            print(point_group(g))
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "analyze": _cmd_analyze,
    "census": _cmd_census,
    "classify": _cmd_classify,
    "bounds": _cmd_bounds,
    "inflate": _cmd_inflate,
    "tube": _cmd_tube,
    "spiral-id": _cmd_spiral_id,
    "point-group": _cmd_point_group,
}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    except (
        PlanarCodeError,
        GraphError,
        InflationError,
        LookupError,
        ValueError,
        OSError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
