"""Command line front end.

Subcommands: count (closed-form counts and distribution rows), table
(triangular tables of a statistic), enumerate (exhaustive generation),
biject (run a bijection or its inverse on one input), verify (the
cross-checking harness) and bfile (OEIS-style "index value" listings).

All data goes to stdout and diagnostics to stderr; output is a pure
function of the flags.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import bijections, counting, paths, series, trees, verify

BFILE_SEQUENCES = (
    "box-counts",
    "tailed-counts",
    "returns-triangle",
    "long-ascents-triangle",
    "returns-diagonal",
    "long-ascents-diagonal",
    "skew-counts",
)


def _stat_fn(stat: str):
    if stat == "returns":
        return counting.count_box_by_returns
    return counting.count_box_by_long_ascents


def format_table(values: list[list[int]]) -> str:
    """Rows labeled 1..len(values), right-aligned fixed-width columns,
    two-space gutters; cells past a row's end stay blank."""
    label_w = len(str(len(values)))
    ncols = max(len(row) for row in values)
    widths = [
        max(len(str(row[j])) for row in values if j < len(row))
        for j in range(ncols)
    ]
    lines = []
    for n, row in enumerate(values, 1):
        cells = [str(n).rjust(label_w)]
        cells += [str(v).rjust(widths[j]) for j, v in enumerate(row)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def cmd_count(args) -> int:
    if args.stat is None:
        if args.j is not None:
            raise ValueError("--j needs --stat")
        print(counting.count_box(args.k, args.n))
        return 0
    fn = _stat_fn(args.stat)
    if args.j is None:
        row = [fn(args.k, args.n, j) for j in range(1, args.n + 1)]
        print(" ".join(str(v) for v in row))
    else:
        print(fn(args.k, args.n, args.j))
    return 0


def cmd_table(args) -> int:
    fn = _stat_fn(args.stat)
    if args.rows < 1:
        raise ValueError("--rows must be >= 1")
    values = [
        [fn(args.k, n, j) for j in range(1, n + 1)]
        for n in range(1, args.rows + 1)
    ]
    sys.stdout.write(format_table(values))
    return 0


def cmd_enumerate(args) -> int:
    if args.family == "skew":
        if args.k is not None:
            raise ValueError("--k only applies to --family box")
        if args.format == "compositions":
            raise ValueError("compositions only apply to --family box")
        if args.n < 0:
            raise ValueError("--n must be >= 0")
        for p in paths.generate_skew_dyck(args.n):
            print(p.word)
        return 0
    if args.k is None:
        raise ValueError("--family box needs --k")
    for p in paths.generate_k_box(args.k, args.n):
        if args.format == "compositions":
            # for k = 0 this prints the virtual ascent tuple
            print(",".join(str(a) for a in paths.box_ascents(p, args.k)))
        else:
            print(p.word)
    return 0


def _biject_forward(path: paths.PathWord, to: str, k: int) -> str:
    if to == "trees":
        tup = bijections.box_to_tree_tuple(path, k)
        return ",".join(trees.format_tree(t) for t in tup.trees)
    if to == "ktdyck":
        return bijections.box_to_kt_dyck(path, k).word
    if to == "threshold":
        return str(bijections.box_to_threshold(path, k))
    return ",".join(p.word for p in bijections.decompose_box(path, k).parts)


def _biject_inverse(value: str, to: str, k: int) -> str:
    if to == "trees":
        parsed = tuple(trees.parse_tree(text, k + 2) for text in value.split(","))
        return bijections.tree_tuple_to_box(trees.TreeTuple(parsed), k).word
    if to == "ktdyck":
        image = bijections.KtDyckPath(k + 1, k, value.strip())
        return bijections.kt_dyck_to_box(image).word
    if to == "threshold":
        seq = bijections.parse_threshold(value, k)
        return bijections.threshold_to_box(seq).word
    parts = tuple(paths.PathWord(text) for text in value.split(","))
    return bijections.compose_box(bijections.BoxDecomposition(k, parts)).word


def cmd_biject(args) -> int:
    if args.composition and args.inverse:
        raise ValueError("--composition only applies to forward maps")
    if args.inverse:
        print(_biject_inverse(args.value, args.to, args.k))
        return 0
    if args.composition:
        path = paths.path_of_composition(
            paths.parse_composition(args.value, args.k)
        )
    else:
        path = paths.parse_path(args.value)
    print(_biject_forward(path, args.to, args.k))
    return 0


def cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, args.max_k, args.max_n)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _skew_count_values(count: int) -> list[int]:
    # a path of semilength m holds at most m//2 U D L-factors
    R = series.solve_skew_dyck_series(count // 2 + 1, count)
    return [
        sum(int(R.coefficient(j, m)) for j in range(R.t_order + 1))
        for m in range(1, count + 1)
    ]


def _triangle_values(fn, k: int, count: int) -> list[int]:
    out: list[int] = []
    n = 1
    while len(out) < count:
        out.extend(fn(k, n, j) for j in range(1, n + 1))
        n += 1
    return out[:count]


def cmd_bfile(args) -> int:
    if args.count < 0:
        raise ValueError("--count must be >= 0")
    seq, k = args.sequence, args.k
    if seq == "skew-counts":
        if k is not None:
            raise ValueError("skew-counts does not take --k")
        values = _skew_count_values(args.count)
    else:
        if k is None:
            raise ValueError(f"{seq} needs --k")
        if seq == "box-counts":
            values = [counting.count_box(k, i) for i in range(1, args.count + 1)]
        elif seq == "tailed-counts":
            values = [counting.count_tailed(k, i) for i in range(1, args.count + 1)]
        elif seq == "returns-diagonal":
            values = [
                counting.count_box_by_returns(k, i, i)
                for i in range(1, args.count + 1)
            ]
        elif seq == "long-ascents-diagonal":
            values = [
                counting.count_box_by_long_ascents(k, i, i)
                for i in range(1, args.count + 1)
            ]
        elif seq == "returns-triangle":
            values = _triangle_values(counting.count_box_by_returns, k, args.count)
        else:
            values = _triangle_values(
                counting.count_box_by_long_ascents, k, args.count
            )
    for i, v in enumerate(values, 1):
        print(f"{i} {v}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxpaths",
        description="exact counts, bijections and verification for k-box paths",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts and statistic rows")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=("returns", "long-ascents"))
    p.add_argument("--j", type=int, help="single cell instead of the whole row")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("table", help="triangular table of a statistic")
    p.add_argument("--stat", choices=("returns", "long-ascents"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("enumerate", help="generate a family exhaustively")
    p.add_argument("--family", choices=("box", "skew"), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int, required=True,
                   help="size for box, semilength for skew")
    p.add_argument("--format", choices=("words", "compositions"),
                   default="words")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("biject", help="map a box path (or back)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--to", required=True,
                   choices=("trees", "ktdyck", "threshold", "decomposition"))
    p.add_argument("--inverse", action="store_true",
                   help="treat the value as an image and map back")
    p.add_argument("--composition", action="store_true",
                   help="treat the value as an ascent tuple a1,...,an")
    p.add_argument("value",
                   help="path word, composition, or image text "
                        "(prefix with -- if it starts with a dash)")
    p.set_defaults(fn=cmd_biject)

    p = sub.add_parser("verify", help="run the cross-checking harness")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--max-k", type=int, default=2)
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bfile", help="OEIS-style b-file listing")
    p.add_argument("--sequence", choices=BFILE_SEQUENCES, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(fn=cmd_bfile)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
