"""Command-line interface.

Subcommands: project, components, bench, verify, stats.  Exit codes:
0 success, 1 usage error, 2 I/O or input-format error, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import bench as bench_mod
from .bipartite import (
    BipartiteRatingGraph,
    ParseError,
    RatingTriple,
    build_graph,
    max_item_degree,
    parse_triples,
)
from .connectivity import ComponentSet, design_concurrent, design_sequential
from .oracle import (
    DEFAULT_MAX_USERS,
    CheckResult,
    VerificationReport,
    verify_components,
    verify_projection,
)
from .projection import PROJECTIONS, UserNetwork, project

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_triples(path: str) -> list[RatingTriple]:
    with open(path, encoding="utf-8") as fh:
        return parse_triples(fh)


def _write_lines(lines, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")
    else:
        for line in lines:
            print(line)


def _edge_lines(net: UserNetwork, labels: list[str]):
    for u, v in net.edges():
        yield f"{labels[u]} {labels[v]}"


def _component_lines(cs: ComponentSet, labels: list[str]):
    for comp in cs.components:
        yield " ".join(labels[u] for u in comp)


def _summary_lines(cs: ComponentSet, n1: int):
    sizes = cs.sizes_desc()
    giant = sizes[0] / n1 if n1 else 0.0
    yield f"k={cs.k}"
    yield f"largest_sizes={','.join(str(s) for s in sizes[:5])}"
    yield f"giant_fraction={giant:.6f}"


def cmd_project(args) -> int:
    triples = _load_triples(args.input)
    g = build_graph(triples)
    start = time.perf_counter()
    net = project(g, args.algorithm)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    _write_lines(_edge_lines(net, g.user_labels), args.output)
    print(
        f"n_users={g.n1} n_items={g.n2} n_ratings={g.m} "
        f"n_edges={net.m_prime} max_item_degree={max_item_degree(g)} "
        f"wall_time_ms={elapsed_ms:.3f}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_components(args) -> int:
    triples = _load_triples(args.input)
    g = build_graph(triples)
    start = time.perf_counter()
    if args.mode == "sequential":
        net, cs = design_sequential(g, args.algorithm)
    else:
        policy = args.seed if args.seed is not None else "lowest"
        net, cs = design_concurrent(g, policy)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.summary:
        _write_lines(_summary_lines(cs, g.n1), args.output)
    else:
        _write_lines(_component_lines(cs, g.user_labels), args.output)
    print(
        f"n_users={g.n1} n_edges={net.m_prime} k={cs.k} "
        f"wall_time_ms={elapsed_ms:.3f}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_stats(args) -> int:
    triples = _load_triples(args.input)
    g = build_graph(triples)
    print(f"users={g.n1}")
    print(f"items={g.n2}")
    print(f"ratings={g.m}")
    print(f"duplicates_collapsed={g.duplicates_collapsed}")
    print(f"ratings_total={g.m + g.duplicates_collapsed}")
    print(f"density={g.density:.6f}")
    print(f"max_item_degree={max_item_degree(g)}")
    return EXIT_OK


def _parse_synthetic_spec(spec: str) -> tuple[int, int, int, float]:
    parts = spec.split(",")
    if len(parts) != 4:
        raise ValueError("--synthetic expects 'n1,n2,m,skew'")
    try:
        return int(parts[0]), int(parts[1]), int(parts[2]), float(parts[3])
    except ValueError:
        raise ValueError(f"bad --synthetic spec {spec!r}") from None


def _split_list(text: str) -> list[str]:
    return [part for part in text.split(",") if part]


def cmd_bench(args) -> int:
    if bool(args.input) == bool(args.synthetic):
        raise ValueError("bench needs an input file or --synthetic, not both")
    if args.synthetic:
        n1, n2, m, skew = _parse_synthetic_spec(args.synthetic)
        triples = bench_mod.generate_synthetic_triples(
            n1, n2, m, skew, seed=args.seed if args.seed is not None else 0
        )
        dataset = f"synthetic-{n1}x{n2}-{m}"
    else:
        triples = _load_triples(args.input)
        dataset = Path(args.input).stem
    algorithms = _split_list(args.algorithm)
    modes = _split_list(args.mode)
    if not algorithms and not modes:
        raise ValueError("nothing to benchmark: empty --algorithm and --mode")
    records = bench_mod.run_sweep(
        triples,
        dataset,
        algorithms,
        modes,
        denominator=args.fractions,
        reps=args.reps,
        seed=args.seed,
    )
    if args.csv:
        bench_mod.append_csv(records, args.csv)
        print(f"wrote {len(records)} records to {args.csv}", file=sys.stderr)
        if not args.no_figures:
            for path in bench_mod.render_figures(records, args.csv):
                print(f"wrote figure {path}", file=sys.stderr)
    else:
        print(",".join(bench_mod.CSV_HEADER))
        for rec in records:
            print(",".join(rec.as_row()))
    return EXIT_OK


def cmd_verify(args) -> int:
    triples = _load_triples(args.input)
    g = build_graph(triples)
    if g.n1 > args.max_users:
        print(
            f"error: {g.n1} users exceeds verification limit {args.max_users}; "
            f"pass --max-users to override",
            file=sys.stderr,
        )
        return EXIT_USAGE

    nets = {name: fn(g) for name, fn in PROJECTIONS.items()}
    checks: list[CheckResult] = []
    names = sorted(nets)
    reference = nets[names[0]]
    agree = all(nets[n].edge_set() == reference.edge_set() for n in names[1:])
    checks.append(
        CheckResult(
            "algorithms_agree",
            agree,
            None if agree else "projection strategies disagree on the edge set",
        )
    )
    for name in names:
        report = verify_projection(g, nets[name], max_users=args.max_users)
        checks.extend(
            CheckResult(f"{name}_{c.name}", c.passed, c.counterexample)
            for c in report.checks
        )

    seq_net, seq_cs = design_sequential(g)
    policy = args.seed if args.seed is not None else "lowest"
    con_net, con_cs = design_concurrent(g, policy)
    partitions_agree = (
        seq_cs.as_sets() == con_cs.as_sets() and seq_net == con_net
    )
    checks.append(
        CheckResult(
            "modes_agree",
            partitions_agree,
            None if partitions_agree else "sequential and concurrent designs differ",
        )
    )
    for mode, (net, cs) in (
        ("sequential", (seq_net, seq_cs)),
        ("concurrent", (con_net, con_cs)),
    ):
        report = verify_components(net, cs, labels=g.user_labels)
        checks.extend(
            CheckResult(f"{mode}_{c.name}", c.passed, c.counterexample)
            for c in report.checks
        )

    combined = VerificationReport(checks)
    for line in combined.to_kv_lines():
        print(line)
    print(combined.to_text(), file=sys.stderr)
    return EXIT_OK if combined.overall else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="implicit-net",
        description="Build the implicit user network from user-item rating "
        "data and compute its connected components.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", help="write the projected user network as an edge list")
    p.add_argument("input", help="rating file: '<user> <item> [weight] [timestamp]' per line")
    p.add_argument(
        "--algorithm",
        default="clique",
        choices=sorted(PROJECTIONS),
        help="construction strategy (default: clique)",
    )
    p.add_argument("--output", help="edge-list path (default: stdout)")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("components", help="compute connected components of the user network")
    p.add_argument("input")
    p.add_argument(
        "--mode",
        default="sequential",
        choices=["sequential", "concurrent"],
        help="project-then-sweep or interleaved construction (default: sequential)",
    )
    p.add_argument(
        "--algorithm",
        default="clique",
        choices=sorted(PROJECTIONS),
        help="projection used by sequential mode (default: clique)",
    )
    p.add_argument("--seed", type=int, help="seed for the concurrent random pick policy")
    p.add_argument("--output", help="components path (default: stdout)")
    p.add_argument(
        "--summary",
        action="store_true",
        help="emit k, the five largest sizes, and the giant-component fraction "
        "instead of the full membership lines",
    )
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("bench", help="fraction-sweep benchmark with CSV and figures")
    p.add_argument("input", nargs="?", help="rating file (or use --synthetic)")
    p.add_argument(
        "--synthetic",
        metavar="N1,N2,M,SKEW",
        help="generate ratings instead of reading a file: uniform users, "
        "power-law item degrees with the given skew",
    )
    p.add_argument(
        "--algorithm",
        default="clique,matmul,exhaustive",
        help="comma-separated construction strategies (default: all three; '' for none)",
    )
    p.add_argument(
        "--mode",
        default="",
        help="comma-separated design modes to time as well (e.g. 'sequential,concurrent')",
    )
    p.add_argument(
        "--fractions",
        type=int,
        default=5,
        metavar="D",
        help="sweep prefixes 1/D ... D/D of the ratings (default: 5)",
    )
    p.add_argument("--reps", type=int, default=3, help="repetitions per run, median reported (default: 3)")
    p.add_argument("--seed", type=int, help="seed for --synthetic and the concurrent pick policy")
    p.add_argument("--csv", help="append records to this CSV and render figures next to it")
    p.add_argument("--no-figures", action="store_true", help="skip figure rendering")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="cross-check all strategies and modes on one input")
    p.add_argument("input")
    p.add_argument(
        "--max-users",
        type=int,
        default=DEFAULT_MAX_USERS,
        help=f"size gate for the quadratic checks (default: {DEFAULT_MAX_USERS})",
    )
    p.add_argument("--seed", type=int, help="seed for the concurrent random pick policy")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="print dataset statistics")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
