"""Fraction-sweep benchmark: timings, CSV output, and summary figures.

The sweep runs the requested construction strategies and design modes on
growing prefixes of the rating file (1/d, 2/d, ..., d/d of the triples)
and appends one CSV row per measured run.  Parsing and slicing stay
outside the measured window so rows compare the construction work only.
Each (fraction, run) pair is repeated ``reps`` times and the median wall
time is recorded.

Alongside the CSV, two figures are rendered: wall time vs. fraction for
the construction strategies, and the same for the two design modes.
"""

from __future__ import annotations

import csv
import random
import statistics
import time
from dataclasses import dataclass, fields
from pathlib import Path

from .bipartite import BipartiteRatingGraph, RatingTriple, slice_fraction
from .connectivity import bfs_components, design_concurrent, design_sequential
from .projection import PROJECTIONS

ALGORITHMS = tuple(sorted(PROJECTIONS))
MODES = ("sequential", "concurrent")

CSV_HEADER = [
    "dataset",
    "fraction",
    "algorithm",
    "n_users",
    "n_items",
    "n_ratings",
    "n_edges",
    "n_components",
    "wall_time_ms",
]


@dataclass
class BenchRecord:
    """One timed run on one slice."""

    dataset: str
    fraction: str
    algorithm: str
    n_users: int
    n_items: int
    n_ratings: int
    n_edges: int
    n_components: int
    wall_time_ms: float

    def as_row(self) -> list[str]:
        return [str(getattr(self, f.name)) for f in fields(self)]


def generate_synthetic_triples(
    n1: int, n2: int, m: int, skew: float, seed: int = 0
) -> list[RatingTriple]:
    """Draw m ratings with uniform users and rank-skewed item popularity.

    Item i is chosen with probability proportional to (i + 1) ** -skew,
    yielding power-law item degrees; skew 0 gives uniform items.
    Duplicate pairs may occur and collapse during graph construction.
    """
    if n1 <= 0 or n2 <= 0 or m < 0:
        raise ValueError("synthetic spec requires n1 > 0, n2 > 0, m >= 0")
    rng = random.Random(seed)
    weights = [(i + 1) ** -skew for i in range(n2)]
    items = rng.choices(range(n2), weights=weights, k=m)
    return [
        RatingTriple(f"u{rng.randrange(n1)}", f"i{item}") for item in items
    ]


def _timed_run(fn, reps: int) -> tuple[object, float]:
    """Run fn() reps times; return (last result, median milliseconds)."""
    times = []
    result = None
    for _ in range(reps):
        start = time.perf_counter()
        result = fn()
        times.append((time.perf_counter() - start) * 1000.0)
    return result, statistics.median(times)


def run_slice(
    g: BipartiteRatingGraph,
    dataset: str,
    fraction: str,
    algorithms: list[str],
    modes: list[str],
    reps: int,
    seed: int | None = None,
) -> list[BenchRecord]:
    """Benchmark one already-built slice; component counts are filled in
    outside the measured window for projection-only runs."""
    records = []
    common = dict(
        dataset=dataset,
        fraction=fraction,
        n_users=g.n1,
        n_items=g.n2,
        n_ratings=g.m,
    )
    for name in algorithms:
        fn = PROJECTIONS[name]
        net, ms = _timed_run(lambda: fn(g), reps)
        comps = bfs_components(net)
        records.append(
            BenchRecord(
                algorithm=name,
                n_edges=net.m_prime,
                n_components=comps.k,
                wall_time_ms=round(ms, 3),
                **common,
            )
        )
    for mode in modes:
        if mode == "sequential":
            run = lambda: design_sequential(g)
        elif mode == "concurrent":
            policy = seed if seed is not None else "lowest"
            run = lambda: design_concurrent(g, policy)
        else:
            raise ValueError(f"unknown mode {mode!r}; choose from {MODES}")
        (net, comps), ms = _timed_run(run, reps)
        records.append(
            BenchRecord(
                algorithm=mode,
                n_edges=net.m_prime,
                n_components=comps.k,
                wall_time_ms=round(ms, 3),
                **common,
            )
        )
    return records


def run_sweep(
    triples: list[RatingTriple],
    dataset: str,
    algorithms: list[str],
    modes: list[str],
    denominator: int,
    reps: int = 3,
    seed: int | None = None,
) -> list[BenchRecord]:
    """Run the full 1/d ... d/d sweep and return all records."""
    if denominator < 1:
        raise ValueError(f"denominator must be >= 1, got {denominator}")
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")
    for name in algorithms:
        if name not in PROJECTIONS:
            raise ValueError(
                f"unknown algorithm {name!r}; choose from {ALGORITHMS}"
            )
    for mode in modes:
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}; choose from {MODES}")
    records = []
    for numerator in range(1, denominator + 1):
        g = slice_fraction(triples, numerator, denominator)
        fraction = f"{numerator}/{denominator}"
        records.extend(
            run_slice(g, dataset, fraction, algorithms, modes, reps, seed)
        )
    return records


def append_csv(records: list[BenchRecord], path: str | Path) -> None:
    """Append records, writing the header only when the file is new or empty."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    need_header = not path.exists() or path.stat().st_size == 0
    with path.open("a", newline="") as fh:
        writer = csv.writer(fh)
        if need_header:
            writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow(rec.as_row())


def _fraction_value(fraction: str) -> float:
    num, _, den = fraction.partition("/")
    return int(num) / int(den) if den else float(num)


def render_figures(records: list[BenchRecord], csv_path: str | Path) -> list[Path]:
    """Render wall-time-vs-fraction figures next to the CSV.

    One figure covers the construction strategies, the other the design
    modes; a figure is skipped when it would have no series.  Returns the
    paths written.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    csv_path = Path(csv_path)
    groups: dict[str, list[BenchRecord]] = {}
    for rec in records:
        groups.setdefault(rec.algorithm, []).append(rec)

    panels = [
        ("design", [a for a in ALGORITHMS if a in groups], "construction strategy"),
        ("connectivity", [m for m in MODES if m in groups], "design mode"),
    ]
    written = []
    for suffix, names, legend_title in panels:
        if not names:
            continue
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        for name in names:
            recs = sorted(groups[name], key=lambda r: _fraction_value(r.fraction))
            ax.plot(
                [_fraction_value(r.fraction) for r in recs],
                [r.wall_time_ms for r in recs],
                marker="o",
                label=name,
            )
        ax.set_xlabel("portion of the ratings used")
        ax.set_ylabel("wall time (ms)")
        dataset = records[0].dataset if records else ""
        ax.set_title(f"{dataset}: time vs. dataset portion")
        ax.legend(title=legend_title)
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        out = csv_path.with_name(f"{csv_path.stem}_{suffix}.png")
        fig.savefig(out, dpi=120)
        plt.close(fig)
        written.append(out)
    return written
