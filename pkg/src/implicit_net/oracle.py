"""Brute-force reference checks, kept independent of the construction code.

Everything here re-derives its answers directly from the bipartite data
(or by its own local traversal), so agreement with the projection and
connectivity modules is evidence of correctness rather than a tautology.
The pairwise checks are quadratic and gated by a user-count limit to keep
them from being run on inputs where they would take hours.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipartite import BipartiteRatingGraph
from .connectivity import ComponentSet
from .projection import UserNetwork, two_path_counts

DEFAULT_MAX_USERS = 2000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: str | None = None


@dataclass
class VerificationReport:
    checks: list[CheckResult]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            mark = "ok" if c.passed else "FAIL"
            suffix = f" ({c.counterexample})" if c.counterexample else ""
            lines.append(f"[{mark:4}] {c.name}{suffix}")
        lines.append(f"overall: {'pass' if self.overall else 'FAIL'}")
        return "\n".join(lines)

    def to_kv_lines(self) -> list[str]:
        return [
            f"check={c.name} pass={c.passed} "
            f"counterexample={c.counterexample if c.counterexample else 'none'}"
            for c in self.checks
        ]


def oracle_two_path(g: BipartiteRatingGraph, u: int, v: int) -> bool:
    """Is there an item rated by both u and v?  Checked by scanning every item."""
    if u == v:
        raise ValueError("self-pairs are excluded from the user network")
    if not (0 <= u < g.n1 and 0 <= v < g.n1):
        raise ValueError(f"user pair ({u}, {v}) out of range [0, {g.n1})")
    for raters in g.item_neighbors:
        if u in raters and v in raters:
            return True
    return False


def _require_size(n1: int, max_users: int) -> None:
    if n1 > max_users:
        raise ValueError(
            f"refusing quadratic verification on {n1} users "
            f"(limit {max_users}); raise max_users to override"
        )


def verify_projection(
    g: BipartiteRatingGraph,
    net: UserNetwork,
    max_users: int = DEFAULT_MAX_USERS,
) -> VerificationReport:
    """Check a projected network against the rating data it came from.

    Four checks: the shared-item edge criterion over all user pairs, the
    per-item clique property, symmetry plus absence of self-loops, and the
    count-matrix diagonal against independently recomputed rating counts.
    """
    if net.n1 != g.n1:
        raise ValueError(f"network has {net.n1} users, graph has {g.n1}")
    _require_size(g.n1, max_users)
    checks = []
    labels = g.user_labels

    counterexample = None
    for x in range(g.n1):
        for y in range(x + 1, g.n1):
            if net.has_edge(x, y) != oracle_two_path(g, x, y):
                kind = "spurious" if net.has_edge(x, y) else "missing"
                counterexample = f"{kind} edge ({labels[x]}, {labels[y]})"
                break
        if counterexample:
            break
    checks.append(CheckResult("edge_criterion", counterexample is None, counterexample))

    counterexample = None
    for i, raters in enumerate(g.item_neighbors):
        for a_pos in range(len(raters) - 1):
            a = raters[a_pos]
            for b in raters[a_pos + 1 :]:
                if not net.has_edge(a, b):
                    counterexample = (
                        f"raters of item {g.item_labels[i]} not a clique: "
                        f"({labels[a]}, {labels[b]})"
                    )
                    break
            if counterexample:
                break
        if counterexample:
            break
    checks.append(CheckResult("item_cliques", counterexample is None, counterexample))

    counterexample = None
    for u, nbrs in enumerate(net.neighbor_sets):
        if u in nbrs:
            counterexample = f"self-loop at {labels[u]}"
            break
        for v in nbrs:
            if u not in net.neighbor_sets[v]:
                counterexample = f"asymmetric edge ({labels[u]}, {labels[v]})"
                break
        if counterexample:
            break
    checks.append(
        CheckResult("symmetry_irreflexivity", counterexample is None, counterexample)
    )

    counterexample = None
    diagonal = two_path_counts(g).diagonal()
    for u in range(g.n1):
        # recounted from the item side, not taken from user_neighbors
        degree = sum(1 for raters in g.item_neighbors if u in raters)
        if diagonal[u] != degree:
            counterexample = (
                f"diagonal[{labels[u]}] = {diagonal[u]}, rating count = {degree}"
            )
            break
    checks.append(
        CheckResult("diagonal_degrees", counterexample is None, counterexample)
    )

    return VerificationReport(checks)


def verify_components(
    net: UserNetwork,
    cs: ComponentSet,
    labels: list[str] | None = None,
) -> VerificationReport:
    """Check a component partition against the network it claims to partition.

    Coverage violations are reported as failed checks rather than raised.
    When ``labels`` is given, counterexamples use original identifiers.
    """
    n1 = net.n1
    checks = []

    def lbl(u: int) -> str:
        return labels[u] if labels and 0 <= u < len(labels) else str(u)

    seen: dict[int, int] = {}
    counterexample = None
    for ci, comp in enumerate(cs.components):
        for u in comp:
            if u in seen:
                counterexample = f"user {lbl(u)} in components {seen[u]} and {ci}"
                break
            seen[u] = ci
        if counterexample:
            break
    checks.append(CheckResult("disjoint", counterexample is None, counterexample))

    counterexample = None
    if not all(0 <= u < n1 for u in seen):
        bad = next(u for u in seen if not 0 <= u < n1)
        counterexample = f"user index {bad} outside [0, {n1})"
    elif len(seen) != n1:
        missing = next(u for u in range(n1) if u not in seen)
        counterexample = f"user {lbl(missing)} not covered"
    checks.append(CheckResult("exhaustive", counterexample is None, counterexample))

    nbrs = net.neighbor_sets
    counterexample = None
    for u in range(min(n1, len(nbrs))):
        if u not in seen:
            continue
        for v in nbrs[u]:
            if v in seen and seen[v] != seen[u]:
                counterexample = f"edge ({lbl(u)}, {lbl(v)}) crosses components"
                break
        if counterexample:
            break
    checks.append(CheckResult("no_cross_edges", counterexample is None, counterexample))

    counterexample = None
    for ci, comp in enumerate(cs.components):
        members = set(comp)
        if not members or not members <= set(range(n1)):
            continue  # covered by the exhaustiveness check
        start = comp[0]
        reached = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in nbrs[u]:
                if v in members and v not in reached:
                    reached.add(v)
                    stack.append(v)
        if reached != members:
            unreachable = min(members - reached)
            counterexample = (
                f"component {ci} not connected: "
                f"{lbl(unreachable)} unreachable from {lbl(start)}"
            )
            break
    checks.append(
        CheckResult("internally_connected", counterexample is None, counterexample)
    )

    return VerificationReport(checks)
