"""User-item rating data as a bipartite graph.

Input files are plain text, one rating per line::

    <user> <item> [weight] [timestamp]

Fields are whitespace-separated; lines starting with '%' or '#' and blank
lines are skipped.  Ratings are binarized: any (user, item) occurrence
becomes an edge, duplicates collapse to a single edge.  String identifiers
are remapped to dense indices in first-occurrence order, so parsing is
deterministic for a given file.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class ParseError(ValueError):
    """Raised for a malformed input line; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class RatingTriple:
    """One rating event.  The weight and timestamp are parsed but ignored."""

    user_id: str
    item_id: str
    weight: float | None = None
    timestamp: int | None = None

    def __post_init__(self):
        if not self.user_id or not self.item_id:
            raise ValueError("user_id and item_id must be non-empty")


@dataclass
class BipartiteRatingGraph:
    """Immutable bipartite graph over dense user/item indices.

    ``user_neighbors[u]`` is the sorted list of item indices rated by user
    ``u``; ``item_neighbors[i]`` is the sorted list of user indices that
    rated item ``i``.  Both views are kept so either side has O(1)
    neighborhood access.  ``duplicates_collapsed`` counts input pairs that
    were dropped by binarization.
    """

    n1: int
    n2: int
    m: int
    user_neighbors: list[list[int]]
    item_neighbors: list[list[int]]
    user_labels: list[str]
    item_labels: list[str]
    duplicates_collapsed: int = 0
    user_index: dict[str, int] = field(repr=False, default_factory=dict)
    item_index: dict[str, int] = field(repr=False, default_factory=dict)

    def user_degree(self, u: int) -> int:
        return len(self.user_neighbors[u])

    def item_degree(self, i: int) -> int:
        return len(self.item_neighbors[i])

    @property
    def density(self) -> float:
        """Edge density m / (n1 * n2); 0.0 for an empty side."""
        if self.n1 == 0 or self.n2 == 0:
            return 0.0
        return self.m / (self.n1 * self.n2)


def parse_triples(lines: Iterable[str]) -> list[RatingTriple]:
    """Parse raw text lines into rating triples, preserving file order.

    Raises ParseError when a non-comment line has fewer than two fields.
    Weight and timestamp fields are parsed leniently and extra trailing
    fields are discarded.
    """
    triples = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in "%#":
            continue
        fields = stripped.split()
        if len(fields) < 2:
            raise ParseError(lineno, f"expected at least 2 fields, got {len(fields)}")
        weight = _maybe_number(fields[2]) if len(fields) >= 3 else None
        timestamp = _maybe_int(fields[3]) if len(fields) >= 4 else None
        triples.append(RatingTriple(fields[0], fields[1], weight, timestamp))
    return triples


def _maybe_number(text: str) -> float | None:
    try:
        return float(text)
    except ValueError:
        return None


def _maybe_int(text: str) -> int | None:
    try:
        return int(float(text))
    except ValueError:
        return None


def build_graph(triples: Iterable[RatingTriple]) -> BipartiteRatingGraph:
    """Build the bipartite graph from triples in order, collapsing duplicates."""
    user_index: dict[str, int] = {}
    item_index: dict[str, int] = {}
    user_labels: list[str] = []
    item_labels: list[str] = []
    user_sets: list[set[int]] = []
    item_sets: list[set[int]] = []
    duplicates = 0

    for t in triples:
        u = user_index.get(t.user_id)
        if u is None:
            u = len(user_labels)
            user_index[t.user_id] = u
            user_labels.append(t.user_id)
            user_sets.append(set())
        i = item_index.get(t.item_id)
        if i is None:
            i = len(item_labels)
            item_index[t.item_id] = i
            item_labels.append(t.item_id)
            item_sets.append(set())
        if i in user_sets[u]:
            duplicates += 1
            continue
        user_sets[u].add(i)
        item_sets[i].add(u)

    user_neighbors = [sorted(s) for s in user_sets]
    item_neighbors = [sorted(s) for s in item_sets]
    m = sum(len(s) for s in user_neighbors)
    return BipartiteRatingGraph(
        n1=len(user_labels),
        n2=len(item_labels),
        m=m,
        user_neighbors=user_neighbors,
        item_neighbors=item_neighbors,
        user_labels=user_labels,
        item_labels=item_labels,
        duplicates_collapsed=duplicates,
        user_index=user_index,
        item_index=item_index,
    )


def parse_ratings(lines: Iterable[str]) -> BipartiteRatingGraph:
    """Parse rating lines into a bipartite graph.

    Empty input yields an empty graph rather than an error.
    """
    return build_graph(parse_triples(lines))


def slice_fraction(
    all_triples: list[RatingTriple], numerator: int, denominator: int
) -> BipartiteRatingGraph:
    """Build a graph from the first floor(numerator * total / denominator) triples.

    Index assignment restarts for every slice, so a slice is a self-contained
    dataset.  numerator == denominator reproduces the full graph.
    """
    if denominator <= 0:
        raise ValueError(f"denominator must be positive, got {denominator}")
    if not 1 <= numerator <= denominator:
        raise ValueError(
            f"numerator must be in [1, {denominator}], got {numerator}"
        )
    count = (numerator * len(all_triples)) // denominator
    return build_graph(all_triples[:count])


def max_item_degree(g: BipartiteRatingGraph) -> int:
    """Largest number of raters of any single item; 0 for an item-less graph."""
    if g.n2 == 0:
        return 0
    return max(len(nbrs) for nbrs in g.item_neighbors)
