"""One-mode projection of the rating data onto users.

Two users are linked in the projected network iff they rated at least one
common item.  Three interchangeable construction strategies are provided:

* ``project_exhaustive``   -- test every user pair for a shared item
* ``project_clique_addition`` -- each item's rater set induces a clique
* ``project_matmul``       -- threshold the matrix of shared-item counts

All three return identical edge sets; they differ only in cost profile.
The shared-item count matrix is computed as a sparse item-centric product
rather than a dense matrix product, which is what makes it feasible on
sparse rating data.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .bipartite import BipartiteRatingGraph


class UserNetwork:
    """Undirected, unweighted network over the user index range [0, n1).

    Symmetric and irreflexive by construction: edges are stored in
    per-user neighbor sets, insertion is idempotent, and self-loops are
    rejected.  ``adjacency`` exposes a canonical sorted-list view used for
    output and comparison; it is cached and recomputed after mutation.
    """

    __slots__ = ("n1", "_nbrs", "_adjacency")

    def __init__(self, n1: int):
        self.n1 = n1
        self._nbrs: list[set[int]] = [set() for _ in range(n1)]
        self._adjacency: list[list[int]] | None = None

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop rejected: {u}")
        if not (0 <= u < self.n1 and 0 <= v < self.n1):
            raise ValueError(f"edge ({u}, {v}) out of range [0, {self.n1})")
        self._nbrs[u].add(v)
        self._nbrs[v].add(u)
        self._adjacency = None

    def add_clique(self, members: Iterable[int]) -> None:
        """Insert every unordered pair of ``members`` as an edge.

        A singleton or empty member set is a no-op.  Insertion is
        idempotent, so re-adding an existing clique changes nothing.
        """
        ms = members if isinstance(members, (list, tuple)) else list(members)
        n = len(ms)
        if n <= 1:
            return
        nbrs = self._nbrs
        for i in range(n - 1):
            a = ms[i]
            sa = nbrs[a]
            for j in range(i + 1, n):
                b = ms[j]
                sa.add(b)
                nbrs[b].add(a)
        self._adjacency = None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    @property
    def neighbor_sets(self) -> list[set[int]]:
        """Per-user neighbor sets, the live storage; treat as read-only."""
        return self._nbrs

    def degree(self, u: int) -> int:
        return len(self._nbrs[u])

    @property
    def adjacency(self) -> list[list[int]]:
        """Per-user neighbor lists, sorted ascending."""
        if self._adjacency is None:
            self._adjacency = [sorted(s) for s in self._nbrs]
        return self._adjacency

    @property
    def m_prime(self) -> int:
        """Number of undirected edges."""
        return sum(len(s) for s in self._nbrs) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in ascending index-pair order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def __eq__(self, other) -> bool:
        if not isinstance(other, UserNetwork):
            return NotImplemented
        return self.n1 == other.n1 and self._nbrs == other._nbrs

    def __hash__(self):
        raise TypeError("UserNetwork is unhashable")

    def __repr__(self) -> str:
        return f"UserNetwork(n1={self.n1}, m_prime={self.m_prime})"


class CountMatrix:
    """Sparse symmetric matrix of shared-item counts between users.

    Entry (x, y) is the number of items rated by both x and y; the diagonal
    entry (u, u) equals user u's rating count.  Absent entries are zero.
    """

    __slots__ = ("n1", "_entries")

    def __init__(self, n1: int, entries: dict[int, int]):
        self.n1 = n1
        self._entries = entries  # key: x * n1 + y

    def get(self, x: int, y: int) -> int:
        if not (0 <= x < self.n1 and 0 <= y < self.n1):
            raise IndexError(f"({x}, {y}) out of range [0, {self.n1})")
        return self._entries.get(x * self.n1 + y, 0)

    def diagonal(self) -> list[int]:
        return [self.get(u, u) for u in range(self.n1)]

    def items(self) -> Iterator[tuple[int, int, int]]:
        """Yield (x, y, count) for every nonzero entry."""
        n1 = self.n1
        for key, count in self._entries.items():
            yield key // n1, key % n1, count

    @property
    def nnz(self) -> int:
        return len(self._entries)


def project_exhaustive(g: BipartiteRatingGraph) -> UserNetwork:
    """Pairwise search: link u and v iff their item lists intersect.

    The intersection test is a merge over the two sorted item lists with an
    early exit on the first common item.
    """
    net = UserNetwork(g.n1)
    nbrs = g.user_neighbors
    sets = net._nbrs
    for x in range(g.n1):
        a = nbrs[x]
        la = len(a)
        sx = sets[x]
        for y in range(x + 1, g.n1):
            b = nbrs[y]
            i = 0
            j = 0
            lb = len(b)
            while i < la and j < lb:
                av = a[i]
                bv = b[j]
                if av < bv:
                    i += 1
                elif av > bv:
                    j += 1
                else:
                    sx.add(y)
                    sets[y].add(x)
                    break
    return net


def project_clique_addition(g: BipartiteRatingGraph) -> UserNetwork:
    """Item-centric construction: each item's raters form a clique."""
    net = UserNetwork(g.n1)
    for raters in g.item_neighbors:
        net.add_clique(raters)
    return net


def two_path_counts(g: BipartiteRatingGraph) -> CountMatrix:
    """Count shared items for every user pair via a sparse product.

    For each item, every ordered pair of its raters contributes one count.
    The diagonal therefore accumulates each user's rating count.
    """
    n1 = g.n1
    entries: dict[int, int] = {}
    get = entries.get
    for raters in g.item_neighbors:
        for a in raters:
            base = a * n1
            for b in raters:
                key = base + b
                entries[key] = get(key, 0) + 1
    return CountMatrix(n1, entries)


def project_matmul(g: BipartiteRatingGraph) -> UserNetwork:
    """Threshold the shared-item counts: any positive off-diagonal count is an edge."""
    counts = two_path_counts(g)
    net = UserNetwork(g.n1)
    n1 = g.n1
    sets = net._nbrs
    for key in counts._entries:
        x, y = divmod(key, n1)
        if x != y:
            sets[x].add(y)
    return net


PROJECTIONS = {
    "exhaustive": project_exhaustive,
    "clique": project_clique_addition,
    "matmul": project_matmul,
}


def project(g: BipartiteRatingGraph, algorithm: str) -> UserNetwork:
    """Dispatch to a projection strategy by name."""
    try:
        fn = PROJECTIONS[algorithm]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {algorithm!r}; choose from {sorted(PROJECTIONS)}"
        ) from None
    return fn(g)
