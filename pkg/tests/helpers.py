"""Shared test utilities: instance builders and brute-force references.

The reference implementations here re-derive everything from raw pair
sets with plain set algebra, so they share no code with the package.
"""

from __future__ import annotations

import random
from itertools import combinations

from implicit_net import BipartiteRatingGraph

# the worked 5-user / 3-item example used throughout the tests
TOY_LINES = ["u1 i3", "u2 i1", "u3 i2", "u3 i3", "u4 i1", "u5 i2", "u5 i3"]
TOY_EDGE_LABELS = {("u1", "u3"), ("u1", "u5"), ("u3", "u5"), ("u2", "u4")}
TOY_COMPONENT_LABELS = [["u1", "u3", "u5"], ["u2", "u4"]]


def make_graph(n1: int, n2: int, pairs: set[tuple[int, int]]) -> BipartiteRatingGraph:
    """Build a graph directly from index pairs; allows degree-0 users/items."""
    user_neighbors = [[] for _ in range(n1)]
    item_neighbors = [[] for _ in range(n2)]
    for u, i in sorted(pairs):
        user_neighbors[u].append(i)
        item_neighbors[i].append(u)
    for lst in item_neighbors:
        lst.sort()
    return BipartiteRatingGraph(
        n1=n1,
        n2=n2,
        m=len(pairs),
        user_neighbors=user_neighbors,
        item_neighbors=item_neighbors,
        user_labels=[f"u{u}" for u in range(n1)],
        item_labels=[f"i{i}" for i in range(n2)],
    )


def random_graph(
    rng: random.Random, max_users: int = 50, max_items: int = 50,
    max_density: float = 0.2,
) -> BipartiteRatingGraph:
    n1 = rng.randint(1, max_users)
    n2 = rng.randint(1, max_items)
    target = int(rng.uniform(0.0, max_density) * n1 * n2)
    pairs = {(rng.randrange(n1), rng.randrange(n2)) for _ in range(target)}
    return make_graph(n1, n2, pairs)


def adversarial_graphs() -> list[BipartiteRatingGraph]:
    cases = [make_graph(0, 0, set())]
    # single popular item: everyone rates item 0
    cases.append(make_graph(12, 1, {(u, 0) for u in range(12)}))
    # disjoint stars: item j rated by its own block of 4 users
    stars = {(j * 4 + o, j) for j in range(5) for o in range(4)}
    cases.append(make_graph(20, 5, stars))
    # isolated users and items on top of a small core
    core = {(0, 0), (1, 0), (2, 1)}
    cases.append(make_graph(6, 4, core))
    return cases


def brute_force_edges(g: BipartiteRatingGraph) -> set[tuple[int, int]]:
    """Reference projection: set intersection over every user pair."""
    items = [set(nbrs) for nbrs in g.user_neighbors]
    return {
        (x, y)
        for x, y in combinations(range(g.n1), 2)
        if items[x] & items[y]
    }


def brute_force_two_path_count(g: BipartiteRatingGraph, x: int, y: int) -> int:
    """Reference count of user-item-user walks from x to y."""
    return sum(
        1 for raters in g.item_neighbors if x in raters and y in raters
    )


def brute_force_components(g: BipartiteRatingGraph) -> set[frozenset[int]]:
    """Reference partition: union of co-rater groups, grown to a fixed point."""
    parent = list(range(g.n1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for raters in g.item_neighbors:
        for a, b in zip(raters, raters[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, set[int]] = {}
    for u in range(g.n1):
        groups.setdefault(find(u), set()).add(u)
    return {frozenset(s) for s in groups.values()}
