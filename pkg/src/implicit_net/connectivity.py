"""Connected components of the user network.

Two entry points solve the combined design-and-components problem:

* ``design_sequential`` projects first (any strategy), then sweeps the
  finished network with BFS.
* ``design_concurrent`` grows the network and its component partition at
  the same time: starting from a picked user, it repeatedly pops pending
  items off a worklist, inserts the item's rater clique, absorbs the
  raters into the current component, and enqueues their still-unprocessed
  items.  The worklist drains exactly when the component is complete, so
  one pick discovers one whole component.

Despite the name, the concurrent variant is single-threaded; "concurrent"
refers to interleaving construction with connectivity tracking.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bipartite import BipartiteRatingGraph
from .projection import PROJECTIONS, UserNetwork


@dataclass
class ComponentSet:
    """A partition of [0, n1) into connected components.

    Canonical form: every component sorted ascending, components ordered
    by smallest member.
    """

    components: list[list[int]]

    @classmethod
    def from_groups(cls, groups: Iterable[Iterable[int]]) -> "ComponentSet":
        comps = [sorted(g) for g in groups]
        comps.sort(key=lambda c: c[0] if c else -1)
        return cls(comps)

    @property
    def k(self) -> int:
        return len(self.components)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.components}

    def sizes_desc(self) -> list[int]:
        return sorted((len(c) for c in self.components), reverse=True)


class ItemStatus:
    """Per-item flag marking whether the item's rater clique was inserted."""

    __slots__ = ("flags",)

    def __init__(self, n2: int):
        self.flags = [False] * n2

    def is_set(self, i: int) -> bool:
        return self.flags[i]

    def mark(self, i: int) -> None:
        self.flags[i] = True

    def set_count(self) -> int:
        return sum(self.flags)


@dataclass
class ConcurrentStats:
    """Instrumentation collected by design_concurrent.

    ``pick_events`` counts user picks (one per discovered component),
    ``clique_calls[i]`` counts add_clique invocations for item i, and
    ``items_popped`` counts worklist pops.
    """

    pick_events: int = 0
    clique_calls: list[int] = field(default_factory=list)
    items_popped: int = 0
    item_status: ItemStatus | None = None


def add_clique(net: UserNetwork, members: Sequence[int]) -> None:
    """Make ``members`` pairwise adjacent in ``net``; no-op below two members."""
    if members:
        lo = min(members)
        hi = max(members)
        if lo < 0 or hi >= net.n1:
            raise ValueError(f"member index out of range [0, {net.n1})")
    net.add_clique(members)


def bfs_components(net: UserNetwork) -> ComponentSet:
    """BFS sweep over the network; isolated users become singletons."""
    n1 = net.n1
    visited = [False] * n1
    nbrs = net.neighbor_sets
    groups = []
    for start in range(n1):
        if visited[start]:
            continue
        visited[start] = True
        comp = [start]
        queue = deque((start,))
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                if not visited[v]:
                    visited[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        groups.append(comp)
    # starts are taken in ascending order, so groups are already ordered
    # by smallest member
    return ComponentSet(groups)


def design_sequential(
    g: BipartiteRatingGraph, algorithm: str = "clique"
) -> tuple[UserNetwork, ComponentSet]:
    """Project with the selected strategy, then compute components by BFS."""
    try:
        fn = PROJECTIONS[algorithm]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {algorithm!r}; choose from {sorted(PROJECTIONS)}"
        ) from None
    net = fn(g)
    return net, bfs_components(net)


def _pick_order(n1: int, pick_policy: str | int) -> list[int]:
    # A seeded shuffle makes every pick uniform over the users still
    # remaining, without rescanning the remaining set.
    order = list(range(n1))
    if pick_policy == "lowest":
        return order
    if isinstance(pick_policy, bool) or not isinstance(pick_policy, int):
        raise ValueError(
            f"pick_policy must be 'lowest' or an integer seed, got {pick_policy!r}"
        )
    random.Random(pick_policy).shuffle(order)
    return order


def design_concurrent(
    g: BipartiteRatingGraph,
    pick_policy: str | int = "lowest",
    stats: ConcurrentStats | None = None,
) -> tuple[UserNetwork, ComponentSet]:
    """Build the network and its components in one interleaved pass.

    ``pick_policy`` selects the next seed user: "lowest" takes the lowest
    remaining index, an integer seeds a uniform-random pick.  The returned
    network and partition are independent of the policy.

    A user with no ratings would leave the worklist empty and never be
    absorbed, so such users are emitted directly as singleton components
    at pick time.
    """
    n1 = g.n1
    net = UserNetwork(n1)
    status = ItemStatus(g.n2)
    flags = status.flags
    if stats is not None:
        stats.clique_calls = [0] * g.n2
        stats.item_status = status

    user_items = g.user_neighbors
    item_users = g.item_neighbors
    in_u = [True] * n1
    comp_id = [-1] * n1
    in_queue = [False] * g.n2
    groups: list[list[int]] = []

    for u in _pick_order(n1, pick_policy):
        if not in_u[u]:
            continue
        if stats is not None:
            stats.pick_events += 1
        if not user_items[u]:
            in_u[u] = False
            comp_id[u] = len(groups)
            groups.append([u])
            continue
        cid = len(groups)
        comp: list[int] = []
        groups.append(comp)
        queue = deque()
        for i in user_items[u]:
            queue.append(i)
            in_queue[i] = True
        while queue:
            i = queue.popleft()
            in_queue[i] = False
            if stats is not None:
                stats.items_popped += 1
            if flags[i]:
                continue
            members = item_users[i]
            net.add_clique(members)  # indices trusted: graph invariants
            flags[i] = True
            if stats is not None:
                stats.clique_calls[i] += 1
            for v in members:
                # a member of an unprocessed item is either already in the
                # current component or not yet assigned anywhere, so one
                # absorption (and one item-list expansion) per user suffices
                if comp_id[v] != cid:
                    comp_id[v] = cid
                    comp.append(v)
                    in_u[v] = False
                    for p in user_items[v]:
                        if not flags[p] and not in_queue[p]:
                            queue.append(p)
                            in_queue[p] = True
    return net, ComponentSet.from_groups(groups)
