"""Maximum matchings on trees and the matching-theoretic bounds.

On a tree a maximum matching can be built greedily: any pendant edge can be
assumed to lie in some maximum matching, so repeatedly matching a leaf with
its support vertex and deleting both is optimal.  Leaves are processed in
ascending vertex id so the returned witness is deterministic.

The module also exposes the constructive swap argument that upgrades an
arbitrary maximum matching into one containing a prescribed disjoint set of
pendant edges (one per contact vertex), plus a report object bundling the
three counting bounds relating order, matching number, leaf count and the
contact set.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidChoiceError
from .trees import TreeWithBoundary, contact_set, invariants

__all__ = [
    "Matching",
    "maximum_matching",
    "matching_number",
    "matching_containing_pendants",
    "check_matching_bounds",
    "MatchingBoundsReport",
]


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, stored sorted."""

    edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)

    def covers(self, v: int) -> bool:
        return any(v in e for e in self.edges)

    def is_valid_for(self, tree: TreeWithBoundary) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if not tree.has_edge(u, v) or u in seen or v in seen:
                return False
            seen.add(u)
            seen.add(v)
        return True


def maximum_matching(tree: TreeWithBoundary) -> Matching:
    """Deterministic maximum matching via leaf stripping (smallest leaf id
    first)."""
    deg = [tree.degree(v) for v in range(tree.n)]
    alive = [True] * tree.n
    heap = [v for v in range(tree.n) if deg[v] == 1]
    heapq.heapify(heap)
    matched: list[tuple[int, int]] = []
    while heap:
        u = heapq.heappop(heap)
        if not alive[u] or deg[u] != 1:
            continue
        v = next(w for w in tree.adj[u] if alive[w])
        matched.append((min(u, v), max(u, v)))
        alive[u] = alive[v] = False
        for w in tree.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    heapq.heappush(heap, w)
                elif deg[w] == 0:
                    alive[w] = False  # isolated: stays unmatched
    return Matching(tuple(sorted(matched)))


def matching_number(tree: TreeWithBoundary) -> int:
    """Size of a maximum matching."""
    return len(maximum_matching(tree))


def matching_containing_pendants(
    tree: TreeWithBoundary, pendant_choice: Mapping[int, int]
) -> Matching:
    """Maximum matching containing the chosen pendant edge of every contact
    vertex.

    ``pendant_choice`` maps each contact vertex (interior vertex with a
    boundary neighbor) to one of its boundary neighbors.  Starting from any
    maximum matching, a contact vertex whose chosen edge is missing must be
    covered by some other edge, which can be swapped out without changing
    the matching size; repeating fixes every choice.
    """
    contacts = contact_set(tree)
    if set(pendant_choice.keys()) != set(contacts):
        raise InvalidChoiceError(
            f"pendant_choice keys {sorted(pendant_choice)} must equal the "
            f"contact set {list(contacts)}"
        )
    for v, u in pendant_choice.items():
        if u not in tree.adj[v] or u not in tree.boundary:
            raise InvalidChoiceError(
                f"vertex {u} is not a boundary neighbor of contact vertex {v}"
            )

    current = set(maximum_matching(tree).edges)
    size = len(current)
    for v in contacts:
        u = pendant_choice[v]
        chosen = (min(u, v), max(u, v))
        if chosen in current:
            continue
        covering = [e for e in current if v in e]
        if not covering:
            # would contradict maximality of the matching
            raise AssertionError(f"maximum matching leaves contact vertex {v} exposed")
        current.remove(covering[0])
        current.add(chosen)
    result = Matching(tuple(sorted(current)))
    assert len(result) == size and result.is_valid_for(tree)
    return result


@dataclass(frozen=True)
class MatchingBoundsReport:
    """The three counting bounds, with the quantities they relate."""

    n: int
    m: int
    b: int
    t: int
    contact: int
    contact_ge_t: bool
    order_bound: bool  # n <= 2m + b - 1
    t_bound: bool      # t <= min(b, m)

    @property
    def all_hold(self) -> bool:
        return self.contact_ge_t and self.order_bound and self.t_bound


def check_matching_bounds(tree: TreeWithBoundary) -> MatchingBoundsReport:
    """Evaluate contact >= t, n <= 2m+b-1 and t <= min(b, m) for a tree with
    leaf boundary of order >= 3."""
    inv = invariants(tree)
    return MatchingBoundsReport(
        n=inv.n,
        m=inv.m,
        b=inv.b,
        t=inv.t,
        contact=inv.contact,
        contact_ge_t=inv.contact >= inv.t,
        order_bound=inv.n <= 2 * inv.m + inv.b - 1,
        t_bound=inv.t <= min(inv.b, inv.m),
    )
