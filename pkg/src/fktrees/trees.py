"""Finite trees with a designated boundary set.

A tree with boundary is a pair (T, B) where B is a nonempty proper subset of
the vertices; the interior is Omega = V \\ B.  By default B is the set of
leaves (degree-1 vertices), which is the convention used throughout the
extremal results this package verifies.  Explicit boundary overrides are
accepted as long as the interior stays nonempty and induces a connected
subgraph, since everything downstream (positivity and simplicity of the
ground state) relies on interior connectivity.

Vertices are dense 0-indexed integers.  Adjacency is stored as sorted
neighbor tuples so that iteration order, canonical codes, and every derived
report are reproducible byte for byte.  All types are immutable after
construction and every function here is pure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    DisconnectedInteriorError,
    EmptyInteriorError,
    InvalidBoundaryError,
    InvalidVertexError,
    NotATreeError,
    TooSmallError,
)

__all__ = [
    "TreeWithBoundary",
    "TreeInvariants",
    "CanonicalCode",
    "from_edge_list",
    "invariants",
    "geodesic_path",
    "canonical_code",
    "contact_set",
    "diameter",
    "inscribed_radius",
    "bfs_distances",
    "distance_to_set",
    "is_ball_approximation",
    "relabel",
    "parse_edge_list_text",
    "format_edge_list_text",
    "from_graph6",
]


@dataclass(frozen=True)
class TreeWithBoundary:
    """Immutable tree on ``n`` vertices with boundary set ``boundary``.

    ``edges`` is a lexicographically sorted tuple of (u, v) pairs with u < v.
    ``adj`` holds sorted neighbor tuples and is derived data (excluded from
    equality).  Use :func:`from_edge_list` to construct validated instances.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    boundary: frozenset[int]
    adj: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @property
    def interior(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if v not in self.boundary)

    @property
    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if len(self.adj[v]) == 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def is_boundary(self, v: int) -> bool:
        return v in self.boundary

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        # cached lazily on first use; object.__setattr__ because frozen
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached


@dataclass(frozen=True)
class TreeInvariants:
    """Classification key of a tree with leaf boundary.

    n: order; m: matching number; b: leaf count; D: diameter;
    r: inscribed radius (max distance of any vertex to the boundary);
    contact: number of interior vertices adjacent to the boundary;
    t: 2m + b - n, the deficiency parameter splitting the extremal cases.
    """

    n: int
    m: int
    b: int
    D: int
    r: int
    contact: int
    t: int


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Byte string identifying the boundary-respecting isomorphism class.

    Two trees have equal codes iff some isomorphism maps one onto the other
    carrying boundary to boundary.
    """

    code: bytes

    @property
    def text(self) -> str:
        return self.code.decode("ascii")


def _check_vertex(v, n: int) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise InvalidVertexError(f"vertex {v!r} not in range 0..{n - 1}")
    return v


def from_edge_list(
    n: int,
    edges: Iterable[Sequence[int]],
    boundary: Iterable[int] | None = None,
) -> TreeWithBoundary:
    """Build a validated tree with boundary from an edge list.

    If ``boundary`` is omitted every degree-1 vertex becomes a boundary
    vertex.  Raises NotATreeError for cycles/multi-edges/disconnection,
    InvalidVertexError for out-of-range ids, EmptyInteriorError when the
    boundary covers everything (e.g. the 2-vertex path with leaf boundary),
    and DisconnectedInteriorError when an explicit boundary disconnects the
    interior.
    """
    if not isinstance(n, int) or n < 2:
        raise NotATreeError(f"need an integer order n >= 2, got {n!r}")

    seen: set[tuple[int, int]] = set()
    adj_lists: list[list[int]] = [[] for _ in range(n)]
    count = 0
    for e in edges:
        u, v = e
        _check_vertex(u, n)
        _check_vertex(v, n)
        if u == v:
            raise NotATreeError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise NotATreeError(f"duplicate edge {key}")
        seen.add(key)
        adj_lists[u].append(v)
        adj_lists[v].append(u)
        count += 1
    if count != n - 1:
        raise NotATreeError(f"a tree on {n} vertices has {n - 1} edges, got {count}")

    # connectivity: n-1 edges + connected <=> tree
    reached = _bfs_reach(adj_lists, 0)
    if len(reached) != n:
        raise NotATreeError("graph is disconnected")

    if boundary is None:
        bset = frozenset(v for v in range(n) if len(adj_lists[v]) == 1)
    else:
        bset = frozenset(_check_vertex(v, n) for v in boundary)
        if not bset:
            raise InvalidBoundaryError("boundary must be nonempty")
    if len(bset) == n:
        raise EmptyInteriorError("boundary covers every vertex; interior is empty")

    interior = [v for v in range(n) if v not in bset]
    if len(interior) > 1:
        # interior must induce a connected subgraph
        inner = set(interior)
        start = interior[0]
        seen_i = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj_lists[x]:
                if y in inner and y not in seen_i:
                    seen_i.add(y)
                    queue.append(y)
        if len(seen_i) != len(interior):
            raise DisconnectedInteriorError(
                f"interior {sorted(inner)} induces a disconnected subgraph"
            )

    adj = tuple(tuple(sorted(neigh)) for neigh in adj_lists)
    return TreeWithBoundary(n=n, edges=tuple(sorted(seen)), boundary=bset, adj=adj)


def _bfs_reach(adj: Sequence[Sequence[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def bfs_distances(tree: TreeWithBoundary, source: int) -> list[int]:
    """Distances from ``source`` to every vertex (trees: BFS is exact)."""
    _check_vertex(source, tree.n)
    dist = [-1] * tree.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in tree.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def geodesic_path(tree: TreeWithBoundary, u: int, v: int) -> tuple[int, ...]:
    """The unique u-v path as a vertex sequence (length = distance)."""
    _check_vertex(u, tree.n)
    _check_vertex(v, tree.n)
    if u == v:
        return (u,)
    parent = [-1] * tree.n
    parent[u] = u
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in tree.adj[x]:
            if parent[y] < 0:
                parent[y] = x
                queue.append(y)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def distance_to_set(tree: TreeWithBoundary, v: int, targets: Iterable[int]) -> int:
    """min distance from v to a nonempty vertex set; empty set is an error."""
    tset = set(targets)
    if not tset:
        raise InvalidBoundaryError("distance to an empty vertex set is undefined")
    dist = bfs_distances(tree, v)
    return min(dist[t] for t in tset)


def diameter(tree: TreeWithBoundary) -> int:
    """Max pairwise distance, via the classic double BFS."""
    d0 = bfs_distances(tree, 0)
    far = max(range(tree.n), key=lambda v: d0[v])
    d1 = bfs_distances(tree, far)
    return max(d1)


def inscribed_radius(tree: TreeWithBoundary) -> int:
    """max over vertices of the distance to the boundary set."""
    # multi-source BFS from the boundary
    dist = [-1] * tree.n
    queue = deque()
    for b in tree.boundary:
        dist[b] = 0
        queue.append(b)
    while queue:
        x = queue.popleft()
        for y in tree.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return max(dist)


def contact_set(tree: TreeWithBoundary) -> tuple[int, ...]:
    """Interior vertices with at least one boundary neighbor, ascending."""
    return tuple(
        v
        for v in tree.interior
        if any(w in tree.boundary for w in tree.adj[v])
    )


def invariants(tree: TreeWithBoundary) -> TreeInvariants:
    """All seven classification invariants (requires leaf boundary, n >= 3)."""
    if tree.n < 3:
        raise TooSmallError(f"invariants need n >= 3, got n = {tree.n}")
    if tree.boundary != frozenset(tree.leaves):
        raise InvalidBoundaryError(
            "invariants are defined for the leaf-boundary convention only"
        )
    from .matching import matching_number  # local import: matching builds on trees

    n = tree.n
    m = matching_number(tree)
    b = len(tree.boundary)
    D = diameter(tree)
    r = inscribed_radius(tree)
    contact = len(contact_set(tree))
    return TreeInvariants(n=n, m=m, b=b, D=D, r=r, contact=contact, t=2 * m + b - n)


def is_ball_approximation(tree: TreeWithBoundary, center: int, radius: int) -> bool:
    """True when every boundary vertex sits at distance radius or radius+1
    from ``center``.  Recorded as a predicate only; nothing downstream
    consumes it."""
    _check_vertex(center, tree.n)
    dist = bfs_distances(tree, center)
    return all(dist[w] in (radius, radius + 1) for w in tree.boundary)


# -- canonical codes ---------------------------------------------------------

def _centers(tree: TreeWithBoundary) -> list[int]:
    """The 1 or 2 middle vertices of the tree (leaf-peeling)."""
    deg = [len(a) for a in tree.adj]
    layer = [v for v in range(tree.n) if deg[v] == 1]
    remaining = tree.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in tree.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(tree: TreeWithBoundary, root: int) -> bytes:
    """AHU-style encoding of the rooted tree, one boundary bit per vertex."""
    # iterative post-order so deep paths cannot hit the recursion limit
    order: list[tuple[int, int]] = []  # (vertex, parent)
    stack = [(root, -1)]
    while stack:
        v, p = stack.pop()
        order.append((v, p))
        for w in tree.adj[v]:
            if w != p:
                stack.append((w, v))
    codes: dict[int, bytes] = {}
    for v, p in reversed(order):
        children = sorted(codes[w] for w in tree.adj[v] if w != p)
        bit = b"1" if v in tree.boundary else b"0"
        codes[v] = b"(" + bit + b"".join(children) + b")"
    return codes[root]


def canonical_code(tree: TreeWithBoundary) -> CanonicalCode:
    """Center-rooted canonical form; equal codes <=> boundary-respecting
    isomorphism.  Rooting at the (invariant) center set makes the min over
    at most two rooted encodings a canonical representative."""
    cs = _centers(tree)
    return CanonicalCode(min(_rooted_code(tree, c) for c in cs))


def relabel(tree: TreeWithBoundary, perm: Sequence[int] | Mapping[int, int]) -> TreeWithBoundary:
    """Apply a vertex permutation (perm[old] = new); same boundary image."""
    mapped = [perm[v] for v in range(tree.n)]
    if sorted(mapped) != list(range(tree.n)):
        raise InvalidVertexError("perm is not a permutation of the vertex set")
    edges = [(mapped[u], mapped[v]) for u, v in tree.edges]
    boundary = [mapped[v] for v in tree.boundary]
    return from_edge_list(tree.n, edges, boundary)


# -- text formats -------------------------------------------------------------

def parse_edge_list_text(text: str) -> TreeWithBoundary:
    """Parse the edge-list format: line 1 = n; then n-1 lines "u v";
    optional final line "B: i j k ..." for an explicit boundary."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise NotATreeError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise NotATreeError(f"first line must be the vertex count, got {lines[0]!r}")
    if len(lines) < n:
        raise NotATreeError(f"expected {n - 1} edge lines after the header")
    edges = []
    for ln in lines[1:n]:
        parts = ln.split()
        if len(parts) != 2:
            raise NotATreeError(f"edge line must be 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    boundary = None
    rest = lines[n:]
    if rest:
        if len(rest) != 1 or not rest[0].startswith("B:"):
            raise NotATreeError(f"unexpected trailing content: {rest!r}")
        boundary = [int(tok) for tok in rest[0][2:].split()]
    return from_edge_list(n, edges, boundary)


def format_edge_list_text(tree: TreeWithBoundary) -> str:
    """Inverse of parse_edge_list_text; omits the B: line when the boundary
    is the default leaf set."""
    lines = [str(tree.n)]
    lines.extend(f"{u} {v}" for u, v in tree.edges)
    if tree.boundary != frozenset(tree.leaves):
        lines.append("B: " + " ".join(str(v) for v in sorted(tree.boundary)))
    return "\n".join(lines) + "\n"


_G6_HEADER = b">>graph6<<"


def from_graph6(data: bytes | str) -> TreeWithBoundary:
    """Decode a graph6 byte string (de-facto format of nauty/geng) into a
    tree with leaf boundary.  Rejects sparse6/digraph6 and non-trees."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if data.startswith(b":") or data.startswith(b"&"):
        raise NotATreeError("sparse6/digraph6 input is not supported")
    if not data:
        raise NotATreeError("empty graph6 input")

    def sextets(raw: bytes) -> list[int]:
        vals = []
        for byte in raw:
            if not 63 <= byte <= 126:
                raise NotATreeError(f"invalid graph6 byte {byte}")
            vals.append(byte - 63)
        return vals

    if data[0] == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            chunk, data = sextets(data[2:8]), data[8:]
        else:
            chunk, data = sextets(data[1:4]), data[4:]
        n = 0
        for c in chunk:
            n = (n << 6) | c
    else:
        n = data[0] - 63
        data = data[1:]

    bits_needed = n * (n - 1) // 2
    vals = sextets(data)
    if len(vals) * 6 < bits_needed:
        raise NotATreeError("graph6 input truncated")
    bits = []
    for c in vals:
        for k in range(5, -1, -1):
            bits.append((c >> k) & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return from_edge_list(n, edges)
