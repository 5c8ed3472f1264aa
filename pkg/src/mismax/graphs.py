"""Immutable small graphs with bitmask adjacency.

A graph lives on vertices 0..n-1 with n <= 64, so every vertex set fits
in one machine word.  Throughout the package a *vertex set* is a plain
``int`` used as a bit mask: bit v set means vertex v is in the set.  All
set algebra (neighborhoods, independence checks, deletions) is mask
arithmetic.

Graphs are immutable after construction and therefore safe to share
between concurrent workers.  Every construction path goes through the
checked ``Graph`` constructor, which enforces symmetry, loop-freeness
and the order cap.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    BadEndpoint,
    BadParameters,
    LoopRejected,
    MalformedGraph6,
    NotCompleteComponents,
    OrderTooLarge,
)

MAX_VERTICES = 64

# graph6 single-byte headers cover 0..62 vertices.
GRAPH6_MAX_VERTICES = 62


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Build a bit mask from an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on at most 64 vertices.

    ``adj[v]`` is the bit mask of v's neighbors.  The constructor checks
    the representation invariants: adjacency is symmetric, there are no
    loops, no bits at positions >= order, and the cached edge count is
    half the total popcount.
    """

    __slots__ = ("order", "adj", "edge_count")

    def __init__(self, order: int, adj: tuple[int, ...]):
        if order > MAX_VERTICES:
            raise OrderTooLarge(f"order {order} exceeds {MAX_VERTICES}")
        if order < 0 or len(adj) != order:
            raise BadEndpoint(f"adjacency length {len(adj)} != order {order}")
        full = (1 << order) - 1
        total = 0
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise BadEndpoint(f"vertex {v} has neighbors outside 0..{order - 1}")
            if mask >> v & 1:
                raise LoopRejected(f"loop at vertex {v}")
            total += mask.bit_count()
        for v, mask in enumerate(adj):
            for u in iter_bits(mask):
                if not adj[u] >> v & 1:
                    raise BadEndpoint(f"asymmetric edge ({v}, {u})")
        self.order = order
        self.adj = tuple(adj)
        self.edge_count = total // 2

    # -- basic queries ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> int:
        """Open neighborhood N(v) as a mask."""
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> int:
        """N[v] = {v} union N(v) as a mask."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as ordered pairs (u, v) with u < v."""
        for v in range(self.order):
            for u in iter_bits(self.adj[v] & ((1 << v) - 1)):
                yield (u, v)

    def is_complete(self) -> bool:
        n = self.order
        return self.edge_count == n * (n - 1) // 2

    # -- derived graphs --------------------------------------------------

    def induced(self, mask: int) -> "Graph":
        """Subgraph induced on the vertices of ``mask``, re-indexed compactly.

        The surviving vertices keep their relative order.
        """
        keep = [v for v in iter_bits(mask & self.full_mask)]
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            m = 0
            for u in iter_bits(self.adj[v] & mask):
                m |= 1 << index[u]
            adj.append(m)
        return Graph(len(keep), tuple(adj))

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of this graph with the edge (u, v) added."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.order, tuple(adj))

    # -- connectivity ----------------------------------------------------

    def component_of(self, v: int) -> int:
        """Mask of the connected component containing v."""
        seen = 1 << v
        frontier = seen
        while frontier:
            grow = 0
            for u in iter_bits(frontier):
                grow |= self.adj[u]
            frontier = grow & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[int]:
        """Masks of the connected components, by smallest vertex."""
        out = []
        left = self.full_mask
        while left:
            v = (left & -left).bit_length() - 1
            comp = self.component_of(v)
            out.append(comp)
            left &= ~comp
        return out

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        return self.component_of(0) == self.full_mask

    # -- plumbing ----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise BadEndpoint(f"vertex {v} not in 0..{self.order - 1}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.order}, m={self.edge_count})"

    def __reduce__(self):
        return (Graph, (self.order, self.adj))


# -- construction ----------------------------------------------------------


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from unordered pairs.

    Duplicate pairs collapse to a single edge.  Rejects loops, endpoints
    outside 0..n-1, and n > 64.
    """
    if n > MAX_VERTICES:
        raise OrderTooLarge(f"order {n} exceeds {MAX_VERTICES}")
    if n < 0:
        raise BadParameters("order must be nonnegative")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise BadEndpoint(f"edge ({u}, {v}) outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    """G - v, with remaining vertices re-indexed order-preservingly."""
    g._check_vertex(v)
    return g.induced(g.full_mask & ~(1 << v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    """G - N[v]; removes v and all its neighbors.  May be empty."""
    g._check_vertex(v)
    return g.induced(g.full_mask & ~g.closed_neighborhood(v))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G disjoint-union H, with H's vertices shifted by order(G)."""
    n = g.order + h.order
    if n > MAX_VERTICES:
        raise OrderTooLarge(f"combined order {n} exceeds {MAX_VERTICES}")
    shift = g.order
    adj = list(g.adj) + [m << shift for m in h.adj]
    return Graph(n, tuple(adj))


def star_join(m: int, g: Graph) -> Graph:
    """Complete graph K_m with vertex 0 joined to one vertex per component of g.

    Every component of g must be complete.  The designated hub is vertex 0
    and it attaches to the lowest-indexed vertex of each component, so the
    construction is deterministic; any other choice gives an isomorphic
    graph because the components are complete.
    """
    if m < 1:
        raise BadParameters("clique size must be >= 1")
    n = m + g.order
    if n > MAX_VERTICES:
        raise OrderTooLarge(f"combined order {n} exceeds {MAX_VERTICES}")
    for comp in g.components():
        if not g.induced(comp).is_complete():
            raise NotCompleteComponents(
                "star join operand has a non-complete component"
            )
    adj = [0] * n
    for u in range(m):
        for v in range(m):
            if u != v:
                adj[u] |= 1 << v
    for u, mask in enumerate(g.adj):
        adj[m + u] |= mask << m
    for comp in g.components():
        anchor = m + (comp & -comp).bit_length() - 1
        adj[0] |= 1 << anchor
        adj[anchor] |= 1
    return Graph(n, tuple(adj))


# -- named builders ----------------------------------------------------------


def complete(n: int) -> Graph:
    """K_n."""
    return make_graph(n, [(u, v) for v in range(n) for u in range(v)])


def path(n: int) -> Graph:
    """P_n, the path on n vertices."""
    if n < 0:
        raise BadParameters("path order must be nonnegative")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """C_n, the cycle on n vertices (n >= 3)."""
    if n < 3:
        raise BadParameters("cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def empty_graph(n: int = 0) -> Graph:
    """n isolated vertices."""
    return make_graph(n, [])


def exceptional_graph() -> Graph:
    """The 7-vertex graph made of two triangles sharing a hub plus a 2-path.

    Vertex 0 is the hub, {0,1,2} and {0,3,4} are the triangles, and
    0-5-6 is the pendant path.
    """
    return make_graph(
        7,
        [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (5, 6)],
    )


# -- interchange formats -----------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Standard graph6 text: header byte n+63, then the adjacency upper
    triangle in column order packed big-endian into 6-bit groups, each +63."""
    n = g.order
    if n > GRAPH6_MAX_VERTICES:
        raise OrderTooLarge(f"graph6 single-byte header caps order at {GRAPH6_MAX_VERTICES}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | (g.adj[v] >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Parse a graph6 line back into a Graph."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"byte {ord(ch)} outside graph6 range")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_VERTICES:
        raise MalformedGraph6("multi-byte graph6 headers are not supported")
    npairs = n * (n - 1) // 2
    expect = (npairs + 5) // 6
    if len(s) - 1 != expect:
        raise MalformedGraph6(
            f"payload length {len(s) - 1}, expected {expect} for order {n}"
        )
    edges = []
    k = 0
    for ch in s[1:]:
        group = ord(ch) - 63
        for i in range(5, -1, -1):
            if k >= npairs:
                break
            if group >> i & 1:
                edges.append(_pair_at(k))
            k += 1
    return make_graph(n, edges)


def _pair_at(k: int) -> tuple[int, int]:
    # Inverse of the column-order upper-triangle enumeration.
    v = 1
    while k >= v:
        k -= v
        v += 1
    return (k, v)


def to_dot(g: Graph) -> str:
    """DOT text with vertex ids 0..n-1 and plain undirected edges."""
    lines = ["graph {"]
    for v in range(g.order):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
