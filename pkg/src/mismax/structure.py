"""Block structure, ear decompositions, and exact cycle counting.

Blocks (maximal subgraphs with no cutvertex) are computed with the
classic lowpoint DFS; the block-cutvertex incidences form a forest, and
walking a longest path in that forest yields an endblock that meets at
most one non-endblock.  Cycles never cross blocks, so cycle enumeration
backtracks inside each block separately, identifying a cycle by its
edge set (each cycle is emitted once, rooted at its smallest vertex with
a fixed direction).  The census saturates at a caller-supplied budget
because the verifier only ever needs "at most r cycles" versus "more".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .errors import BadParameters, NoBlocks, NotTwoConnected
from .graphs import Graph, iter_bits, mask_of


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as vertex masks, cutvertices as one mask, and the
    (block index, cutvertex) incidences of the block-cutvertex forest."""

    blocks: tuple[int, ...]
    cutvertices: int
    tree_edges: tuple[tuple[int, int], ...]

    def endblocks(self) -> tuple[int, ...]:
        """Indices of blocks containing at most one cutvertex."""
        return tuple(
            i
            for i, b in enumerate(self.blocks)
            if (b & self.cutvertices).bit_count() <= 1
        )


@dataclass(frozen=True)
class EarDecomposition:
    """A base cycle plus ears; each ear is the full vertex path, both
    endpoints included."""

    base_cycle: tuple[int, ...]
    ears: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CycleCensus:
    count: int
    limit: int
    saturated: bool


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Lowpoint-based decomposition.  Isolated vertices form no block;
    a bridge is a 2-vertex block."""
    n = g.order
    disc = [-1] * n
    low = [0] * n
    blocks: list[int] = []
    cut_mask = 0
    edge_stack: list[tuple[int, int]] = []
    clock = 0

    def dfs(u: int, parent: int) -> None:
        nonlocal clock, cut_mask
        disc[u] = low[u] = clock
        clock += 1
        children = 0
        for w in iter_bits(g.adj[u]):
            if disc[w] == -1:
                children += 1
                edge_stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    if parent != -1 or children > 1:
                        cut_mask |= 1 << u
                    block = 0
                    while True:
                        a, b = edge_stack.pop()
                        block |= (1 << a) | (1 << b)
                        if (a, b) == (u, w):
                            break
                    blocks.append(block)
            elif w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])

    for v in range(n):
        if disc[v] == -1:
            dfs(v, -1)

    tree_edges = tuple(
        (i, v) for i, b in enumerate(blocks) for v in iter_bits(b & cut_mask)
    )
    return BlockDecomposition(tuple(blocks), cut_mask, tree_edges)


def find_terminal_endblock(g: Graph) -> int:
    """Index of an endblock meeting at most one non-endblock.

    Found as an end of a longest path in the block-cutvertex forest;
    the farthest node from anywhere in such a tree is always a block.
    """
    bd = block_decomposition(g)
    if not bd.blocks:
        raise NoBlocks("edgeless graph has no blocks")
    nblocks = len(bd.blocks)
    cuts = list(iter_bits(bd.cutvertices))
    cut_node = {v: nblocks + i for i, v in enumerate(cuts)}
    size = nblocks + len(cuts)
    adj: list[list[int]] = [[] for _ in range(size)]
    for bi, v in bd.tree_edges:
        adj[bi].append(cut_node[v])
        adj[cut_node[v]].append(bi)

    def farthest(start: int) -> tuple[int, int, list[int]]:
        dist = {start: 0}
        queue = [start]
        for node in queue:
            for other in adj[node]:
                if other not in dist:
                    dist[other] = dist[node] + 1
                    queue.append(other)
        top = max(dist.values())
        ends = sorted(node for node, d in dist.items() if d == top and node < nblocks)
        return ends[0], top, queue

    best: tuple[int, int] | None = None
    seen: set[int] = set()
    for start in range(nblocks):
        if start in seen:
            continue
        far, _, comp = farthest(start)
        seen.update(comp)
        end, length, _ = farthest(far)
        if best is None or length > best[0]:
            best = (length, end)
    assert best is not None
    return best[1]


def ear_decomposition(g: Graph, block: int) -> EarDecomposition:
    """Decompose a 2-connected block into a base cycle plus ears.

    Vertices keep their labels in g.  Raises ``NotTwoConnected`` unless
    the mask induces a 2-connected subgraph on >= 3 vertices.
    """
    if block.bit_count() < 3:
        raise NotTwoConnected("need at least 3 vertices")
    sub = g.induced(block)
    bd = block_decomposition(sub)
    if bd.blocks != (sub.full_mask,) or bd.cutvertices:
        raise NotTwoConnected("mask does not induce a 2-connected subgraph")

    base = next(_cycles_in_block(g, block))
    covered = mask_of(base)
    cov = [0] * g.order

    def cover(u: int, v: int) -> None:
        cov[u] |= 1 << v
        cov[v] |= 1 << u

    for i, v in enumerate(base):
        cover(v, base[(i + 1) % len(base)])

    total_edges = sum((g.adj[v] & block).bit_count() for v in iter_bits(block)) // 2
    covered_edges = len(base)
    ears: list[tuple[int, ...]] = []
    while covered_edges < total_edges:
        u, x = _uncovered_edge(g, block, covered, cov)
        if covered >> x & 1:
            ear = (u, x)
        else:
            ear = _grow_ear(g, block, covered, u, x)
        ears.append(ear)
        for i in range(len(ear) - 1):
            cover(ear[i], ear[i + 1])
        covered |= mask_of(ear)
        covered_edges += len(ear) - 1
    return EarDecomposition(base, tuple(ears))


def _uncovered_edge(g: Graph, block: int, covered: int, cov: list[int]) -> tuple[int, int]:
    for u in iter_bits(covered):
        fresh = g.adj[u] & block & ~cov[u]
        if fresh:
            return u, (fresh & -fresh).bit_length() - 1
    raise AssertionError("uncovered edge must touch the covered subgraph")


def _grow_ear(g: Graph, block: int, covered: int, u: int, x: int) -> tuple[int, ...]:
    # Walk from x through fresh vertices until the covered set is hit
    # somewhere other than u; 2-connectivity guarantees such a path.
    parent = {x: u}
    queue = [x]
    for y in queue:
        for z in iter_bits(g.adj[y] & block):
            if covered >> z & 1:
                if z != u:
                    tail = [z, y]
                    while tail[-1] != x:
                        tail.append(parent[tail[-1]])
                    tail.append(u)
                    return tuple(reversed(tail))
            elif z not in parent:
                parent[z] = y
                queue.append(z)
    raise NotTwoConnected("no return path for ear")


def simple_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every simple cycle exactly once, as a vertex tuple starting at the
    cycle's smallest vertex with the smaller neighbor second."""
    bd = block_decomposition(g)
    for block in bd.blocks:
        if block.bit_count() >= 3:
            yield from _cycles_in_block(g, block)


def _cycles_in_block(g: Graph, block: int) -> Iterator[tuple[int, ...]]:
    for s in iter_bits(block):
        path = [s]
        onpath = 1 << s

        def extend(v: int) -> Iterator[tuple[int, ...]]:
            nonlocal onpath
            for w in iter_bits(g.adj[v] & block):
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                elif w > s and not onpath >> w & 1:
                    path.append(w)
                    onpath |= 1 << w
                    yield from extend(w)
                    path.pop()
                    onpath &= ~(1 << w)

        yield from extend(s)


def count_cycles(g: Graph, limit: int) -> CycleCensus:
    """Count distinct cycles, stopping as soon as more than ``limit`` exist."""
    if limit < 0:
        raise BadParameters("cycle budget must be >= 0")
    count = 0
    for _ in simple_cycles(g):
        if count == limit:
            return CycleCensus(limit, limit, True)
        count += 1
    return CycleCensus(count, limit, False)


def cyclomatic_number(g: Graph) -> int:
    """edges - vertices + components; a lower bound on the cycle count."""
    return g.edge_count - g.order + len(g.components())


def cycles_pairwise_disjoint(g: Graph) -> bool:
    """Block shape test: every block is a single edge or a chordless cycle.

    Equivalent to "no block carries two cycles".  Cycles may still meet
    at a cutvertex (two triangles sharing a hub pass this test); use
    ``has_intersecting_cycles`` for the vertex-sharing question."""
    for block in block_decomposition(g).blocks:
        size = block.bit_count()
        if size == 2:
            continue
        if any((g.adj[v] & block).bit_count() != 2 for v in iter_bits(block)):
            return False
    return True


def has_intersecting_cycles(g: Graph) -> bool:
    """True iff two distinct cycles share at least one vertex."""
    seen = 0
    for cyc in simple_cycles(g):
        mask = mask_of(cyc)
        if seen & mask:
            return True
        seen |= mask
    return False


def has_multicycle_endblock(g: Graph) -> bool:
    """True iff some endblock contains two or more cycles."""
    bd = block_decomposition(g)
    for i in bd.endblocks():
        if len(list(islice(_cycles_in_block(g, bd.blocks[i]), 2))) == 2:
            return True
    return False
