"""Isomorph-free exhaustive generation of small graphs.

Graphs on a fixed vertex count are grown edge by edge, level by level:
every representative at k edges is extended by each admissible non-edge
and the extension is kept only if its canonical form has not been seen
at k+1 edges.  Keeping exactly the first representative of each
canonical form makes the output one graph per isomorphism class, and
two facts make pruning sound mid-generation:

  * the cyclomatic number (edges - vertices + components) never
    decreases when an edge is added, so extensions that exceed the
    cyclomatic budget can be dropped immediately;
  * the cycle count is at least the cyclomatic number, so "at most r
    cycles" implies cyclomatic number <= r and hence at most
    n - 1 + r edges.

Automorphisms discovered while canonicalizing a representative are
reused to expand only one non-edge per orbit, which trims the symmetric
(sparse) levels substantially.  Generation is deterministic; results for
a given constraint set are cached for reuse across verification runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .canon import canonical_labeling
from .errors import OrderTooLarge
from .graphs import Graph, empty_graph, iter_bits


@dataclass(frozen=True)
class GenerationConstraints:
    """Family membership constraints for exhaustive generation.

    ``max_cyclomatic`` of None means unconstrained.  ``max_edges`` is
    derived: n - 1 + max_cyclomatic when a cyclomatic budget is given,
    otherwise the complete-graph edge count.
    """

    order: int
    connected: bool = False
    max_cyclomatic: int | None = None

    @property
    def max_edges(self) -> int:
        n = self.order
        if self.max_cyclomatic is None:
            return n * (n - 1) // 2
        return min(n * (n - 1) // 2, max(0, n - 1 + self.max_cyclomatic))


# Desk-scale limits: full families to 10 vertices, sparse families to 12.
FULL_ORDER_LIMIT = 10
SPARSE_ORDER_LIMIT = 12


def generate_graphs(constraints: GenerationConstraints) -> Iterator[Graph]:
    """One representative per isomorphism class meeting the constraints."""
    n = constraints.order
    sparse = constraints.max_cyclomatic is not None and constraints.max_cyclomatic <= 3
    limit = SPARSE_ORDER_LIMIT if sparse else FULL_ORDER_LIMIT
    if n > limit:
        raise OrderTooLarge(
            f"generation supports order <= {limit} for these constraints"
        )
    for g in _representatives(n, constraints.max_cyclomatic, constraints.max_edges):
        if constraints.connected and not g.is_connected():
            continue
        yield g


@lru_cache(maxsize=None)
def _representatives(
    n: int, max_cyclomatic: int | None, max_edges: int
) -> tuple[Graph, ...]:
    out: list[Graph] = []
    start = empty_graph(n)
    level: dict[str, tuple[Graph, tuple[tuple[int, ...], ...]]] = {
        canonical_labeling(start).form: (start, ())
    }
    out.append(start)
    for _ in range(max_edges):
        nxt: dict[str, tuple[Graph, tuple[tuple[int, ...], ...]]] = {}
        for g, gens in level.values():
            comp_id = _component_ids(g)
            budget_full = (
                max_cyclomatic is not None
                and g.edge_count - n + len(set(comp_id)) >= max_cyclomatic
            )
            for u, v in _candidate_edges(g, gens):
                if budget_full and comp_id[u] == comp_id[v]:
                    continue
                h = g.with_edge(u, v)
                res = canonical_labeling(h)
                if res.form not in nxt:
                    nxt[res.form] = (h, res.generators)
        level = nxt
        out.extend(g for g, _ in level.values())
    return tuple(out)


def _component_ids(g: Graph) -> list[int]:
    ids = [-1] * g.order
    for i, comp in enumerate(g.components()):
        for v in iter_bits(comp):
            ids[v] = i
    return ids


def _candidate_edges(
    g: Graph, gens: tuple[tuple[int, ...], ...]
) -> list[tuple[int, int]]:
    """Non-edges of g, one per orbit of the known automorphisms.

    The generators may be a proper subset of the automorphism group, so
    this only merges pairs that are provably equivalent; missing merges
    cost duplicate canonical-form checks, never completeness.
    """
    nonedges = [
        (u, v)
        for v in range(g.order)
        for u in range(v)
        if not g.adj[v] >> u & 1
    ]
    if not gens:
        return nonedges
    index = {e: i for i, e in enumerate(nonedges)}
    parent = list(range(len(nonedges)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sigma in gens:
        for i, (u, v) in enumerate(nonedges):
            a, b = sigma[u], sigma[v]
            j = index[(min(a, b), max(a, b))]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[rj] = ri
    return [e for i, e in enumerate(nonedges) if find(i) == i]


def labeled_class_count(n: int) -> int:
    """Number of isomorphism classes of graphs on n vertices, computed by
    orbit counting over vertex permutations acting on vertex pairs.

    Independent of the generator and of the canonical form; used as an
    oracle for generation totals.
    """
    from itertools import permutations
    from math import factorial

    pairs = [(u, v) for v in range(n) for u in range(v)]
    pair_index = {p: i for i, p in enumerate(pairs)}
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * len(pairs)
        orbits = 0
        for i, (u, v) in enumerate(pairs):
            if seen[i]:
                continue
            orbits += 1
            j = i
            while not seen[j]:
                seen[j] = True
                a, b = pairs[j]
                a, b = perm[a], perm[b]
                j = pair_index[(min(a, b), max(a, b))]
        total += 2**orbits
    return total // factorial(n)
