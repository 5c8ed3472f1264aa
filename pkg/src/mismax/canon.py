"""Canonical labeling by partition refinement with backtracking.

The canonical form of a graph is the lexicographically least adjacency
code over every vertex ordering the search explores, serialized as the
graph6 string of the relabeled graph.  The explored orderings are those
compatible with iterated degree/neighbor-color refinement, with one
vertex of the first non-singleton cell individualized at each backtrack
level.  Refinement only ever separates vertices that no automorphism can
swap, so the set of explored codes is an isomorphism invariant and two
graphs get the same form exactly when they are isomorphic.

Automorphisms discovered during the search (two leaves producing equal
codes) are collected and used to skip branches that are provably
equivalent to one already explored, which keeps highly symmetric inputs
(stars, matchings, complete graphs) tractable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderTooLarge
from .graphs import Graph, encode_graph6, iter_bits

# Practical bound for the refinement + backtracking search.
CANON_MAX_VERTICES = 16


@dataclass(frozen=True)
class CanonResult:
    """Outcome of a canonical labeling search.

    ``labeling[old]`` is the new index of vertex ``old``; ``form`` is the
    graph6 string of the relabeled graph; ``generators`` are automorphisms
    of the input graph (in its original labels) found along the way.  The
    generators need not generate the full automorphism group.
    """

    form: str
    labeling: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]


def _refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Iterate color refinement until stable.

    A vertex signature is its color plus the sorted multiset of neighbor
    colors; new colors are the ranks of the sorted distinct signatures,
    so the result does not depend on the input labeling.
    """
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in iter_bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _first_cell(colors: list[int]) -> list[int]:
    """Vertices of the first non-singleton color class, or [] if discrete."""
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    for c in sorted(by_color):
        if len(by_color[c]) > 1:
            return by_color[c]
    return []


def _code(adj: tuple[int, ...], colors: list[int]) -> tuple[int, tuple[int, ...]]:
    """Adjacency code and labeling for a discrete coloring.

    The code packs the upper triangle in column order behind a sentinel
    bit so that codes of equal order compare as plain integers.
    """
    n = len(colors)
    order = sorted(range(n), key=colors.__getitem__)
    labeling = [0] * n
    for pos, v in enumerate(order):
        labeling[v] = pos
    new_adj = [0] * n
    for v in range(n):
        m = 0
        for u in iter_bits(adj[v]):
            m |= 1 << labeling[u]
        new_adj[labeling[v]] = m
    acc = 1
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | (new_adj[v] >> u & 1)
    return acc, tuple(labeling)


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.best_code: int | None = None
        self.best_labeling: tuple[int, ...] = ()
        self.generators: list[tuple[int, ...]] = []

    def run(self) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
        colors = _refine(self.adj, [0] * self.n)
        self._descend(colors, [])
        return self.best_labeling, tuple(self.generators)

    def _descend(self, colors: list[int], path: list[int]) -> None:
        cell = _first_cell(colors)
        if not cell:
            code, labeling = _code(self.adj, colors)
            if self.best_code is None or code < self.best_code:
                self.best_code = code
                self.best_labeling = labeling
            elif code == self.best_code and labeling != self.best_labeling:
                self._record_automorphism(labeling)
            return
        tried: list[int] = []
        orbit = self._orbits(path)
        for v in cell:
            if any(orbit[v] == orbit[u] for u in tried):
                continue
            tried.append(v)
            branched = [2 * c for c in colors]
            branched[v] -= 1
            self._descend(_refine(self.adj, branched), path + [v])

    def _record_automorphism(self, labeling: tuple[int, ...]) -> None:
        # Equal codes mean the two orderings are related by an automorphism:
        # the vertex at each position of one maps to the vertex at the same
        # position of the other.
        inverse_best = [0] * self.n
        for v, pos in enumerate(self.best_labeling):
            inverse_best[pos] = v
        sigma = tuple(inverse_best[labeling[v]] for v in range(self.n))
        for v in range(self.n):
            image = 0
            for u in iter_bits(self.adj[v]):
                image |= 1 << sigma[u]
            if image != self.adj[sigma[v]]:
                return
        if any(sigma[v] != v for v in range(self.n)):
            self.generators.append(sigma)

    def _orbits(self, path: list[int]) -> list[int]:
        """Union-find orbits under the found generators that fix ``path``.

        Using only prefix-fixing generators under-approximates the true
        orbits of the path stabilizer, so skipping within an orbit never
        loses a genuinely new branch.
        """
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for sigma in self.generators:
            if any(sigma[p] != p for p in path):
                continue
            for v in range(self.n):
                rv, rs = find(v), find(sigma[v])
                if rv != rs:
                    parent[rs] = rv
        return [find(v) for v in range(self.n)]


def canonical_labeling(g: Graph) -> CanonResult:
    """Full canonical labeling result for g (order <= 16)."""
    if g.order > CANON_MAX_VERTICES:
        raise OrderTooLarge(
            f"canonical labeling supports order <= {CANON_MAX_VERTICES}"
        )
    if g.order == 0:
        return CanonResult(encode_graph6(g), (), ())
    labeling, gens = _Search(g.adj).run()
    return CanonResult(encode_graph6(relabel(g, labeling)), labeling, gens)


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant graph6 string of g's canonical labeling."""
    return canonical_labeling(g).form


def relabel(g: Graph, labeling: tuple[int, ...]) -> Graph:
    """Apply a labeling (old index -> new index) to g."""
    adj = [0] * g.order
    for v in range(g.order):
        m = 0
        for u in iter_bits(g.adj[v]):
            m |= 1 << labeling[u]
        adj[labeling[v]] = m
    return Graph(g.order, tuple(adj))
