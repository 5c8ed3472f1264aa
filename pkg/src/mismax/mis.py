"""Exact enumeration and counting of maximal independent sets.

A set is independent when no edge joins two of its vertices and maximal
when every outside vertex has a neighbor inside.  Enumeration runs
Bron-Kerbosch with pivoting over the *compatibility* masks (vertices a
set member can coexist with), which visits each maximal independent set
exactly once.  Counting avoids materializing sets where it can:

  * multiply over connected components (the count is multiplicative
    under disjoint union);
  * if some vertex's neighborhood induces a clique (a simplicial
    vertex), every maximal independent set contains exactly one vertex
    of that closed neighborhood, so the count is the sum of the counts
    after deleting each closed neighborhood in turn;
  * otherwise fall back to enumeration of the component, since without
    a simplicial vertex branch counts cannot certify maximality.

Counts are checked against a 64-bit ceiling; exceeding it raises
``CountOverflow`` instead of returning a wrapped or bignum value.
"""

from __future__ import annotations

from .errors import BadEndpoint, CountOverflow
from .graphs import Graph, delete_closed_neighborhood, delete_vertex, iter_bits

UINT64_MAX = 2**64 - 1


def _checked(value: int) -> int:
    if value > UINT64_MAX:
        raise CountOverflow("maximal independent set count exceeds 64 bits")
    return value


def is_maximal_independent(g: Graph, vset: int) -> bool:
    """True iff ``vset`` is independent and cannot be extended."""
    if vset & ~g.full_mask:
        raise BadEndpoint("vertex set outside the graph's universe")
    dominated = vset
    for v in iter_bits(vset):
        if g.adj[v] & vset:
            return False
        dominated |= g.adj[v]
    return dominated == g.full_mask


def enumerate_mis(g: Graph) -> list[int]:
    """All maximal independent sets of g as masks, sorted ascending."""
    n = g.order
    full = (1 << n) - 1
    compat = [full & ~g.adj[v] & ~(1 << v) for v in range(n)]
    out: list[int] = []

    def expand(chosen: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            out.append(chosen)
            return
        pool = candidates | excluded
        pivot = -1
        best = -1
        for u in iter_bits(pool):
            score = (candidates & compat[u]).bit_count()
            if score > best:
                best = score
                pivot = u
        rest = candidates & ~compat[pivot]
        for v in iter_bits(rest):
            bit = 1 << v
            expand(chosen | bit, candidates & compat[v], excluded & compat[v])
            candidates &= ~bit
            excluded |= bit

    expand(0, full, 0)
    out.sort()
    return out


def find_simplicial_vertex(g: Graph) -> int | None:
    """A minimum-degree vertex whose neighborhood induces a clique, if any."""
    best = None
    best_deg = None
    for v in range(g.order):
        nb = g.adj[v]
        deg = nb.bit_count()
        if best_deg is not None and deg >= best_deg:
            continue
        if all((g.adj[u] & nb) == nb & ~(1 << u) for u in iter_bits(nb)):
            best, best_deg = v, deg
    return best


def count_mis(g: Graph) -> int:
    """Number of maximal independent sets of g, with overflow checking."""
    total = 1
    comps = g.components()
    for comp in comps:
        part = _count_connected(g if len(comps) == 1 else g.induced(comp))
        total = _checked(total * part)
    return total


def _count_connected(g: Graph) -> int:
    if g.order == 0:
        return 1
    v = find_simplicial_vertex(g)
    if v is None:
        return _checked(len(enumerate_mis(g)))
    total = 0
    for u in iter_bits(g.closed_neighborhood(v)):
        total = _checked(total + count_mis(delete_closed_neighborhood(g, u)))
    return total


def m_bound_components(g: Graph, v: int) -> tuple[int, int]:
    """The pair (m(G - v), m(G - N[v])) whose sum bounds m(G) from above."""
    g._check_vertex(v)
    return (
        count_mis(delete_vertex(g, v)),
        count_mis(delete_closed_neighborhood(g, v)),
    )
