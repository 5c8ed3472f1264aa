"""Extremal graph families and their closed-form counts.

Builders construct, for each family, the graph attaining the maximum
number of maximal independent sets:

  * ``extremal_graph(n)``          -- over all graphs on n vertices
    (triangle components plus at most two matching edges);
  * ``extremal_graph_alt(n)``      -- the second maximizer (one K4) that
    exists when n is 1 mod 3;
  * ``extremal_bounded_graph(n, r)``   -- over graphs with at most r
    cycles (r triangles, rest a matching, one triangle fewer when the
    parities of n and r differ);
  * ``extremal_connected_graph(n)``    -- over connected graphs (a
    clique hub star-joined to triangles, with K4s absorbing residues);
  * ``extremal_bounded_connected_graph(n, r)`` -- over connected graphs
    with at most r cycles.

Evaluators return the corresponding counts exactly, with 64-bit
overflow checking; ``r = 0`` aliases the forest and tree bounds.  Every
closed form is reproducible by counting on the builder output, and the
monotonicity checker sweeps the four inequalities relating them,
reporting equality witnesses rather than asserting silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadParameters
from .graphs import Graph, complete, disjoint_union, empty_graph, star_join
from .mis import _checked


def _copies(count: int, g: Graph) -> Graph:
    out = empty_graph(0)
    for _ in range(count):
        out = disjoint_union(out, g)
    return out


def _union(*parts: Graph) -> Graph:
    out = empty_graph(0)
    for p in parts:
        out = disjoint_union(out, p)
    return out


# -- builders ----------------------------------------------------------------


def extremal_graph(n: int) -> Graph:
    """Maximizer over all graphs on n vertices (n >= 2)."""
    if n < 2:
        raise BadParameters("need n >= 2")
    if n % 3 == 0:
        return _copies(n // 3, complete(3))
    if n % 3 == 1:
        return _union(_copies(2, complete(2)), _copies((n - 4) // 3, complete(3)))
    return _union(complete(2), _copies((n - 2) // 3, complete(3)))


def extremal_graph_alt(n: int) -> Graph:
    """The K4-based second maximizer, defined when n is 1 mod 3 (n >= 4)."""
    if n < 4 or n % 3 != 1:
        raise BadParameters("need n >= 4 with n = 1 (mod 3)")
    return _union(complete(4), _copies((n - 4) // 3, complete(3)))


def extremal_bounded_graph(n: int, r: int) -> Graph:
    """Maximizer over graphs with n vertices and at most r cycles
    (r >= 1, n >= 3r - 1)."""
    if r < 1 or n < 3 * r - 1:
        raise BadParameters("need r >= 1 and n >= 3r - 1")
    if n % 2 == r % 2:
        return _union(_copies(r, complete(3)), _copies((n - 3 * r) // 2, complete(2)))
    return _union(
        _copies(r - 1, complete(3)), _copies((n - 3 * r + 3) // 2, complete(2))
    )


def extremal_connected_graph(n: int) -> Graph:
    """Maximizer over connected graphs on n vertices (n >= 6)."""
    if n < 6:
        raise BadParameters("need n >= 6")
    if n % 3 == 0:
        return star_join(3, _copies((n - 3) // 3, complete(3)))
    if n % 3 == 1:
        return star_join(4, _copies((n - 4) // 3, complete(3)))
    return star_join(4, _union(complete(4), _copies((n - 8) // 3, complete(3))))


def extremal_bounded_connected_graph(n: int, r: int) -> Graph:
    """Maximizer over connected graphs with n vertices and at most r
    cycles (r >= 1, n >= 3r)."""
    if r < 1 or n < 3 * r:
        raise BadParameters("need r >= 1 and n >= 3r")
    if n % 2 == r % 2:
        rest = _union(
            _copies(r - 1, complete(3)), _copies((n - 3 * r) // 2, complete(2))
        )
        return star_join(3, rest)
    rest = _union(
        _copies(r, complete(3)), _copies((n - 3 * r - 1) // 2, complete(2))
    )
    return star_join(1, rest)


# -- closed forms --------------------------------------------------------------


def max_mis(n: int) -> int:
    """Greatest number of maximal independent sets on n vertices (n >= 2)."""
    if n < 2:
        raise BadParameters("need n >= 2")
    if n % 3 == 0:
        return _checked(3 ** (n // 3))
    if n % 3 == 1:
        return _checked(4 * 3 ** ((n - 4) // 3))
    return _checked(2 * 3 ** ((n - 2) // 3))


def max_mis_bounded(n: int, r: int) -> int:
    """Greatest count over graphs with at most r cycles; r = 0 is the
    forest bound."""
    if r == 0:
        return max_mis_forest(n)
    if r < 0 or n < 3 * r - 1:
        raise BadParameters("need r >= 0 and n >= 3r - 1")
    if n % 2 == r % 2:
        return _checked(3**r * 2 ** ((n - 3 * r) // 2))
    return _checked(3 ** (r - 1) * 2 ** ((n - 3 * r + 3) // 2))


def max_mis_connected(n: int) -> int:
    """Greatest count over connected graphs on n vertices (n >= 6)."""
    if n < 6:
        raise BadParameters("need n >= 6")
    if n % 3 == 0:
        return _checked(2 * 3 ** ((n - 3) // 3) + 2 ** ((n - 3) // 3))
    if n % 3 == 1:
        return _checked(3 ** ((n - 1) // 3) + 2 ** ((n - 4) // 3))
    return _checked(4 * 3 ** ((n - 5) // 3) + 3 * 2 ** ((n - 8) // 3))


def max_mis_bounded_connected(n: int, r: int) -> int:
    """Greatest count over connected graphs with at most r cycles;
    r = 0 is the tree bound."""
    if r == 0:
        return max_mis_tree(n)
    if r < 0 or n < 3 * r:
        raise BadParameters("need r >= 0 and n >= 3r")
    if n % 2 == r % 2:
        return _checked(3 ** (r - 1) * 2 ** ((n - 3 * r + 2) // 2) + 2 ** (r - 1))
    return _checked(3**r * 2 ** ((n - 3 * r - 1) // 2))


def max_mis_forest(n: int) -> int:
    """Forest bound 2^floor(n/2) (n >= 1)."""
    if n < 1:
        raise BadParameters("need n >= 1")
    return _checked(2 ** (n // 2))


def max_mis_tree(n: int) -> int:
    """Tree bound: 2^((n-2)/2) + 1 for even n, 2^((n-1)/2) for odd n."""
    if n < 1:
        raise BadParameters("need n >= 1")
    if n % 2 == 0:
        return _checked(2 ** ((n - 2) // 2) + 1)
    return _checked(2 ** ((n - 1) // 2))


# -- monotonicity sweep ---------------------------------------------------------


@dataclass
class MonotonicityReport:
    """Findings of the inequality sweep.

    ``violations`` holds human-readable descriptions of any failed
    inequality.  The two equality lists record every (n, r, q) where the
    weak inequalities are tight; the report compares them against the
    predicted sets instead of asserting, so an unexpected witness is a
    finding, not a crash.
    """

    max_n: int
    max_r: int
    violations: list[str] = field(default_factory=list)
    bounded_equalities: list[tuple[int, int, int]] = field(default_factory=list)
    connected_equalities: list[tuple[int, int, int]] = field(default_factory=list)
    expected_bounded: list[tuple[int, int, int]] = field(default_factory=list)
    expected_connected: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            not self.violations
            and self.bounded_equalities == self.expected_bounded
            and self.connected_equalities == self.expected_connected
        )


def check_monotonicity(max_n: int, max_r: int) -> MonotonicityReport:
    """Sweep the four growth inequalities for all parameters in range.

    (1) strict growth of the bounded maximum in n; (2) same for the
    connected maximum; (3) weak growth in r with equality exactly when
    the parities of n and r differ and q = r - 1; (4) weak growth in r
    for the connected maximum with equality exactly at (4, 1, 0) and
    (7, 2, 1).
    """
    if max_n > 120:
        raise BadParameters("sweep capped at n <= 120 to stay within 64 bits")
    report = MonotonicityReport(max_n, max_r)

    for r in range(1, max_r + 1):
        for m in range(3 * r - 1, max_n + 1):
            for n in range(m + 1, max_n + 1):
                if max_mis_bounded(n, r) <= max_mis_bounded(m, r):
                    report.violations.append(f"bounded({n},{r}) <= bounded({m},{r})")
        for m in range(3 * r, max_n + 1):
            for n in range(m + 1, max_n + 1):
                if max_mis_bounded_connected(n, r) <= max_mis_bounded_connected(m, r):
                    report.violations.append(
                        f"connected({n},{r}) <= connected({m},{r})"
                    )

    for r in range(1, max_r + 1):
        for q in range(r):
            for n in range(3 * r - 1, max_n + 1):
                hi, lo = max_mis_bounded(n, r), max_mis_bounded(n, q)
                if hi < lo:
                    report.violations.append(f"bounded({n},{r}) < bounded({n},{q})")
                elif hi == lo:
                    report.bounded_equalities.append((n, r, q))
                if n % 2 != r % 2 and q == r - 1:
                    report.expected_bounded.append((n, r, q))
            for n in range(3 * r, max_n + 1):
                hi = max_mis_bounded_connected(n, r)
                lo = max_mis_bounded_connected(n, q)
                if hi < lo:
                    report.violations.append(
                        f"connected({n},{r}) < connected({n},{q})"
                    )
                elif hi == lo:
                    report.connected_equalities.append((n, r, q))
                if (n, r, q) in ((4, 1, 0), (7, 2, 1)):
                    report.expected_connected.append((n, r, q))

    return report


# -- table emission ----------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    formula: str
    n: int
    r: int | None
    value: int


def closed_form_table(max_n: int, max_r: int) -> list[TableRow]:
    """Every closed-form value with n <= max_n and r <= max_r."""
    if max_n < 1 or max_r < 0:
        raise BadParameters("need max_n >= 1 and max_r >= 0")
    rows = []
    for n in range(1, max_n + 1):
        if n >= 2:
            rows.append(TableRow("all", n, None, max_mis(n)))
        if n >= 6:
            rows.append(TableRow("connected", n, None, max_mis_connected(n)))
        rows.append(TableRow("forest", n, None, max_mis_forest(n)))
        rows.append(TableRow("tree", n, None, max_mis_tree(n)))
        for r in range(1, max_r + 1):
            if n >= 3 * r - 1:
                rows.append(TableRow("all-bounded", n, r, max_mis_bounded(n, r)))
            if n >= 3 * r:
                rows.append(
                    TableRow(
                        "connected-bounded", n, r, max_mis_bounded_connected(n, r)
                    )
                )
    return rows
