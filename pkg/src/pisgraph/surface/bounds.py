"""Euler-count lower bounds and the closed-form genus/crosscap formulas."""

from __future__ import annotations

from ..errors import OutOfRange
from ..pis_graph import LabeledGraph


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def formula_genus_complete(n: int) -> int:
    """Genus of the complete graph on n >= 3 vertices."""
    if n < 3:
        raise OutOfRange(f"complete-graph genus formula needs n >= 3, got {n}")
    return _ceil_div((n - 3) * (n - 4), 12)


def formula_genus_bipartite(m: int, n: int) -> int:
    """Genus of the complete bipartite graph, m, n >= 2."""
    if m < 2 or n < 2:
        raise OutOfRange(f"bipartite genus formula needs m, n >= 2, got ({m},{n})")
    return _ceil_div((m - 2) * (n - 2), 4)


def formula_crosscap_complete(n: int) -> int:
    """Crosscap of the complete graph; n = 7 is the exception to the ceiling."""
    if n < 3:
        raise OutOfRange(f"complete-graph crosscap formula needs n >= 3, got {n}")
    if n == 7:
        return 3
    return _ceil_div((n - 3) * (n - 4), 6)


def formula_crosscap_bipartite(m: int, n: int) -> int:
    """Crosscap of the complete bipartite graph, m, n >= 2."""
    if m < 2 or n < 2:
        raise OutOfRange(f"bipartite crosscap formula needs m, n >= 2, got ({m},{n})")
    return _ceil_div((m - 2) * (n - 2), 2)


def euler_lower_bounds(g: LabeledGraph) -> tuple[int, int]:
    """(genus, crosscap) lower bounds from Euler counting with a face bound.

    Every face of a 2-cell embedding of a simple connected graph on >= 3
    vertices has length >= 3; with minimum degree >= 2 every face walk
    contains a cycle, so the girth can replace 3.  Acyclic graphs embed in
    the sphere, giving (0, 0).

    The crosscap bound is capped at one more than the genus bound, which is
    weaker than the raw count but still a valid lower bound; it mirrors the
    one-extra-level refutation style used when ruling surfaces out by face
    counting.
    """
    v = g.n
    e = g.edge_count
    girth = g.girth()
    if e == 0 or girth is None:
        return 0, 0
    gamma = girth if g.min_degree() >= 2 else 3
    gamma = max(gamma, 3)
    # slack = e(1 - 2/gamma) - v + 2, kept in exact integer arithmetic.
    num = e * (gamma - 2) - gamma * (v - 2)
    genus_lb = max(0, _ceil_div(num, 2 * gamma))
    crosscap_lb = max(0, min(_ceil_div(num, gamma), genus_lb + 1))
    return genus_lb, crosscap_lb
