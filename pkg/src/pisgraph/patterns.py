"""Forbidden-pattern detection: induced subgraphs and topological subdivisions.

Induced search is exhaustive backtracking in lexicographic order, so the
first witness found is canonical.  Subdivision search assigns branch
vertices (descending degree, ties by index, with part-symmetry breaking for
complete and complete bipartite patterns) and then looks for internally
disjoint paths, shortest first.  A separate checker re-verifies witnesses
independently of either searcher.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExhausted
from .pis_graph import LabeledGraph
from .surface.blocks import blocks

# Small fixed patterns for induced search: vertex count and edge set.
INDUCED_PATTERNS: dict[str, tuple[int, frozenset[tuple[int, int]]]] = {
    "P4": (4, frozenset({(0, 1), (1, 2), (2, 3)})),
    "C4": (4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})),
    "C5": (5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)})),
    "2K2": (4, frozenset({(0, 1), (2, 3)})),
}


@dataclass(frozen=True)
class PatternWitness:
    """Embedding of a pattern into a host graph.

    ``vertices[i]`` is the host vertex for pattern vertex i.  For
    subdivisions, ``paths[k]`` realises pattern edge ``pattern_edges[k]`` as
    a host path including both branch endpoints.
    """

    kind: str  # "induced" | "subdivision"
    pattern: str
    vertices: tuple[int, ...]
    pattern_edges: tuple[tuple[int, int], ...] = ()
    paths: tuple[tuple[int, ...], ...] = ()

    def to_json(self, g: LabeledGraph) -> dict:
        out = {
            "kind": self.kind,
            "pattern": self.pattern,
            "vertices": [g.labels[v] for v in self.vertices],
        }
        if self.kind == "subdivision":
            out["paths"] = [
                {
                    "edge": list(e),
                    "path": [g.labels[v] for v in p],
                }
                for e, p in zip(self.pattern_edges, self.paths)
            ]
        return out


def _pattern_edges(name: str) -> tuple[int, frozenset[tuple[int, int]]]:
    if name not in INDUCED_PATTERNS:
        raise ValueError(f"unknown induced pattern {name!r}")
    return INDUCED_PATTERNS[name]


def find_induced(g: LabeledGraph, pattern: str) -> PatternWitness | None:
    """Exhaustive search for an induced copy of a fixed small pattern.

    Returns the lexicographically least witness mapping, or None.
    """
    k, edges = _pattern_edges(pattern)
    n = g.n
    if n < k:
        return None
    want = [[(i, j) in edges or (j, i) in edges for j in range(k)] for i in range(k)]
    assign: list[int] = []
    used = 0

    def extend() -> bool:
        nonlocal used
        i = len(assign)
        if i == k:
            return True
        for h in range(n):
            if used >> h & 1:
                continue
            ok = True
            for j in range(i):
                if g.has_edge(h, assign[j]) != want[i][j]:
                    ok = False
                    break
            if not ok:
                continue
            assign.append(h)
            used |= 1 << h
            if extend():
                return True
            assign.pop()
            used &= ~(1 << h)
        return False

    if extend():
        return PatternWitness(kind="induced", pattern=pattern, vertices=tuple(assign))
    return None


def is_split(g: LabeledGraph) -> tuple[bool, PatternWitness | None]:
    """Split graphs are exactly the graphs with no induced C4, C5 or 2K2."""
    for pat in ("C4", "C5", "2K2"):
        w = find_induced(g, pat)
        if w is not None:
            return False, w
    return True, None


def is_threshold(g: LabeledGraph) -> bool:
    """No induced P4, C4 or 2K2."""
    return all(find_induced(g, p) is None for p in ("P4", "C4", "2K2"))


def is_cograph(g: LabeledGraph) -> bool:
    """No induced P4."""
    return find_induced(g, "P4") is None


def is_cactus(g: LabeledGraph) -> bool:
    """Connected, and every block is a single edge or a single cycle.

    Equivalent to: any two simple cycles share at most one vertex.
    """
    if g.n == 0 or not g.is_connected:
        return False
    for b in blocks(g):
        if b.edge_count != 1 and b.edge_count != b.n:
            return False
    return True


def is_unicyclic(g: LabeledGraph) -> bool:
    """Connected with exactly one cycle, i.e. e = v."""
    return g.n > 0 and g.is_connected and g.edge_count == g.n


# ---------------------------------------------------------------------------
# Topological subdivisions of complete and complete bipartite patterns.


def parse_subdivision_pattern(pattern) -> tuple[str, tuple[int, ...]]:
    """Normalise a pattern spec to ("complete", (n,)) or ("bipartite", (m, n)).

    Accepts the short names K4, K23, K5, K33, K54, K55, general "K7" or
    "K3,3" strings, and ("complete", n) / ("bipartite", m, n) tuples.
    """
    named = {
        "K4": ("complete", (4,)),
        "K5": ("complete", (5,)),
        "K23": ("bipartite", (2, 3)),
        "K33": ("bipartite", (3, 3)),
        "K54": ("bipartite", (5, 4)),
        "K55": ("bipartite", (5, 5)),
    }
    if isinstance(pattern, str):
        if pattern in named:
            return named[pattern]
        body = pattern[1:] if pattern.startswith("K") else pattern
        if "," in body:
            m, n = (int(x) for x in body.split(","))
            return "bipartite", (m, n)
        return "complete", (int(body),)
    if isinstance(pattern, tuple):
        if pattern[0] == "complete":
            return "complete", (int(pattern[1]),)
        if pattern[0] == "bipartite":
            return "bipartite", (int(pattern[1]), int(pattern[2]))
    raise ValueError(f"unknown subdivision pattern {pattern!r}")


def _pattern_name(kind: str, sizes: tuple[int, ...]) -> str:
    if kind == "complete":
        return f"K{sizes[0]}"
    return f"K{sizes[0]},{sizes[1]}"


def subdivision_pattern_edges(kind: str, sizes: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    if kind == "complete":
        (n,) = sizes
        return tuple((i, j) for i in range(n) for j in range(i + 1, n))
    m, n = sizes
    return tuple((i, m + j) for i in range(m) for j in range(n))


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1) -> bool:
        self.used += amount
        return self.used <= self.limit

    @property
    def exhausted(self) -> bool:
        return self.used > self.limit


def _reachable(adj: Sequence[int], src: int, dst: int, banned: int) -> bool:
    # banned is a bitmask of vertices the path may not enter (src excluded).
    if src == dst:
        return True
    seen = 1 << src | banned & ~(1 << dst)
    stack = [src]
    while stack:
        u = stack.pop()
        m = adj[u] & ~seen
        if m >> dst & 1:
            return True
        v = 0
        while m:
            if m & 1:
                seen |= 1 << v
                stack.append(v)
            m >>= 1
            v += 1
    return False


def _dfs_paths(adj, src, dst, banned, exact_internal, budget):
    """Simple paths src..dst with exactly ``exact_internal`` internal
    vertices kept outside ``banned``, in lexicographic order."""
    path = [src]
    mask = [banned | (1 << src)]

    def rec(u: int):
        if not budget.spend():
            return
        if len(path) - 1 == exact_internal:
            if adj[u] >> dst & 1:
                yield path + [dst]
            return
        m = adj[u] & ~mask[0] & ~(1 << dst)
        v = 0
        while m:
            if m & 1:
                path.append(v)
                mask[0] |= 1 << v
                yield from rec(v)
                path.pop()
                mask[0] &= ~(1 << v)
            m >>= 1
            v += 1

    yield from rec(src)


def _find_disjoint_paths(
    adj: Sequence[int],
    pairs: Sequence[tuple[int, int]],
    branch_mask: int,
    budget: _Budget,
    max_internal: int,
) -> list[list[int]] | None:
    """Internally disjoint paths for every pair, avoiding branch vertices.

    Backtracks across alternative paths, shortest first.
    """
    chosen: list[list[int]] = []
    used_internal = 0

    def rec(k: int) -> bool:
        nonlocal used_internal
        if k == len(pairs):
            return True
        if budget.exhausted:
            return False
        u, v = pairs[k]
        banned = (branch_mask & ~(1 << u) & ~(1 << v)) | used_internal
        # Cheap feasibility: v must be reachable at all before enumerating.
        if not _reachable(adj, u, v, banned):
            return False
        for internal in range(0, max_internal + 1):
            for p in _dfs_paths(adj, u, v, banned, internal, budget):
                pmask = 0
                for w in p[1:-1]:
                    pmask |= 1 << w
                chosen.append(p)
                used_internal |= pmask
                if rec(k + 1):
                    return True
                chosen.pop()
                used_internal &= ~pmask
                if budget.exhausted:
                    return False
            if budget.exhausted:
                return False
        return False

    if rec(0):
        return chosen
    return None


def _branch_orders(
    kind: str,
    sizes: tuple[int, ...],
    candidates: list[int],
    adj: Sequence[int],
    budget: _Budget,
    branch_cb,
):
    """Enumerate branch-vertex assignments with part-symmetry breaking.

    ``branch_cb(assignment)`` is called for each complete assignment; the
    enumeration stops when it returns a witness.
    """
    total = sum(sizes)
    deg = [adj[v].bit_count() for v in range(len(adj))]

    if kind == "complete":
        (npat,) = sizes
        need = npat - 1
        cands = [v for v in candidates if deg[v] >= need]

        def rec_c(start: int, chosen: list[int]):
            if budget.exhausted:
                return None
            if len(chosen) == npat:
                return branch_cb(tuple(chosen))
            for idx in range(start, len(cands)):
                if not budget.spend():
                    return None
                v = cands[idx]
                res = rec_c(idx + 1, chosen + [v])
                if res is not None:
                    return res
                if budget.exhausted:
                    return None
            return None

        return rec_c(0, [])

    m, n = sizes
    left_c = [v for v in candidates if deg[v] >= n]
    right_c = [v for v in candidates if deg[v] >= m]

    def rec_b(chosen_l: list[int], chosen_r: list[int]):
        if budget.exhausted:
            return None
        if len(chosen_l) < m:
            start = 0
            if chosen_l:
                start = left_c.index(chosen_l[-1]) + 1
            for idx in range(start, len(left_c)):
                if not budget.spend():
                    return None
                v = left_c[idx]
                res = rec_b(chosen_l + [v], chosen_r)
                if res is not None:
                    return res
                if budget.exhausted:
                    return None
            return None
        if len(chosen_r) == n:
            return branch_cb(tuple(chosen_l + chosen_r))
        start = 0
        if chosen_r:
            start = right_c.index(chosen_r[-1]) + 1
        lset = set(chosen_l)
        for idx in range(start, len(right_c)):
            if not budget.spend():
                return None
            v = right_c[idx]
            if v in lset:
                continue
            if m == n and not chosen_r and chosen_l and v < chosen_l[0]:
                # Part swap symmetry: force min(left) < min(right).
                continue
            res = rec_b(chosen_l, chosen_r + [v])
            if res is not None:
                return res
            if budget.exhausted:
                return None
        return None

    return rec_b([], [])


def _search_subdivision_stage(
    g: LabeledGraph,
    kind: str,
    sizes: tuple[int, ...],
    branch_candidates: list[int],
    path_vertices: int | None,
    budget: _Budget,
) -> PatternWitness | None:
    """One search stage; ``path_vertices`` restricts path internals when set."""
    pedges = subdivision_pattern_edges(kind, sizes)
    if path_vertices is None:
        adj = list(g.adj)
    else:
        keepmask = path_vertices
        adj = [g.adj[v] & keepmask if keepmask >> v & 1 else 0 for v in range(g.n)]
    name = _pattern_name(kind, sizes)
    max_internal = min(g.n - sum(sizes), max(4, g.n // 2))

    def try_assignment(assignment: tuple[int, ...]):
        branch_mask = 0
        for v in assignment:
            branch_mask |= 1 << v
        # Necessary condition: enough spare vertices for the non-edges.
        missing = sum(
            0 if (adj[assignment[a]] >> assignment[b]) & 1 else 1 for a, b in pedges
        )
        spare = sum(1 for v in range(g.n) if adj[v] and not branch_mask >> v & 1)
        if missing > spare:
            return None
        pairs = [(assignment[a], assignment[b]) for a, b in pedges]
        paths = _find_disjoint_paths(adj, pairs, branch_mask, budget, max_internal)
        if paths is None:
            return None
        return PatternWitness(
            kind="subdivision",
            pattern=name,
            vertices=assignment,
            pattern_edges=pedges,
            paths=tuple(tuple(p) for p in paths),
        )

    # Candidates in descending degree, ties by enumeration order.
    cands = sorted(branch_candidates, key=lambda v: (-adj[v].bit_count(), v))
    return _branch_orders(kind, sizes, cands, adj, budget, try_assignment)


def find_subdivision(
    g: LabeledGraph,
    pattern,
    hints: Sequence[int] | None = None,
    budget: int = 2_000_000,
) -> PatternWitness | None:
    """Search for a topological subdivision of a complete or complete
    bipartite pattern.

    With hints, branch assignment is restricted to the hinted vertices
    first (paths confined to the hinted set, then free), falling back to a
    full search.  Raises BudgetExhausted when the node budget dies before
    the search space is covered; returns None only on a complete search.
    """
    kind, sizes = parse_subdivision_pattern(pattern)
    if sum(sizes) > g.n:
        return None
    b = _Budget(budget)
    stages: list[tuple[list[int], int | None]] = []
    if hints:
        hintlist = sorted(set(hints))
        hintmask = 0
        for v in hintlist:
            hintmask |= 1 << v
        stages.append((hintlist, hintmask))
        stages.append((hintlist, None))
    stages.append((list(range(g.n)), None))
    for cand, keep in stages:
        w = _search_subdivision_stage(g, kind, sizes, cand, keep, b)
        if w is not None:
            return w
        if b.exhausted:
            raise BudgetExhausted(
                f"subdivision search for {_pattern_name(kind, sizes)} used {b.used} nodes"
            )
    return None


# ---------------------------------------------------------------------------
# Independent witness checking.


def verify_witness(g: LabeledGraph, w: PatternWitness) -> tuple[bool, list[str]]:
    """Re-check a witness against the host graph; independent of the searchers."""
    problems: list[str] = []
    if len(set(w.vertices)) != len(w.vertices):
        problems.append("mapped vertices are not distinct")
    if any(not (0 <= v < g.n) for v in w.vertices):
        problems.append("mapped vertex out of range")
        return False, problems

    if w.kind == "induced":
        k, edges = _pattern_edges(w.pattern)
        if len(w.vertices) != k:
            problems.append("wrong number of mapped vertices")
        else:
            for i in range(k):
                for j in range(i + 1, k):
                    want = (i, j) in edges or (j, i) in edges
                    have = g.has_edge(w.vertices[i], w.vertices[j])
                    if want != have:
                        problems.append(
                            f"pattern pair ({i},{j}) adjacency mismatch"
                        )
        return not problems, problems

    if w.kind == "subdivision":
        kind, sizes = parse_subdivision_pattern(w.pattern)
        expect_edges = subdivision_pattern_edges(kind, sizes)
        if w.pattern_edges != expect_edges:
            problems.append("pattern edge order mismatch")
        if len(w.paths) != len(expect_edges):
            problems.append("wrong number of paths")
            return False, problems
        branch = set(w.vertices)
        seen_internal: set[int] = set()
        for (a, bv), path in zip(w.pattern_edges, w.paths):
            if len(path) < 2:
                problems.append("path too short")
                continue
            if path[0] != w.vertices[a] or path[-1] != w.vertices[bv]:
                problems.append(f"path for edge ({a},{bv}) has wrong endpoints")
            for x, y in zip(path, path[1:]):
                if not g.has_edge(x, y):
                    problems.append(f"path step ({x},{y}) is not a host edge")
            inner = path[1:-1]
            if len(set(inner)) != len(inner):
                problems.append("path repeats a vertex")
            for v in inner:
                if v in branch:
                    problems.append(f"path runs through branch vertex {v}")
                if v in seen_internal:
                    problems.append(f"paths share internal vertex {v}")
                seen_internal.add(v)
        return not problems, problems

    problems.append(f"unknown witness kind {w.kind!r}")
    return False, problems
