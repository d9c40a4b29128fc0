"""Prime ideal sum graph construction, basic statistics, and export.

Vertices are the nonzero proper ideals of a product ring; two ideals are
adjacent when their sum is a prime ideal.  The graph type here is a small
immutable simple undirected graph with labelled vertices, shared by every
other module.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import LocalRing
from .ring_model import (
    RingSpec,
    enumerate_vertices,
    ideal_join,
    ideal_label,
    is_prime_ideal,
)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph; adjacency stored as one bitmask per vertex."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return tuple(out)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        out = []
        m = self.adj[u]
        v = 0
        while m:
            if m & 1:
                out.append(v)
            m >>= 1
            v += 1
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(u) for u in range(self.n)), reverse=True))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            stack = [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self.neighbors(u):
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    @property
    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def girth(self) -> int | None:
        """Length of a shortest cycle, or None for forests."""
        best: int | None = None
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            q = deque([s])
            while q:
                u = q.popleft()
                if best is not None and dist[u] * 2 >= best:
                    continue
                for v in self.neighbors(u):
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        q.append(v)
                    elif v != parent[u]:
                        cyc = dist[u] + dist[v] + 1
                        if best is None or cyc < best:
                            best = cyc
        return best

    def min_degree(self) -> int:
        return min((self.degree(u) for u in range(self.n)), default=0)

    def subgraph(self, keep: Sequence[int]) -> "LabeledGraph":
        keep = list(keep)
        pos = {v: i for i, v in enumerate(keep)}
        labels = tuple(self.labels[v] for v in keep)
        adj = []
        for v in keep:
            m = 0
            for w in self.neighbors(v):
                if w in pos:
                    m |= 1 << pos[w]
            adj.append(m)
        return LabeledGraph(labels=labels, adj=tuple(adj))

    def index_of(self, label: str) -> int:
        return self.labels.index(label)


def graph_from_edges(
    labels: Sequence[str] | int, edges: Iterable[tuple[int, int]]
) -> LabeledGraph:
    """Build a graph from vertex labels (or a vertex count) and an edge list."""
    if isinstance(labels, int):
        labels = tuple(f"v{i}" for i in range(labels))
    else:
        labels = tuple(labels)
    n = len(labels)
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("self-loops are not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return LabeledGraph(labels=labels, adj=tuple(adj))


def complete_graph(n: int) -> LabeledGraph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> LabeledGraph:
    labels = tuple(f"a{i}" for i in range(m)) + tuple(f"b{j}" for j in range(n))
    return graph_from_edges(labels, [(i, m + j) for i in range(m) for j in range(n)])


def with_apex(g: LabeledGraph) -> LabeledGraph:
    """Copy of g with one extra vertex adjacent to everything."""
    labels = g.labels + ("+apex",)
    edges = list(g.edge_list) + [(v, g.n) for v in range(g.n)]
    return graph_from_edges(labels, edges)


def parse_edge_list(text: str) -> LabeledGraph:
    """Graph from plain text, one ``u v`` pair of 0-based indices per line."""
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        top = max(top, u, v)
        edges.append((u, v))
    return graph_from_edges(top + 1, edges)


def build_pis(ring: RingSpec) -> LabeledGraph:
    """Prime ideal sum graph of a product ring.

    Vertices are the nonzero proper ideal tuples in lexicographic order;
    an edge joins two ideals whose sum is prime.
    """
    if ring.n < 2:
        raise LocalRing("prime ideal sum graphs are studied for n >= 2 factors")
    verts = enumerate_vertices(ring)
    labels = tuple(ideal_label(ring, t) for t in verts)
    n = len(verts)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if is_prime_ideal(ring, ideal_join(ring, verts[i], verts[j])):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return LabeledGraph(labels=labels, adj=tuple(adj))


@dataclass(frozen=True)
class GraphStats:
    vertices: int
    edges: int
    degree_sequence: tuple[int, ...]
    girth: int | None
    components: int

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "edges": self.edges,
            "degree_sequence": list(self.degree_sequence),
            "girth": self.girth,
            "components": self.components,
        }


def graph_stats(g: LabeledGraph) -> GraphStats:
    return GraphStats(
        vertices=g.n,
        edges=g.edge_count,
        degree_sequence=g.degree_sequence(),
        girth=g.girth(),
        components=len(g.components()),
    )


def export_dot(g: LabeledGraph) -> str:
    """Deterministic DOT text: vertices in enumeration order, edges sorted."""
    lines = ["graph pis {"]
    for label in g.labels:
        lines.append(f'  "{label}";')
    for u, v in g.edge_list:
        lines.append(f'  "{g.labels[u]}" -- "{g.labels[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
