"""Biconnected components (blocks) of a labelled graph.

Iterative Hopcroft-Tarjan; isolated vertices are dropped, bridges come out
as 2-vertex blocks.  Block order is deterministic: sorted by the tuple of
original vertex indices.
"""

from __future__ import annotations

from ..pis_graph import LabeledGraph


def block_vertex_sets(g: LabeledGraph) -> list[list[int]]:
    """Vertex sets of the biconnected components, in deterministic order."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    out: list[list[int]] = []
    timer = 0

    for root in range(n):
        if disc[root] != -1 or g.degree(root) == 0:
            continue
        stack = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(g.neighbors(v))))
                    advanced = True
                    break
                elif v != parent and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            pu = stack[-1][0]
            if low[u] < low[pu]:
                low[pu] = low[u]
            if low[u] >= disc[pu]:
                # (pu, u) closes a block: everything stacked above it.
                verts: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    verts.add(a)
                    verts.add(b)
                    if (a, b) == (pu, u):
                        break
                out.append(sorted(verts))
    out.sort()
    return out


def blocks(g: LabeledGraph) -> list[LabeledGraph]:
    """Blocks as labelled subgraphs (labels preserved from the host)."""
    return [g.subgraph(vs) for vs in block_vertex_sets(g)]
