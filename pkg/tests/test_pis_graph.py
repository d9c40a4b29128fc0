"""Graph construction against an independent combinatorial oracle."""

import itertools

import pytest

from pisgraph.errors import LocalRing
from pisgraph.pis_graph import (
    build_pis,
    complete_bipartite,
    complete_graph,
    export_dot,
    graph_from_edges,
    graph_stats,
    parse_edge_list,
)
from pisgraph.ring_model import make_builtin, product_ring, validate_lattice


def support_model_edges(n):
    """For a product of n fields, ideals are support sets S and I ~ J iff
    |S union T| = n - 1.  Completely independent of the join machinery."""
    subsets = []
    for r in range(1, n):
        subsets.extend(itertools.combinations(range(n), r))
    subsets.sort(key=lambda s: tuple(1 if i in s else 0 for i in range(n)))
    edges = set()
    for i, s in enumerate(subsets):
        for j in range(i + 1, len(subsets)):
            if len(set(s) | set(subsets[j])) == n - 1:
                edges.add((i, j))
    return len(subsets), edges


class TestBuild:
    def test_null_graph_two_fields(self, rings):
        g = build_pis(rings["FF"])
        assert g.n == 2 and g.edge_count == 0

    def test_four_fields_counts(self, rings):
        g = build_pis(rings["FFFF"])
        assert g.n == 14 and g.edge_count == 48

    def test_triangle_plus_pendant(self, rings):
        g = build_pis(rings["Fc1"])
        assert g.n == 4 and g.edge_count == 4
        stats = graph_stats(g)
        assert stats.girth == 3
        assert stats.degree_sequence == (3, 2, 2, 1)
        # pendant is the whole-second-factor ideal attached at (0,M)
        pend = g.labels.index("(0,R)")
        assert g.degree(pend) == 1
        assert g.neighbors(pend) == [g.labels.index("(0,M)")]

    def test_local_ring_rejected(self, lat):
        with pytest.raises(LocalRing):
            build_pis(product_ring([lat["c2"]]))

    def test_against_support_oracle(self, lat):
        for n in (2, 3, 4, 5):
            ring = product_ring([lat["F"]] * n)
            g = build_pis(ring)
            vn, edges = support_model_edges(n)
            assert g.n == vn
            assert set(g.edge_list) == edges

    def test_adjacency_symmetric_irreflexive(self, lat):
        for factors in [
            [lat["F"]] * 4,
            [lat["c2"], lat["c1"]],
            [lat["tf2"], lat["F"]],
            [lat["c1"], lat["c1"], lat["F"]],
        ]:
            g = build_pis(product_ring(factors))
            assert g.n <= 200
            for u in range(g.n):
                assert not g.has_edge(u, u)
                for v in range(g.n):
                    assert g.has_edge(u, v) == g.has_edge(v, u)

    def test_edge_count_label_invariant(self, lat):
        base = build_pis(product_ring([lat["c1"], lat["F"]]))
        renamed = validate_lattice(
            "renamed", ["bottom", "mid", "top"], [[max(i, j) for j in range(3)] for i in range(3)], 1
        )
        other = build_pis(product_ring([renamed, lat["F"]]))
        assert base.edge_count == other.edge_count
        assert base.degree_sequence() == other.degree_sequence()


class TestStats:
    def test_null_graph_stats(self, rings):
        s = graph_stats(build_pis(rings["FF"]))
        assert s.vertices == 2 and s.edges == 0 and s.components == 2
        assert s.girth is None

    def test_three_fields_stats(self, rings):
        s = graph_stats(build_pis(rings["FFF"]))
        assert (s.vertices, s.edges, s.girth, s.components) == (6, 9, 3, 1)

    def test_girth_on_known_graphs(self):
        assert graph_stats(complete_bipartite(3, 3)).girth == 4
        assert graph_stats(complete_graph(4)).girth == 3
        path = graph_from_edges(3, [(0, 1), (1, 2)])
        assert graph_stats(path).girth is None
        c5 = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        assert graph_stats(c5).girth == 5


class TestExport:
    def test_dot_line_counts(self, rings):
        g0 = build_pis(rings["FF"])
        text = export_dot(g0)
        lines = [l for l in text.splitlines() if l.strip().endswith(";")]
        node_lines = [l for l in lines if "--" not in l]
        edge_lines = [l for l in lines if "--" in l]
        assert len(node_lines) == 2 and len(edge_lines) == 0

        tri = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
        edge_lines = [l for l in export_dot(tri).splitlines() if "--" in l]
        assert len(edge_lines) == 3

        g3 = build_pis(rings["FFF"])
        edge_lines = [l for l in export_dot(g3).splitlines() if "--" in l]
        assert len(edge_lines) == 9

    def test_dot_deterministic(self, rings):
        g = build_pis(rings["FFFF"])
        assert export_dot(g) == export_dot(g)


class TestEdgeListIO:
    def test_parse(self):
        g = parse_edge_list("0 1\n1 2\n\n# comment\n2 0\n")
        assert g.n == 3 and g.edge_count == 3

    def test_bad_line(self):
        with pytest.raises(ValueError):
            parse_edge_list("0 1 2")

    def test_subgraph(self):
        g = complete_graph(5)
        h = g.subgraph([0, 2, 4])
        assert h.n == 3 and h.edge_count == 3
        assert h.labels == ("v0", "v2", "v4")
