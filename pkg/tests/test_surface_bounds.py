"""Closed-form formulas and Euler-count lower bounds."""

import pytest

from pisgraph.errors import OutOfRange
from pisgraph.pis_graph import (
    build_pis,
    complete_bipartite,
    complete_graph,
    graph_from_edges,
)
from pisgraph.surface.bounds import (
    euler_lower_bounds,
    formula_crosscap_bipartite,
    formula_crosscap_complete,
    formula_genus_bipartite,
    formula_genus_complete,
)


class TestFormulas:
    def test_genus_complete(self):
        assert [formula_genus_complete(n) for n in (3, 4, 5, 6, 7, 8)] == [
            0,
            0,
            1,
            1,
            1,
            2,
        ]

    def test_genus_bipartite(self):
        assert formula_genus_bipartite(3, 3) == 1
        assert formula_genus_bipartite(4, 4) == 1
        assert formula_genus_bipartite(5, 4) == 2
        assert formula_genus_bipartite(5, 5) == 3
        assert formula_genus_bipartite(2, 9) == 0

    def test_crosscap_complete(self):
        assert formula_crosscap_complete(5) == 1
        assert formula_crosscap_complete(6) == 1
        assert formula_crosscap_complete(7) == 3  # the exceptional case
        assert formula_crosscap_complete(8) == 4

    def test_crosscap_bipartite(self):
        assert formula_crosscap_bipartite(3, 3) == 1
        assert formula_crosscap_bipartite(3, 4) == 1
        assert formula_crosscap_bipartite(3, 5) == 2
        assert formula_crosscap_bipartite(4, 4) == 2
        assert formula_crosscap_bipartite(5, 5) == 5

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            formula_genus_complete(2)
        with pytest.raises(OutOfRange):
            formula_genus_bipartite(1, 4)
        with pytest.raises(OutOfRange):
            formula_crosscap_complete(1)
        with pytest.raises(OutOfRange):
            formula_crosscap_bipartite(2, 1)


class TestEulerBounds:
    def test_four_fields(self, rings):
        g = build_pis(rings["FFFF"])
        assert euler_lower_bounds(g) == (2, 3)

    def test_tree(self):
        tree = graph_from_edges(4, [(0, 1), (1, 2), (1, 3)])
        assert euler_lower_bounds(tree) == (0, 0)

    def test_small_complete_graphs(self):
        assert euler_lower_bounds(complete_graph(5)) == (1, 1)
        assert euler_lower_bounds(complete_graph(6)) == (1, 1)
        assert euler_lower_bounds(complete_graph(7)) == (1, 2)

    def test_bipartite_girth_four(self):
        assert euler_lower_bounds(complete_bipartite(3, 3)) == (1, 1)
        assert euler_lower_bounds(complete_bipartite(3, 5)) == (1, 2)
        assert euler_lower_bounds(complete_bipartite(5, 5)) == (3, 4)

    def test_bounds_never_exceed_truth(self):
        # every bound must sit at or below the known closed-form value
        for n in range(3, 8):
            glb, clb = euler_lower_bounds(complete_graph(n))
            assert glb <= formula_genus_complete(n)
            assert clb <= formula_crosscap_complete(n)
        for m in range(2, 6):
            for n in range(m, 6):
                glb, clb = euler_lower_bounds(complete_bipartite(m, n))
                assert glb <= formula_genus_bipartite(m, n)
                assert clb <= formula_crosscap_bipartite(m, n)

    def test_pendant_guard(self):
        # girth 5 with degree-1 vertices: the face bound must fall back to 3
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (0, 6)]
        g = graph_from_edges(7, edges)
        assert g.girth() == 5 and g.min_degree() == 1
        assert euler_lower_bounds(g) == (0, 0)

    def test_cycle_girth_used(self):
        c5 = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        assert euler_lower_bounds(c5) == (0, 0)
