"""Exact embedding search: formula agreement, certificates, budgets."""

import random

import pytest

from pisgraph.errors import Disconnected
from pisgraph.pis_graph import (
    build_pis,
    complete_bipartite,
    complete_graph,
    graph_from_edges,
)
from pisgraph.surface import verify_certificate
from pisgraph.surface.certificates import STATUS_BUDGET, SurfaceCertificate
from pisgraph.surface.search import (
    crosscap_exact,
    genus_exact,
    is_planar_by_embedding,
)


class TestGenusSearch:
    @pytest.mark.parametrize(
        "n,expect", [(3, 0), (4, 0), (5, 1), (6, 1)]
    )
    def test_complete_graphs(self, n, expect):
        g = complete_graph(n)
        cert = genus_exact(g, budget=2_000_000)
        assert cert.exact and cert.value == expect
        assert verify_certificate(g, cert)[0]

    @pytest.mark.parametrize(
        "m,n,expect", [(2, 3, 0), (3, 3, 1), (3, 4, 1), (4, 4, 1), (5, 4, 2)]
    )
    def test_bipartite(self, m, n, expect):
        g = complete_bipartite(m, n)
        cert = genus_exact(g, budget=5_000_000)
        assert cert.exact and cert.value == expect
        assert verify_certificate(g, cert)[0]

    def test_chain1_two_fields_is_toroidal(self, rings):
        g = build_pis(rings["c1FF"])
        cert = genus_exact(g, budget=5_000_000)
        assert cert.exact and cert.value == 1
        assert verify_certificate(g, cert)[0]

    def test_budget_interval(self):
        g = complete_bipartite(5, 5)
        cert = genus_exact(g, budget=120)
        assert not cert.exact
        assert cert.status == STATUS_BUDGET
        assert cert.lo >= 3  # Euler bound survives even a dead search
        assert cert.hi is not None and cert.hi >= cert.lo
        assert verify_certificate(g, cert)[0]

    def test_deterministic(self):
        g = complete_graph(6)
        a = genus_exact(g, budget=1_000_000)
        b = genus_exact(g, budget=1_000_000)
        assert a == b

    def test_disconnected_rejected(self):
        g = graph_from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(Disconnected):
            genus_exact(g)

    def test_edge_monotone_spot_check(self):
        rng = random.Random(3)
        for _ in range(6):
            n = rng.randint(5, 7)
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.55
            ]
            g = graph_from_edges(n, edges)
            if not g.is_connected:
                continue
            missing = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if not g.has_edge(i, j)
            ]
            if not missing:
                continue
            bigger = graph_from_edges(n, edges + [missing[0]])
            a = genus_exact(g, budget=2_000_000)
            b = genus_exact(bigger, budget=2_000_000)
            if a.exact and b.exact:
                assert b.value >= a.value


class TestCrosscapSearch:
    @pytest.mark.parametrize("n,expect", [(3, 0), (4, 0), (5, 1), (6, 1)])
    def test_complete_graphs(self, n, expect):
        g = complete_graph(n)
        cert = crosscap_exact(g, budget=2_000_000)
        assert cert.exact and cert.value == expect
        assert verify_certificate(g, cert)[0]

    @pytest.mark.parametrize(
        "m,n,expect", [(2, 4, 0), (3, 3, 1), (3, 4, 1), (3, 5, 2), (4, 4, 2)]
    )
    def test_bipartite(self, m, n, expect):
        g = complete_bipartite(m, n)
        cert = crosscap_exact(g, budget=5_000_000)
        assert cert.exact and cert.value == expect
        assert verify_certificate(g, cert)[0]

    def test_k5_projective_face_count(self):
        # crosscap 1 for K5 forces six faces in the witness
        g = complete_graph(5)
        cert = crosscap_exact(g, budget=2_000_000)
        assert cert.value == 1
        assert cert.witness["faces"] == 6

    def test_k33_projective_face_count(self):
        g = complete_bipartite(3, 3)
        cert = crosscap_exact(g, budget=2_000_000)
        assert cert.value == 1
        assert cert.witness["faces"] == 4

    def test_nonorientability_of_witness(self):
        from pisgraph.surface.rotations import (
            SignedRotationSystem,
            is_orientable_signature,
        )

        g = complete_graph(6)
        cert = crosscap_exact(g, budget=2_000_000)
        srot = SignedRotationSystem.from_json(
            g, {"rotation": cert.witness["rotation"], "signs": cert.witness["signs"]}
        )
        assert not is_orientable_signature(g, srot.signs)

    def test_deterministic(self):
        g = complete_bipartite(3, 4)
        assert crosscap_exact(g, budget=1_000_000) == crosscap_exact(
            g, budget=1_000_000
        )


class TestPlanarityHelper:
    def test_planar_cases(self, rings):
        assert is_planar_by_embedding(complete_graph(4)) is True
        assert is_planar_by_embedding(build_pis(rings["FFF"])) is True
        assert is_planar_by_embedding(build_pis(rings["Fc2"])) is True

    def test_nonplanar_cases(self, rings):
        assert is_planar_by_embedding(complete_graph(5)) is False
        assert is_planar_by_embedding(complete_bipartite(3, 3)) is False
        assert is_planar_by_embedding(build_pis(rings["c1FF"])) is False


class TestCertificates:
    def test_round_trip(self):
        g = complete_graph(5)
        cert = genus_exact(g, budget=1_000_000)
        again = SurfaceCertificate.from_json(cert.to_json())
        assert again == cert
        assert verify_certificate(g, again)[0]

    def test_tampered_certificate_caught(self):
        g = complete_graph(5)
        cert = genus_exact(g, budget=1_000_000)
        data = cert.to_json()
        data["lo"] = data["hi"] = 0  # claim planarity with a torus witness
        bad = SurfaceCertificate.from_json(data)
        ok, problems = verify_certificate(g, bad)
        assert not ok and problems

    def test_tampered_faces_caught(self):
        g = complete_graph(5)
        cert = crosscap_exact(g, budget=1_000_000)
        data = cert.to_json()
        data["witness"]["faces"] += 1
        bad = SurfaceCertificate.from_json(data)
        ok, problems = verify_certificate(g, bad)
        assert not ok
