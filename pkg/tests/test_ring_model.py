"""Ideal lattice validation, builtin families, products, joins, primes."""

import itertools
import json
import random

import pytest

from pisgraph.errors import (
    BadParameter,
    EmptyProduct,
    NotASemilattice,
    NotLocal,
    ShapeMismatch,
)
from pisgraph.ring_model import (
    canonical_key,
    enumerate_vertices,
    factor_digests,
    ideal_join,
    is_prime_ideal,
    lattice_from_config,
    lattice_to_config,
    load_ring,
    make_builtin,
    product_ring,
    ring_from_config,
    ring_to_config,
    shape_summary,
    validate_lattice,
)


def chain_join(t):
    return [[max(i, j) for j in range(t)] for i in range(t)]


class TestValidation:
    def test_chain_is_valid(self):
        lat = validate_lattice("chain", ["0", "M", "R"], chain_join(3), 1)
        assert lat.top == 2 and lat.is_chain

    def test_commutativity_violation(self):
        join = chain_join(3)
        join[1][2] = 1  # but join[2][1] stays 2
        with pytest.raises(NotASemilattice):
            validate_lattice("bad", ["0", "a", "R"], join, 1)

    def test_two_coatoms_not_local(self):
        # 0 < a, b < R with a + b = R: no unique maximal ideal covers both.
        join = [
            [0, 1, 2, 3],
            [1, 1, 3, 3],
            [2, 3, 2, 3],
            [3, 3, 3, 3],
        ]
        with pytest.raises(NotLocal):
            validate_lattice("bad", ["0", "a", "b", "R"], join, 1)

    def test_idempotence_violation(self):
        join = chain_join(3)
        join[1][1] = 2
        with pytest.raises(NotASemilattice):
            validate_lattice("bad", ["0", "a", "R"], join, 1)

    def test_associativity_checked_exhaustively(self):
        # Commutative and idempotent with neutral 0 / absorbing top, but not
        # associative: a+b = c, a+c = d(top) while b+c = c.
        join = [
            [0, 1, 2, 3, 4],
            [1, 1, 3, 3, 4],
            [2, 3, 2, 2, 4],
            [3, 3, 2, 3, 4],
            [4, 4, 4, 4, 4],
        ]
        with pytest.raises(NotASemilattice, match="associativity"):
            validate_lattice("bad", ["0", "a", "b", "c", "R"], join, 3)

    def test_field_must_designate_zero_maximal(self):
        with pytest.raises(NotLocal):
            validate_lattice("bad", ["0", "R"], chain_join(2), 1)


class TestBuiltins:
    def test_field(self):
        f = make_builtin("field")
        assert f.size == 2 and f.maximal == 0 and f.is_field

    def test_chain_sizes(self):
        assert make_builtin("chain", 1).size == 3
        assert make_builtin("chain", 1).nontrivial_count == 1
        assert make_builtin("chain", 4).size == 6

    def test_twogen_xy_two(self):
        lat = make_builtin("twogen_xy", 2)
        assert lat.size == 7
        assert set(lat.elements) == {"0", "xy", "x", "y", "x+y", "M", "R"}
        # the three line ideals join pairwise to M
        m = lat.elements.index("M")
        for a, b in itertools.combinations(("x", "y", "x+y"), 2):
            assert lat.join[lat.elements.index(a)][lat.elements.index(b)] == m
        xy = lat.elements.index("xy")
        assert lat.le(xy, lat.elements.index("x"))

    def test_twogen_flat_two(self):
        lat = make_builtin("twogen_flat", 2)
        assert lat.size == 6
        assert not lat.is_chain

    def test_bad_parameters(self):
        with pytest.raises(BadParameter):
            make_builtin("chain", -1)
        with pytest.raises(BadParameter):
            make_builtin("twogen_xy", 1)
        with pytest.raises(BadParameter):
            make_builtin("nonsense")


class TestProductAndVertices:
    def test_ideal_counts(self, lat):
        F = lat["F"]
        assert product_ring([F, F]).ideal_count == 4
        r4 = product_ring([F, F, F, F])
        assert r4.ideal_count == 16
        assert len(enumerate_vertices(r4)) == 14
        r = product_ring([lat["c1"], F, F])
        assert r.ideal_count == 12
        assert len(enumerate_vertices(r)) == 10

    def test_empty_product(self):
        with pytest.raises(EmptyProduct):
            product_ring([])

    def test_vertex_counts_and_order(self, lat, rings):
        assert len(enumerate_vertices(rings["FF"])) == 2
        assert len(enumerate_vertices(rings["FFF"])) == 6
        verts = enumerate_vertices(product_ring([lat["c2"], lat["c1"]]))
        assert len(verts) == 10
        assert verts == sorted(verts)  # lexicographic

    def test_vertex_count_formula(self, lat):
        # product of factor sizes minus the zero and whole-ring tuples
        for factors in [
            [lat["F"], lat["c2"]],
            [lat["tf2"], lat["F"]],
            [lat["c1"], lat["c1"], lat["F"]],
        ]:
            ring = product_ring(factors)
            expect = 1
            for f in factors:
                expect *= f.size
            assert len(enumerate_vertices(ring)) == expect - 2


class TestJoinAndPrime:
    def test_join_neutrality(self, rings):
        ring = rings["c2c1"]
        zero = (0, 0)
        for t in enumerate_vertices(ring):
            assert ideal_join(ring, t, zero) == t

    def test_join_examples(self, rings, lat):
        r3 = rings["FFF"]
        assert ideal_join(r3, (0, 1, 0), (1, 0, 0)) == (1, 1, 0)
        r21 = rings["c2c1"]
        # I1 < M in the chain factor
        assert ideal_join(r21, (1, 0), (2, 1)) == (2, 1)

    def test_join_shape_mismatch(self, rings):
        with pytest.raises(ShapeMismatch):
            ideal_join(rings["FFF"], (0, 1), (1, 0, 0))
        with pytest.raises(ShapeMismatch):
            ideal_join(rings["FF"], (0, 5), (1, 0))

    def test_prime_examples(self, rings, lat):
        r3 = rings["FFF"]
        assert is_prime_ideal(r3, (0, 1, 1))
        assert not is_prime_ideal(r3, (0, 0, 1))
        rc = product_ring([lat["c1"], lat["F"]])
        assert is_prime_ideal(rc, (1, 1))  # (M, R)
        assert not is_prime_ideal(rc, (2, 1))  # whole ring

    def test_prime_never_trivial(self, lat):
        for factors in [[lat["F"], lat["F"]], [lat["c2"], lat["c1"]], [lat["tf2"], lat["F"]]]:
            ring = product_ring(factors)
            zero = tuple(0 for _ in factors)
            whole = tuple(f.top for f in factors)
            assert not is_prime_ideal(ring, zero)
            assert not is_prime_ideal(ring, whole)

    def test_join_monotone(self, lat):
        rng = random.Random(7)
        ring = product_ring([lat["c2"], lat["tf2"]])
        verts = enumerate_vertices(ring)

        def le(a, b):
            return ideal_join(ring, a, b) == b

        for _ in range(300):
            a, b, c = (rng.choice(verts) for _ in range(3))
            if le(a, b):
                assert le(ideal_join(ring, a, c), ideal_join(ring, b, c))


class TestShapeSummary:
    def test_field_shape(self, lat):
        s = shape_summary(product_ring([lat["F"], lat["F"]]))
        assert all(f.is_field and f.nontrivial_count == 0 and f.is_chain for f in s.factors)

    def test_chain_shape(self, lat):
        s = shape_summary(product_ring([lat["c2"], lat["F"]]))
        assert s.factors[0].nontrivial_count == 2 and s.factors[0].is_chain

    def test_twogen_flat_count_by_brute_force(self, lat):
        # count the elements strictly between zero and the whole ring
        tf = lat["tf2"]
        nontrivial = [i for i in range(tf.size) if i not in (0, tf.top)]
        assert len(nontrivial) == 4
        s = shape_summary(product_ring([tf, lat["F"]]))
        assert s.factors[0].nontrivial_count == 4
        assert not s.factors[0].is_chain


class TestCanonicalKey:
    def test_label_independence(self, lat):
        a = validate_lattice("x", ["0", "M", "R"], chain_join(3), 1)
        b = validate_lattice("y", ["zero", "mid", "one"], chain_join(3), 1)
        assert canonical_key(product_ring([a])) == canonical_key(product_ring([b]))

    def test_structure_sensitivity(self, lat):
        k_ff = canonical_key(product_ring([lat["F"], lat["F"]]))
        k_c1 = canonical_key(product_ring([lat["c1"]]))
        assert k_ff != k_c1

    def test_order_sensitivity(self, lat):
        a = canonical_key(product_ring([lat["c1"], lat["F"]]))
        b = canonical_key(product_ring([lat["F"], lat["c1"]]))
        assert a != b
        # permutation-insensitive comparison goes through sorted digests
        da = sorted(factor_digests(product_ring([lat["c1"], lat["F"]])))
        db = sorted(factor_digests(product_ring([lat["F"], lat["c1"]])))
        assert da == db

    def test_middle_permutation_invariance(self):
        # same chain written with its middle elements listed in swapped
        # order must canonicalise to the same digest
        join_a = chain_join(4)
        a = validate_lattice("a", ["0", "p", "q", "R"], join_a, 2)
        # relabel indices 1 <-> 2
        perm = [0, 2, 1, 3]
        join_b = [[0] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(4):
                join_b[perm[i]][perm[j]] = perm[join_a[i][j]]
        b = validate_lattice("b", ["0", "q", "p", "R"], join_b, 1)
        assert factor_digests(product_ring([a])) == factor_digests(product_ring([b]))


class TestConfigIO:
    def test_round_trip(self, lat, tmp_path):
        ring = product_ring([lat["c2"], lat["tf2"], lat["F"]])
        cfg = ring_to_config(ring)
        again = ring_from_config(cfg)
        assert canonical_key(again) == canonical_key(ring)
        path = tmp_path / "ring.json"
        path.write_text(json.dumps(cfg))
        assert canonical_key(load_ring(str(path))) == canonical_key(ring)

    def test_custom_lattice(self):
        cfg = {
            "family": "custom",
            "elements": ["0", "M", "R"],
            "join": chain_join(3),
            "maximal": "M",
        }
        lat = lattice_from_config(cfg)
        assert lat.maximal == 1
        back = lattice_to_config(lat)
        assert back["family"] == "custom"
        assert lattice_from_config(back).join == lat.join

    def test_custom_rejects_bad_table(self):
        cfg = {
            "family": "custom",
            "elements": ["0", "a", "b", "R"],
            "join": [
                [0, 1, 2, 3],
                [1, 1, 3, 3],
                [2, 3, 2, 3],
                [3, 3, 3, 3],
            ],
            "maximal": "a",
        }
        with pytest.raises(NotLocal):
            lattice_from_config(cfg)
