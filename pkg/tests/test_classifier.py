"""Shape-based predictions against the classification rules."""

import random

import pytest

from pisgraph.classifier import (
    CROSSCAP_0,
    CROSSCAP_2,
    CROSSCAP_GE3,
    GENUS_0,
    GENUS_1,
    GENUS_GE2,
    NO,
    YES,
    classify,
    predict_crosscap_class,
    predict_genus_class,
    predict_planar,
    predict_split,
)
from pisgraph.ring_model import FactorShape, RingShape, product_ring, shape_summary


def shape_of(*factors):
    return RingShape(factors=tuple(factors))


FIELD = FactorShape(True, 0, True)


def chain(k):
    return FactorShape(False, k, True)


def twogen_flat():
    return FactorShape(False, 4, False)


class TestSplit:
    def test_three_fields(self):
        assert predict_split(shape_of(FIELD, FIELD, FIELD)) == YES

    def test_two_chains(self):
        assert predict_split(shape_of(chain(1), chain(1))) == NO

    def test_field_chain1(self):
        assert predict_split(shape_of(FIELD, chain(1))) == YES

    def test_four_factors(self):
        assert predict_split(shape_of(FIELD, FIELD, FIELD, FIELD)) == NO

    def test_field_chain2(self):
        assert predict_split(shape_of(FIELD, chain(2))) == NO


class TestThresholdCograph:
    def test_examples(self, lat):
        p = classify(shape_summary(product_ring([lat["F"], lat["F"]])))
        assert p.threshold == YES and p.cograph == YES
        p = classify(shape_summary(product_ring([lat["F"], lat["F"], lat["F"]])))
        assert p.cograph == NO
        p = classify(shape_summary(product_ring([lat["F"], lat["c2"]])))
        assert p.threshold == NO


class TestCactusUnicyclic:
    def test_examples(self):
        p = classify(shape_of(FIELD, chain(1)))
        assert p.cactus == YES and p.unicyclic == YES
        assert classify(shape_of(FIELD, FIELD)).cactus == NO
        assert classify(shape_of(chain(1), chain(1))).cactus == NO


class TestPlanar:
    def test_field_times_long_chain(self):
        assert predict_planar(shape_of(FIELD, chain(3))) == YES

    def test_two_one_ideal_factors(self):
        assert predict_planar(shape_of(chain(1), chain(1))) == YES

    def test_four_fields(self):
        assert predict_planar(shape_of(FIELD, FIELD, FIELD, FIELD)) == NO

    def test_field_times_twogen(self):
        assert predict_planar(shape_of(FIELD, twogen_flat())) == NO

    def test_outerplanar(self):
        p = classify(shape_of(FIELD, FIELD, FIELD))
        assert p.outerplanar == YES
        assert classify(shape_of(FIELD, chain(2))).outerplanar == NO
        assert classify(shape_of(chain(1), chain(1))).outerplanar == NO


class TestGenusCrosscap:
    def test_toroidal_shapes(self):
        assert predict_genus_class(shape_of(chain(1), FIELD, FIELD))[0] == GENUS_1
        assert predict_genus_class(shape_of(chain(2), chain(1)))[0] == GENUS_1

    def test_five_fields_with_note(self):
        cls, notes = predict_genus_class(shape_of(*([FIELD] * 5)))
        assert cls == GENUS_GE2
        assert notes  # carries the stronger bound remark

    def test_crosscap_classes(self):
        assert predict_crosscap_class(shape_of(chain(1), FIELD, FIELD)) == CROSSCAP_2
        assert predict_crosscap_class(shape_of(chain(2), chain(1))) == CROSSCAP_2
        assert predict_crosscap_class(shape_of(*([FIELD] * 4))) == CROSSCAP_GE3
        assert predict_crosscap_class(shape_of(FIELD, FIELD)) == CROSSCAP_0

    def test_crosscap_never_one(self):
        rng = random.Random(99)
        for _ in range(500):
            n = rng.randint(2, 6)
            factors = []
            for _ in range(n):
                if rng.random() < 0.4:
                    factors.append(FIELD)
                else:
                    c = rng.randint(1, 5)
                    factors.append(FactorShape(False, c, rng.random() < 0.7 or c == 1))
            cls = predict_crosscap_class(shape_of(*factors))
            assert cls in (CROSSCAP_0, CROSSCAP_2, CROSSCAP_GE3)


class TestProfileInvariants:
    def test_random_shapes_consistent(self):
        rng = random.Random(4242)
        for _ in range(500):
            n = rng.randint(2, 5)
            factors = []
            for _ in range(n):
                if rng.random() < 0.5:
                    factors.append(FIELD)
                else:
                    c = rng.randint(1, 4)
                    factors.append(FactorShape(False, c, rng.random() < 0.6 or c == 1))
            p = classify(shape_of(*factors))  # classify asserts its invariants
            if p.threshold == YES:
                assert p.split == YES and p.cograph == YES
            if p.unicyclic == YES:
                assert p.cactus == YES
            if p.outerplanar == YES:
                assert p.planar == YES
            assert (p.planar == YES) == (p.genus_class == GENUS_0)

    def test_local_ring_rejected(self):
        with pytest.raises(ValueError):
            classify(shape_of(FIELD))

    def test_json_round_trip_fields(self):
        p = classify(shape_of(FIELD, chain(1)))
        data = p.to_json()
        assert data["unicyclic"] == YES
        assert "citations" in data and data["citations"]["split"]
