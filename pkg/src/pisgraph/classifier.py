"""Shape-based classification of prime ideal sum graphs.

Each predicate decides one classification rule from the ring's shape alone
(per-factor: field?, nontrivial ideal count, chain?), order-insensitively.
The rules pin down graph-class membership and the genus/crosscap category;
the verification harness checks every prediction against direct
computation on the built graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ring_model import RingShape

YES = "yes"
NO = "no"
NOT_COVERED = "not_covered"

GENUS_0 = "0"
GENUS_1 = "1"
GENUS_GE2 = "ge2"

CROSSCAP_0 = "0"
CROSSCAP_2 = "2"
CROSSCAP_GE3 = "ge3"


def _counts(shape: RingShape) -> list[int]:
    return sorted(f.nontrivial_count for f in shape.factors)


def _is_all_fields(shape: RingShape) -> bool:
    return all(f.is_field for f in shape.factors)


def _field_plus_one(shape: RingShape, max_count: int | None = None) -> bool:
    """n = 2, one factor a field, the other a non-field (count cap optional)."""
    if shape.n != 2:
        return False
    a, b = shape.factors
    if a.is_field == b.is_field:
        return False
    other = b if a.is_field else a
    if max_count is not None and other.nontrivial_count != max_count:
        return False
    return True


def predict_split(shape: RingShape) -> str:
    """Split iff three fields, or two factors with at most one nontrivial
    ideal on the non-field side."""
    if shape.n == 3 and _is_all_fields(shape):
        return YES
    if shape.n == 2:
        if _is_all_fields(shape):
            return YES
        if _field_plus_one(shape, max_count=1):
            return YES
    return NO


def predict_threshold_cograph(shape: RingShape) -> str:
    """Threshold and cograph coincide: two fields, or field x (one ideal)."""
    if shape.n == 2 and (_is_all_fields(shape) or _field_plus_one(shape, max_count=1)):
        return YES
    return NO


def predict_cactus(shape: RingShape) -> str:
    """Cactus iff field x (one nontrivial ideal); two fields give a null
    graph on two vertices, which is disconnected."""
    if shape.n == 2 and _field_plus_one(shape, max_count=1):
        return YES
    return NO


def predict_unicyclic(shape: RingShape) -> str:
    return predict_cactus(shape)


def predict_planar(shape: RingShape) -> str:
    """Planar iff: three fields; two fields; both factors with exactly one
    nontrivial ideal; or a field times a chain (principal) factor."""
    if shape.n == 3 and _is_all_fields(shape):
        return YES
    if shape.n == 2:
        a, b = shape.factors
        if _is_all_fields(shape):
            return YES
        if a.nontrivial_count == 1 and b.nontrivial_count == 1:
            return YES
        if a.is_field != b.is_field:
            other = b if a.is_field else a
            if other.is_chain:
                return YES
    return NO


def predict_outerplanar(shape: RingShape) -> str:
    """Outerplanar iff three fields, two fields, or field x (one ideal)."""
    if shape.n == 3 and _is_all_fields(shape):
        return YES
    if shape.n == 2 and (_is_all_fields(shape) or _field_plus_one(shape, max_count=1)):
        return YES
    return NO


def _genus_one_shape(shape: RingShape) -> bool:
    if shape.n == 3:
        counts = sorted(
            (f.nontrivial_count, f.is_chain) for f in shape.factors
        )
        return counts == [(0, True), (0, True), (1, True)]
    if shape.n == 2:
        a, b = shape.factors
        pair = sorted(
            ((a.nontrivial_count, a.is_chain), (b.nontrivial_count, b.is_chain))
        )
        return pair == [(1, True), (2, True)]
    return False


def predict_genus_class(shape: RingShape) -> tuple[str, tuple[str, ...]]:
    """Genus category with notes: 0 iff planar, 1 for the two toroidal
    shapes, at least 2 otherwise (at least 3 once n >= 5)."""
    notes: tuple[str, ...] = ()
    if predict_planar(shape) == YES:
        return GENUS_0, notes
    if _genus_one_shape(shape):
        return GENUS_1, notes
    if shape.n >= 5:
        notes = ("genus is at least 3 for five or more factors",)
    return GENUS_GE2, notes


def predict_crosscap_class(shape: RingShape) -> str:
    """Crosscap category: 0 iff planar, 2 for the two toroidal shapes,
    at least 3 otherwise; the value 1 is impossible."""
    if predict_planar(shape) == YES:
        return CROSSCAP_0
    if _genus_one_shape(shape):
        return CROSSCAP_2
    return CROSSCAP_GE3


# Rule tags attached to each decided field, for report traceability.
_RULES = {
    "split": ("split:three-fields-or-two-factor-small",),
    "threshold": ("threshold-cograph:two-factor-small",),
    "cograph": ("threshold-cograph:two-factor-small",),
    "cactus": ("cactus:field-times-one-ideal",),
    "unicyclic": ("unicyclic:field-times-one-ideal",),
    "planar": ("planar:four-shapes",),
    "outerplanar": ("outerplanar:three-shapes",),
    "genus_class": ("genus:planar-or-toroidal-shapes", "genus:lower-bound-n5"),
    "crosscap_class": ("crosscap:never-projective", "crosscap:two-for-toroidal-shapes"),
}


@dataclass(frozen=True)
class PredictedProfile:
    split: str
    threshold: str
    cograph: str
    cactus: str
    unicyclic: str
    planar: str
    outerplanar: str
    genus_class: str
    crosscap_class: str
    citations: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "split": self.split,
            "threshold": self.threshold,
            "cograph": self.cograph,
            "cactus": self.cactus,
            "unicyclic": self.unicyclic,
            "planar": self.planar,
            "outerplanar": self.outerplanar,
            "genus_class": self.genus_class,
            "crosscap_class": self.crosscap_class,
            "citations": self.citations,
            "notes": list(self.notes),
        }


def classify(shape: RingShape) -> PredictedProfile:
    """Full predicted profile for a non-local ring shape (n >= 2)."""
    if shape.n < 2:
        raise ValueError("classification addresses products of n >= 2 local rings")
    genus_class, notes = predict_genus_class(shape)
    profile = PredictedProfile(
        split=predict_split(shape),
        threshold=predict_threshold_cograph(shape),
        cograph=predict_threshold_cograph(shape),
        cactus=predict_cactus(shape),
        unicyclic=predict_unicyclic(shape),
        planar=predict_planar(shape),
        outerplanar=predict_outerplanar(shape),
        genus_class=genus_class,
        crosscap_class=predict_crosscap_class(shape),
        citations={k: list(v) for k, v in _RULES.items()},
        notes=notes,
    )
    _check_profile(profile)
    return profile


def _check_profile(p: PredictedProfile) -> None:
    # Internal consistency of the predicted profile.
    assert p.crosscap_class in (CROSSCAP_0, CROSSCAP_2, CROSSCAP_GE3)
    if p.threshold == YES:
        assert p.split == YES and p.cograph == YES
    if p.unicyclic == YES:
        assert p.cactus == YES
    if p.outerplanar == YES:
        assert p.planar == YES
    assert (p.planar == YES) == (p.genus_class == GENUS_0)
    assert (p.planar == YES) == (p.crosscap_class == CROSSCAP_0)
