"""Family enumeration, theorem verification, and the results ledger.

``verify`` walks an enumerated family of rings, builds each prime ideal
sum graph, compares every shape-based prediction against direct
computation, and reports pass / fail / inconclusive per ring.  Budget
exhaustion never fails a row unless the computed interval excludes the
prediction.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .classifier import (
    CROSSCAP_0,
    CROSSCAP_2,
    CROSSCAP_GE3,
    GENUS_0,
    GENUS_1,
    GENUS_GE2,
    NO,
    YES,
    PredictedProfile,
    classify,
)
from .errors import BudgetExhausted, CorruptLedger
from .patterns import (
    find_subdivision,
    is_cactus,
    is_cograph,
    is_split,
    is_threshold,
    is_unicyclic,
)
from .pis_graph import LabeledGraph, build_pis, graph_stats, with_apex
from .ring_model import (
    IdealLattice,
    RingSpec,
    canonical_key,
    factor_digests,
    lattice_from_config,
    product_ring,
    shape_summary,
)
from .surface import (
    STATUS_COMPLETE,
    SurfaceCertificate,
    crosscap_of,
    euler_lower_bounds,
    genus_exact,
    genus_of,
)


@dataclass(frozen=True)
class FamilyConfig:
    """Which factor templates to combine and how hard to search."""

    templates: tuple[dict, ...] = (
        {"family": "field"},
        {"family": "chain", "k": 1},
        {"family": "chain", "k": 2},
        {"family": "chain", "k": 3},
        {"family": "twogen_flat", "q": 2},
        {"family": "twogen_xy", "q": 2},
    )
    n_max: int = 4
    max_vertices: int = 30
    genus_budget: int = 300_000
    crosscap_budget: int = 300_000
    subdivision_budget: int = 2_000_000
    planarity_budget: int = 2_000_000

    def __post_init__(self):
        if self.n_max < 2:
            raise ValueError("n_max must be at least 2")
        if self.max_vertices < 2:
            raise ValueError("vertex cap must be at least 2")
        for b in (
            self.genus_budget,
            self.crosscap_budget,
            self.subdivision_budget,
            self.planarity_budget,
        ):
            if b <= 0:
                raise ValueError("budgets must be positive")

    @staticmethod
    def from_json(data: dict) -> "FamilyConfig":
        kwargs = {}
        if "templates" in data:
            kwargs["templates"] = tuple(data["templates"])
        for key in (
            "n_max",
            "max_vertices",
            "genus_budget",
            "crosscap_budget",
            "subdivision_budget",
            "planarity_budget",
        ):
            if key in data:
                kwargs[key] = int(data[key])
        return FamilyConfig(**kwargs)


def enumerate_family(cfg: FamilyConfig) -> Iterator[RingSpec]:
    """All multisets of allowed templates with 2 <= n <= n_max under the
    vertex cap, deduplicated up to factor permutation, canonical order."""
    lattices = [lattice_from_config(t) for t in cfg.templates]
    seen: set[tuple[str, ...]] = set()
    for n in range(2, cfg.n_max + 1):
        for combo in itertools.combinations_with_replacement(range(len(lattices)), n):
            factors = [lattices[i] for i in combo]
            count = 1
            for f in factors:
                count *= f.size
            if count - 2 > cfg.max_vertices:
                continue
            ring = product_ring(factors)
            key = tuple(sorted(factor_digests(ring)))
            if key in seen:
                continue
            seen.add(key)
            yield ring


# ---------------------------------------------------------------------------
# Direct planarity / outerplanarity, each decided two independent ways.


def decide_planarity(
    g: LabeledGraph, search_budget: int, subdivision_budget: int
) -> tuple[bool | None, dict]:
    """Planarity via genus-0 search per component, cross-checked against
    Kuratowski subdivision search.  None when neither route concludes."""
    from .surface.search import is_planar_by_embedding

    by_search: bool | None = True
    for comp in g.components():
        sub = g.subgraph(comp)
        verdict = is_planar_by_embedding(sub, budget=search_budget)
        if verdict is False:
            by_search = False
            break
        if verdict is None:
            by_search = None
            break
    by_subdivision: bool | None
    try:
        w5 = find_subdivision(g, "K5", budget=subdivision_budget)
        w33 = None if w5 is not None else find_subdivision(g, "K33", budget=subdivision_budget)
        by_subdivision = w5 is None and w33 is None
        witness = w5 or w33
    except BudgetExhausted:
        by_subdivision = None
        witness = None
    detail = {
        "by_search": by_search,
        "by_subdivision": by_subdivision,
        "kuratowski": witness.to_json(g) if witness else None,
        "agreement": (
            None
            if by_search is None or by_subdivision is None
            else by_search == by_subdivision
        ),
    }
    verdict = by_search if by_search is not None else by_subdivision
    return verdict, detail


def decide_outerplanarity(
    g: LabeledGraph, search_budget: int, subdivision_budget: int
) -> tuple[bool | None, dict]:
    """Outerplanarity via forbidden K4/K2,3 subdivisions, cross-checked by
    planarity of the graph plus a universal apex vertex."""
    try:
        w4 = find_subdivision(g, "K4", budget=subdivision_budget)
        w23 = None if w4 is not None else find_subdivision(g, "K23", budget=subdivision_budget)
        by_subdivision: bool | None = w4 is None and w23 is None
        witness = w4 or w23
    except BudgetExhausted:
        by_subdivision = None
        witness = None
    apex = with_apex(g)
    apex_verdict, _ = decide_planarity(apex, search_budget, subdivision_budget)
    detail = {
        "by_subdivision": by_subdivision,
        "by_apex_planarity": apex_verdict,
        "forbidden": witness.to_json(g) if witness else None,
        "agreement": (
            None
            if by_subdivision is None or apex_verdict is None
            else by_subdivision == apex_verdict
        ),
    }
    verdict = by_subdivision if by_subdivision is not None else apex_verdict
    return verdict, detail


# ---------------------------------------------------------------------------
# Row comparison.

# Value classes: either a single value or a closed-below ray.
_CLASS_RANGES = {
    GENUS_0: (0, 0),
    GENUS_1: (1, 1),
    GENUS_GE2: (2, None),
    CROSSCAP_2: (2, 2),
    CROSSCAP_GE3: (3, None),
}


def _interval_verdict(predicted_class: str, lo: int, hi: int | None) -> str:
    """pass / fail / inconclusive for an interval against a value class.

    pass when the interval sits inside the class, fail when it excludes it,
    inconclusive otherwise.
    """
    c_lo, c_hi = _CLASS_RANGES[predicted_class]
    top = hi if hi is not None else None
    # Intersection emptiness.
    if (top is not None and top < c_lo) or (c_hi is not None and lo > c_hi):
        return "fail"
    # Containment of the interval in the class.
    if lo >= c_lo and (c_hi is None or (top is not None and top <= c_hi)):
        return "pass"
    return "inconclusive"


@dataclass
class RingRow:
    key: str
    name: str
    shape: str
    vertices: int
    edges: int
    predicted: dict
    computed: dict
    matches: dict
    verdict: str
    crosscap_one_seen: bool
    elapsed: float

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "name": self.name,
            "shape": self.shape,
            "vertices": self.vertices,
            "edges": self.edges,
            "predicted": self.predicted,
            "computed": self.computed,
            "matches": self.matches,
            "verdict": self.verdict,
            "crosscap_one_seen": self.crosscap_one_seen,
            "elapsed": self.elapsed,
        }


@dataclass
class VerificationReport:
    rows: list[RingRow]
    config: FamilyConfig

    @property
    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "inconclusive": 0}
        for r in self.rows:
            out[r.verdict] += 1
        return out

    @property
    def failures(self) -> list[RingRow]:
        return [r for r in self.rows if r.verdict == "fail"]

    def to_json(self) -> dict:
        return {
            "rows": [r.to_json() for r in self.rows],
            "summary": self.counts,
        }

    def summary_table(self) -> str:
        lines = [
            f"{'ring':34} {'v':>3} {'e':>4} {'verdict':12} mismatches",
            "-" * 72,
        ]
        for r in self.rows:
            bad = ",".join(k for k, v in r.matches.items() if v == "fail") or "-"
            lines.append(
                f"{r.name:34} {r.vertices:>3} {r.edges:>4} {r.verdict:12} {bad}"
            )
        c = self.counts
        lines.append("-" * 72)
        lines.append(
            f"pass {c['pass']}  fail {c['fail']}  inconclusive {c['inconclusive']}"
        )
        return "\n".join(lines)


def _shape_text(ring: RingSpec) -> str:
    parts = []
    for f in ring.factors:
        parts.append(
            f"(field)" if f.is_field else f"(count={f.nontrivial_count},chain={f.is_chain})"
        )
    return "x".join(parts)


def _boolean_match(predicted: str, computed: bool | None) -> str:
    if computed is None:
        return "inconclusive"
    if (predicted == YES) == computed:
        return "pass"
    return "fail"


def verify_ring(ring: RingSpec, cfg: FamilyConfig, ledger_path: str | None = None) -> RingRow:
    """Build, compute, predict and compare one ring."""
    t0 = time.perf_counter()
    key = canonical_key(ring)
    shape = shape_summary(ring)
    profile = classify(shape)
    g = build_pis(ring)
    stats = graph_stats(g)

    split_ok, split_witness = is_split(g)
    computed: dict = {
        "split": split_ok,
        "threshold": is_threshold(g),
        "cograph": is_cograph(g),
        "cactus": is_cactus(g),
        "unicyclic": is_unicyclic(g),
    }
    planar, planar_detail = decide_planarity(
        g, cfg.planarity_budget, cfg.subdivision_budget
    )
    outer, outer_detail = decide_outerplanarity(
        g, cfg.planarity_budget, cfg.subdivision_budget
    )
    computed["planar"] = planar
    computed["outerplanar"] = outer

    matches = {
        "split": _boolean_match(profile.split, computed["split"]),
        "threshold": _boolean_match(profile.threshold, computed["threshold"]),
        "cograph": _boolean_match(profile.cograph, computed["cograph"]),
        "cactus": _boolean_match(profile.cactus, computed["cactus"]),
        "unicyclic": _boolean_match(profile.unicyclic, computed["unicyclic"]),
        "planar": _boolean_match(profile.planar, planar),
        "outerplanar": _boolean_match(profile.outerplanar, outer),
    }
    for name, detail in (("planar", planar_detail), ("outerplanar", outer_detail)):
        if detail["agreement"] is False:
            matches[name] = "fail"

    crosscap_one_seen = False
    genus_json = crosscap_json = None
    if g.is_connected:
        # When Euler counting alone already places the graph inside the
        # predicted open-ended class, skip the embedding search; the
        # interval stays honest and the row cannot fail.
        glb, clb = euler_lower_bounds(g) if g.edge_count else (0, 0)

        def euler_cert(invariant: str, lo: int) -> SurfaceCertificate:
            return SurfaceCertificate(
                invariant=invariant,
                kind="euler_bound",
                lo=lo,
                hi=None,
                status=STATUS_COMPLETE,
                witness={"euler": lo, "refuted_below": lo},
            )

        if profile.genus_class == GENUS_GE2 and glb >= 2:
            gcert = euler_cert("genus", glb)
        else:
            gcert = _cached_certificate(
                ledger_path,
                key,
                "genus",
                cfg.genus_budget,
                lambda: genus_of(g, cfg.genus_budget),
            )
        if profile.crosscap_class == CROSSCAP_GE3 and clb >= 2:
            ccert = euler_cert("crosscap", clb)
        else:
            ccert = _cached_certificate(
                ledger_path,
                key,
                "crosscap",
                cfg.crosscap_budget,
                lambda: crosscap_of(g, cfg.crosscap_budget),
            )
        genus_json = gcert.to_json()
        crosscap_json = ccert.to_json()
        matches["genus_class"] = _interval_verdict(
            profile.genus_class, gcert.lo, gcert.hi
        )
        matches["crosscap_class"] = _interval_verdict(
            profile.crosscap_class, ccert.lo, ccert.hi
        )
        if ccert.exact and ccert.value == 1:
            crosscap_one_seen = True
            matches["crosscap_class"] = "fail"
    else:
        # Genus adds over components; crosscap composition over components is
        # out of scope, except that planar graphs have crosscap zero.
        total = 0
        parts = []
        exact = True
        for comp in g.components():
            c = genus_of(g.subgraph(comp), cfg.genus_budget)
            parts.append(c.to_json())
            total += c.lo
            exact = exact and c.exact
        genus_json = {"per_component_sum": total, "exact": exact, "parts": parts}
        matches["genus_class"] = (
            _interval_verdict(profile.genus_class, total, total if exact else None)
        )
        if planar is True:
            crosscap_json = {"value": 0, "rule": "planar, disconnected"}
            matches["crosscap_class"] = (
                "pass" if profile.crosscap_class == CROSSCAP_0 else "fail"
            )
        else:
            crosscap_json = {"value": None, "rule": "disconnected: out of scope"}
            matches["crosscap_class"] = "inconclusive"

    computed["genus"] = genus_json
    computed["crosscap"] = crosscap_json
    computed["planarity_detail"] = planar_detail
    computed["outerplanarity_detail"] = outer_detail
    if split_witness is not None:
        computed["split_witness"] = split_witness.to_json(g)

    if any(v == "fail" for v in matches.values()):
        verdict = "fail"
    elif any(v == "inconclusive" for v in matches.values()):
        verdict = "inconclusive"
    else:
        verdict = "pass"

    return RingRow(
        key=key,
        name=ring.name,
        shape=_shape_text(ring),
        vertices=stats.vertices,
        edges=stats.edges,
        predicted=profile.to_json(),
        computed=computed,
        matches=matches,
        verdict=verdict,
        crosscap_one_seen=crosscap_one_seen,
        elapsed=time.perf_counter() - t0,
    )


def verify(cfg: FamilyConfig, ledger_path: str | None = None) -> VerificationReport:
    rows = [verify_ring(ring, cfg, ledger_path) for ring in enumerate_family(cfg)]
    return VerificationReport(rows=rows, config=cfg)


# ---------------------------------------------------------------------------
# Append-only JSONL ledger keyed by canonical ring key and budget.


def ledger_append(path: str, row: dict) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(row, sort_keys=True) + "\n")


def ledger_lookup(path: str, key: str, invariant: str | None = None) -> dict | None:
    """Best (largest budget) stored row for a key; malformed lines are
    reported once with their line number and skipped."""
    best: dict | None = None
    bad: list[int] = []
    try:
        fh = open(path, "r", encoding="utf-8")
    except FileNotFoundError:
        return None
    with fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError:
                bad.append(lineno)
                continue
            if row.get("key") != key:
                continue
            if invariant is not None and row.get("invariant") != invariant:
                continue
            if best is None or row.get("budget", 0) > best.get("budget", 0):
                best = row
    if bad:
        import sys

        print(
            f"ledger {path}: skipped malformed lines {bad}",
            file=sys.stderr,
        )
    return best


def _cached_certificate(
    ledger_path: str | None,
    key: str,
    invariant: str,
    budget: int,
    compute,
) -> SurfaceCertificate:
    if ledger_path:
        row = ledger_lookup(ledger_path, key, invariant)
        if row is not None:
            cert = SurfaceCertificate.from_json(row["certificate"])
            if cert.exact or row.get("budget", 0) >= budget:
                return cert
    cert = compute()
    if ledger_path:
        ledger_append(
            ledger_path,
            {
                "key": key,
                "invariant": invariant,
                "budget": budget,
                "certificate": cert.to_json(),
                "time": time.time(),
            },
        )
    return cert
