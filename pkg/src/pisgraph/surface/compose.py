"""Genus and crosscap of whole graphs via block decomposition.

Genus adds up over blocks.  Crosscap follows the block rule: with blocks
B_1..B_k and mu(B) = max(2 - 2g(B), 2 - cr(B)), the crosscap is
1 - k + sum cr(B_i) when the graph is orientably simple (every block has
cr > 2g) and 2k - sum mu(B_i) otherwise.
"""

from __future__ import annotations

from ..errors import Disconnected
from ..pis_graph import LabeledGraph
from .blocks import blocks
from .bounds import (
    formula_crosscap_bipartite,
    formula_crosscap_complete,
    formula_genus_bipartite,
    formula_genus_complete,
)
from .certificates import (
    KIND_BLOCKS,
    KIND_SUBDIVISION,
    STATUS_BUDGET,
    STATUS_COMPLETE,
    SurfaceCertificate,
)
from .search import crosscap_exact, genus_exact


def mu_value(genus: int, crosscap: int) -> int:
    """mu = max(2 - 2g, 2 - cr); equals 2 minus the Euler genus."""
    return max(2 - 2 * genus, 2 - crosscap)


def is_orientably_simple(genus: int, crosscap: int) -> bool:
    """mu != 2 - cr, i.e. the crosscap exceeds twice the genus."""
    return mu_value(genus, crosscap) != 2 - crosscap


def genus_of(g: LabeledGraph, budget: int = 5_000_000) -> SurfaceCertificate:
    """Genus of a connected graph as the sum over its blocks."""
    if g.n > 0 and not g.is_connected:
        raise Disconnected("genus composition needs a connected graph")
    blks = blocks(g)
    if not blks:
        return SurfaceCertificate(
            invariant="genus",
            kind=KIND_BLOCKS,
            lo=0,
            hi=0,
            status=STATUS_COMPLETE,
            witness={"blocks": [], "arithmetic": {"value": 0, "rule": "empty"}},
        )
    certs = [genus_exact(b, budget) for b in blks]
    if len(certs) == 1:
        return certs[0]
    lo = sum(c.lo for c in certs)
    hi = None if any(c.hi is None for c in certs) else sum(c.hi for c in certs)
    exact = all(c.exact for c in certs)
    return SurfaceCertificate(
        invariant="genus",
        kind=KIND_BLOCKS,
        lo=lo,
        hi=hi,
        status=STATUS_COMPLETE if exact else STATUS_BUDGET,
        witness={
            "blocks": [
                {"vertices": list(b.labels), "genus": c.to_json()}
                for b, c in zip(blks, certs)
            ],
            "arithmetic": {"value": lo if exact else None, "rule": "sum"},
        },
    )


def crosscap_of(g: LabeledGraph, budget: int = 5_000_000) -> SurfaceCertificate:
    """Crosscap of a connected graph via the orientably-simple block rule."""
    if g.n > 0 and not g.is_connected:
        raise Disconnected("crosscap composition needs a connected graph")
    blks = blocks(g)
    if not blks:
        return SurfaceCertificate(
            invariant="crosscap",
            kind=KIND_BLOCKS,
            lo=0,
            hi=0,
            status=STATUS_COMPLETE,
            witness={"blocks": [], "arithmetic": {"value": 0, "rule": "empty"}},
        )
    gcerts = [genus_exact(b, budget) for b in blks]
    ccerts = [crosscap_exact(b, budget) for b in blks]
    if len(blks) == 1:
        return ccerts[0]
    k = len(blks)
    entries = []
    all_exact = True
    for b, gc, cc in zip(blks, gcerts, ccerts):
        entry: dict = {
            "vertices": list(b.labels),
            "genus": gc.to_json(),
            "crosscap": cc.to_json(),
        }
        if gc.exact and cc.exact:
            entry["mu"] = mu_value(gc.value, cc.value)
            entry["orientably_simple"] = is_orientably_simple(gc.value, cc.value)
        else:
            all_exact = False
        entries.append(entry)
    if all_exact:
        if all(e["orientably_simple"] for e in entries):
            value = 1 - k + sum(c.value for c in ccerts)
            rule = "orientably_simple"
        else:
            value = 2 * k - sum(e["mu"] for e in entries)
            rule = "not_orientably_simple"
        return SurfaceCertificate(
            invariant="crosscap",
            kind=KIND_BLOCKS,
            lo=value,
            hi=value,
            status=STATUS_COMPLETE,
            witness={
                "blocks": entries,
                "arithmetic": {"value": value, "rule": rule, "block_count": k},
            },
        )
    # Interval fallback: the Euler genus min(2g, cr) adds over blocks and the
    # crosscap is that sum or one more.
    lo = sum(min(2 * gc.lo, cc.lo) for gc, cc in zip(gcerts, ccerts))
    hi = None
    if all(gc.hi is not None and cc.hi is not None for gc, cc in zip(gcerts, ccerts)):
        hi = sum(min(2 * gc.hi, cc.hi) for gc, cc in zip(gcerts, ccerts)) + 1
    return SurfaceCertificate(
        invariant="crosscap",
        kind=KIND_BLOCKS,
        lo=lo,
        hi=hi,
        status=STATUS_BUDGET,
        witness={
            "blocks": entries,
            "arithmetic": {"value": None, "rule": "interval", "block_count": k},
        },
    )


def subdivision_lower_bound(
    g: LabeledGraph, witness, invariant: str
) -> SurfaceCertificate:
    """Bound from a found subdivision: the host inherits the pattern's value."""
    from ..patterns import parse_subdivision_pattern

    kind, sizes = parse_subdivision_pattern(witness.pattern)
    if invariant == "genus":
        val = (
            formula_genus_complete(*sizes)
            if kind == "complete"
            else formula_genus_bipartite(*sizes)
        )
    else:
        val = (
            formula_crosscap_complete(*sizes)
            if kind == "complete"
            else formula_crosscap_bipartite(*sizes)
        )
    return SurfaceCertificate(
        invariant=invariant,
        kind=KIND_SUBDIVISION,
        lo=val,
        hi=None,
        status=STATUS_COMPLETE,
        witness={"pattern_witness": witness.to_json(g)},
    )
