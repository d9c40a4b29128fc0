"""Surface certificates: embeddings, counting bounds, and block compositions.

A certificate either pins an exact genus/crosscap value (backed by a
re-traceable embedding) or brackets it in an interval whose lower end comes
from Euler counting, refuted search levels, subdivision witnesses or block
arithmetic, and whose upper end comes from a concrete embedding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ..pis_graph import LabeledGraph
from .rotations import (
    RotationSystem,
    SignedRotationSystem,
    crosscap_of_signed,
    genus_of_rotation,
    is_orientable_signature,
    trace_faces,
    trace_faces_signed,
)

KIND_EMBEDDING = "embedding"
KIND_EULER = "euler_bound"
KIND_SUBDIVISION = "subdivision_bound"
KIND_BLOCKS = "block_composition"

STATUS_COMPLETE = "complete"
STATUS_BUDGET = "budget_exhausted"


@dataclass(frozen=True)
class SurfaceCertificate:
    """Genus or crosscap statement about one graph.

    ``lo`` and ``hi`` bracket the value; ``lo == hi`` is a point statement.
    ``witness`` carries the re-checkable payload for the certificate kind.
    """

    invariant: str  # "genus" | "crosscap"
    kind: str
    lo: int
    hi: int | None
    status: str
    witness: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    @property
    def value(self) -> int | None:
        return self.lo if self.exact else None

    def to_json(self) -> dict:
        return {
            "invariant": self.invariant,
            "kind": self.kind,
            "lo": self.lo,
            "hi": self.hi,
            "status": self.status,
            "witness": self.witness,
        }

    @staticmethod
    def from_json(data: dict) -> "SurfaceCertificate":
        return SurfaceCertificate(
            invariant=data["invariant"],
            kind=data["kind"],
            lo=int(data["lo"]),
            hi=None if data["hi"] is None else int(data["hi"]),
            status=data["status"],
            witness=data.get("witness", {}),
        )


def embedding_payload(
    g: LabeledGraph,
    rotation: RotationSystem,
    signs: tuple[int, ...] | None,
    faces: int,
) -> dict:
    payload = {
        "vertices": g.n,
        "edges": g.edge_count,
        "faces": faces,
        "rotation": rotation.to_json(g),
    }
    if signs is not None:
        payload["signs"] = SignedRotationSystem(rotation, signs).to_json(g)["signs"]
    return payload


def _double_cover_faces(
    g: LabeledGraph, srot: SignedRotationSystem
) -> tuple[int, int, int]:
    """Faces of the orientable double cover of a signed embedding.

    Sheet copies (v, 0) and (v, 1); a negative edge crosses sheets and the
    second sheet carries the reversed rotation.  Faces are traced with the
    plain orientable tracer, making this check independent of the signed
    tracing rule.
    """
    from ..pis_graph import graph_from_edges

    n = g.n
    sgn = {}
    for (u, v), s in zip(g.edge_list, srot.signs):
        sgn[(u, v)] = s
        sgn[(v, u)] = s
    edges2 = []
    for (u, v), s in zip(g.edge_list, srot.signs):
        if s == 1:
            edges2.append((u, v))
            edges2.append((u + n, v + n))
        else:
            edges2.append((u, v + n))
            edges2.append((u + n, v))
    labels2 = [f"{lab}#0" for lab in g.labels] + [f"{lab}#1" for lab in g.labels]
    g2 = graph_from_edges(labels2, edges2)
    order2 = []
    for sheet in (0, 1):
        for v in range(n):
            base = srot.rotation.order[v]
            seq = base if sheet == 0 else tuple(reversed(base))
            order2.append(
                tuple(
                    w + n * (sheet ^ (1 if sgn[(v, w)] == -1 else 0)) for w in seq
                )
            )
    rot2 = RotationSystem(order=tuple(order2))
    if g2.is_connected:
        f2, _ = trace_faces(g2, rot2)
    else:
        # Orientable signature: the cover is two disjoint copies; trace each.
        f2 = 0
        for comp in g2.components():
            sub = g2.subgraph(comp)
            pos = {lab: i for i, lab in enumerate(sub.labels)}
            back = [g2.index_of(lab) for lab in sub.labels]
            sub_rot = RotationSystem(
                order=tuple(
                    tuple(pos[g2.labels[w]] for w in rot2.order[v]) for v in back
                )
            )
            fc, _ = trace_faces(sub, sub_rot)
            f2 += fc
    return f2, g2.n, g2.edge_count


def _verify_embedding(g: LabeledGraph, cert: SurfaceCertificate, problems: list[str]) -> None:
    w = cert.witness
    rot = RotationSystem.from_json(g, w["rotation"])
    claimed_f = w["faces"]
    if cert.invariant == "genus":
        f, _ = trace_faces(g, rot)
        if f != claimed_f:
            problems.append(f"face count mismatch: traced {f}, claimed {claimed_f}")
        genus = (2 - g.n + g.edge_count - f) // 2
        if (2 - g.n + g.edge_count - f) % 2 != 0:
            problems.append("Euler identity violated for an orientable embedding")
        hi = cert.hi if cert.hi is not None else genus
        if genus != hi:
            problems.append(f"embedding genus {genus} does not match bound {hi}")
    else:
        srot = SignedRotationSystem.from_json(
            g, {"rotation": w["rotation"], "signs": w["signs"]}
        )
        f, orientable = trace_faces_signed(g, srot)
        if f != claimed_f:
            problems.append(f"face count mismatch: traced {f}, claimed {claimed_f}")
        k = 2 - g.n + g.edge_count - f
        hi = cert.hi if cert.hi is not None else k
        if k != hi:
            problems.append(f"embedding crosscap {k} does not match bound {hi}")
        if k >= 1 and orientable:
            problems.append("claimed non-orientable embedding has orientable signs")
        # Cross-check through the orientable double cover: its Euler
        # characteristic must be exactly twice the base one.
        f2, v2, e2 = _double_cover_faces(g, srot)
        if v2 - e2 + f2 != 2 * (g.n - g.edge_count + f):
            problems.append("double cover Euler characteristic mismatch")


def verify_certificate(
    g: LabeledGraph, cert: SurfaceCertificate
) -> tuple[bool, list[str]]:
    """Independently re-check a certificate against its graph.

    Embeddings are re-traced; counting bounds are recomputed; block
    compositions are verified recursively (blocks are re-derived from g).
    """
    from .bounds import euler_lower_bounds
    from .blocks import blocks as block_decomposition

    problems: list[str] = []
    if cert.hi is not None and cert.lo > cert.hi:
        problems.append("empty interval")

    if cert.kind == KIND_EMBEDDING:
        _verify_embedding(g, cert, problems)
    elif cert.kind == KIND_EULER:
        glb, clb = euler_lower_bounds(g)
        base = glb if cert.invariant == "genus" else clb
        refuted = cert.witness.get("refuted_below", 0)
        if cert.lo > max(base, refuted):
            problems.append(
                f"lower bound {cert.lo} exceeds counting bound {base} "
                f"and refuted level {refuted}"
            )
        ub = cert.witness.get("upper_embedding")
        if cert.hi is not None:
            if not ub:
                problems.append("finite upper bound without an embedding witness")
            else:
                sub = SurfaceCertificate(
                    invariant=cert.invariant,
                    kind=KIND_EMBEDDING,
                    lo=cert.hi,
                    hi=cert.hi,
                    status=STATUS_COMPLETE,
                    witness=ub,
                )
                ok, hows = verify_certificate(g, sub)
                if not ok:
                    problems.extend("upper embedding: " + h for h in hows)
    elif cert.kind == KIND_SUBDIVISION:
        from .. import patterns as patmod
        from .bounds import (
            formula_crosscap_bipartite,
            formula_crosscap_complete,
            formula_genus_bipartite,
            formula_genus_complete,
        )

        wdata = cert.witness["pattern_witness"]
        witness = patmod.PatternWitness(
            kind="subdivision",
            pattern=wdata["pattern"],
            vertices=tuple(g.index_of(l) for l in wdata["vertices"]),
            pattern_edges=tuple(tuple(e["edge"]) for e in wdata["paths"]),
            paths=tuple(
                tuple(g.index_of(l) for l in e["path"]) for e in wdata["paths"]
            ),
        )
        ok, hows = patmod.verify_witness(g, witness)
        if not ok:
            problems.extend(hows)
        kind, sizes = patmod.parse_subdivision_pattern(wdata["pattern"])
        if cert.invariant == "genus":
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
        if cert.lo > val:
            problems.append(f"lower bound {cert.lo} exceeds pattern value {val}")
    elif cert.kind == KIND_BLOCKS:
        blks = block_decomposition(g)
        sub = cert.witness.get("blocks", [])
        if len(sub) != len(blks):
            problems.append(
                f"certificate has {len(sub)} blocks, graph has {len(blks)}"
            )
        else:
            for b, entry in zip(blks, sub):
                for key in ("genus", "crosscap"):
                    if key in entry:
                        c = SurfaceCertificate.from_json(entry[key])
                        ok, hows = verify_certificate(b, c)
                        if not ok:
                            problems.extend(f"block {key}: " + h for h in hows)
            arith = cert.witness.get("arithmetic")
            if arith and arith.get("value") is not None and cert.exact:
                if arith["value"] != cert.lo:
                    problems.append("block arithmetic does not match the value")
    else:
        problems.append(f"unknown certificate kind {cert.kind!r}")
    return not problems, problems
