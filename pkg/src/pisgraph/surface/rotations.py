"""Combinatorial embeddings: rotation systems, edge signs, face tracing.

A rotation system fixes a cyclic order of edge ends at every vertex and
determines a 2-cell embedding in an orientable surface; tracing the faces
recovers f and the genus through v - e + f = 2 - 2g.  Adding a sign per
edge encodes non-orientable embeddings, with v - e + f = 2 - k.

These tracers are the reference implementation used to verify certificates;
the embedding search keeps its own specialised copy.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import Disconnected, MalformedRotation
from ..pis_graph import LabeledGraph


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex cyclic order of incident edges, given by neighbour index."""

    order: tuple[tuple[int, ...], ...]

    def to_json(self, g: LabeledGraph) -> dict:
        return {
            g.labels[v]: [g.labels[w] for w in nbrs]
            for v, nbrs in enumerate(self.order)
        }

    @staticmethod
    def from_json(g: LabeledGraph, data: dict) -> "RotationSystem":
        idx = {lab: i for i, lab in enumerate(g.labels)}
        order = [()] * g.n
        for lab, nbrs in data.items():
            order[idx[lab]] = tuple(idx[w] for w in nbrs)
        return RotationSystem(order=tuple(order))


@dataclass(frozen=True)
class SignedRotationSystem:
    """Rotation system plus a +1/-1 sign per edge of g.edge_list."""

    rotation: RotationSystem
    signs: tuple[int, ...]

    def to_json(self, g: LabeledGraph) -> dict:
        return {
            "rotation": self.rotation.to_json(g),
            "signs": {
                f"{g.labels[u]}~{g.labels[v]}": s
                for (u, v), s in zip(g.edge_list, self.signs)
            },
        }

    @staticmethod
    def from_json(g: LabeledGraph, data: dict) -> "SignedRotationSystem":
        rot = RotationSystem.from_json(g, data["rotation"])
        idx = {lab: i for i, lab in enumerate(g.labels)}
        by_edge = {}
        for key, s in data["signs"].items():
            a, b = key.split("~")
            u, v = sorted((idx[a], idx[b]))
            by_edge[(u, v)] = int(s)
        signs = tuple(by_edge[e] for e in g.edge_list)
        return SignedRotationSystem(rotation=rot, signs=signs)


def canonical_rotation(g: LabeledGraph) -> RotationSystem:
    """Neighbours in increasing index order at every vertex."""
    return RotationSystem(order=tuple(tuple(g.neighbors(v)) for v in range(g.n)))


def validate_rotation(g: LabeledGraph, rot: RotationSystem) -> None:
    if len(rot.order) != g.n:
        raise MalformedRotation("rotation must list every vertex")
    for v in range(g.n):
        nbrs = rot.order[v]
        if sorted(nbrs) != g.neighbors(v):
            raise MalformedRotation(
                f"rotation at vertex {v} is not a cyclic order of its neighbours"
            )


def _dart_tables(g: LabeledGraph, rot: RotationSystem):
    # Dart 2i is u->v and 2i+1 is v->u for edge i = (u, v).
    eidx = {}
    for i, (u, v) in enumerate(g.edge_list):
        eidx[(u, v)] = 2 * i
        eidx[(v, u)] = 2 * i + 1
    m = g.edge_count
    rot_next = [0] * (2 * m)
    rot_prev = [0] * (2 * m)
    tail = [0] * (2 * m)
    for v in range(g.n):
        darts = [eidx[(v, w)] for w in rot.order[v]]
        for a, b in zip(darts, darts[1:] + darts[:1]):
            rot_next[a] = b
            rot_prev[b] = a
        for d in darts:
            tail[d] = v
    return rot_next, rot_prev, tail


def trace_faces(
    g: LabeledGraph, rot: RotationSystem
) -> tuple[int, tuple[tuple[tuple[int, int], ...], ...]]:
    """Faces of the orientable embedding: count and boundary walks.

    Walks are reported as dart sequences (u, v).  Requires g connected.
    """
    if not g.is_connected:
        raise Disconnected("face tracing needs a connected graph")
    validate_rotation(g, rot)
    m = g.edge_count
    if m == 0:
        return 1, ((),)
    rot_next, _rot_prev, _tail = _dart_tables(g, rot)
    edges = g.edge_list
    seen = [False] * (2 * m)
    walks = []
    for d0 in range(2 * m):
        if seen[d0]:
            continue
        walk = []
        d = d0
        while not seen[d]:
            seen[d] = True
            e = edges[d >> 1]
            walk.append(e if d & 1 == 0 else (e[1], e[0]))
            d = rot_next[d ^ 1]
        walks.append(tuple(walk))
    return len(walks), tuple(walks)


def genus_of_rotation(g: LabeledGraph, rot: RotationSystem) -> int:
    f, _ = trace_faces(g, rot)
    euler = g.n - g.edge_count + f
    if euler % 2 != 0 or euler > 2:
        raise MalformedRotation(f"impossible Euler characteristic {euler}")
    return (2 - euler) // 2


def is_orientable_signature(g: LabeledGraph, signs: tuple[int, ...]) -> bool:
    """A sign vector is orientable iff every cycle has positive sign product.

    Checked by spanning-tree potentials; disconnected graphs are handled
    per component.
    """
    if len(signs) != g.edge_count:
        raise MalformedRotation("one sign per edge required")
    sgn = {}
    for (u, v), s in zip(g.edge_list, signs):
        if s not in (1, -1):
            raise MalformedRotation("signs must be +1 or -1")
        sgn[(u, v)] = s
        sgn[(v, u)] = s
    pot = [0] * g.n
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        pot[root] = 1
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    pot[w] = pot[u] * sgn[(u, w)]
                    stack.append(w)
    for (u, v), s in zip(g.edge_list, signs):
        if pot[u] * pot[v] != s:
            return False
    return True


def trace_faces_signed(
    g: LabeledGraph, srot: SignedRotationSystem
) -> tuple[int, bool]:
    """Face count of a signed embedding and its orientability flag.

    States are (dart, side); crossing a negative edge flips the side.  A
    face is one state orbit together with its mirror image, so the count
    identifies each orbit with its reverse traversal.
    """
    if not g.is_connected:
        raise Disconnected("face tracing needs a connected graph")
    validate_rotation(g, srot.rotation)
    if len(srot.signs) != g.edge_count:
        raise MalformedRotation("one sign per edge required")
    for s in srot.signs:
        if s not in (1, -1):
            raise MalformedRotation("signs must be +1 or -1")
    m = g.edge_count
    if m == 0:
        return 1, True
    rot_next, rot_prev, _tail = _dart_tables(g, srot.rotation)
    neg = [1 if s == -1 else 0 for s in srot.signs]

    def step(state: int) -> int:
        d, s = state >> 1, state & 1
        s2 = s ^ neg[d >> 1]
        r = d ^ 1
        nd = rot_next[r] if s2 == 0 else rot_prev[r]
        return nd << 1 | s2

    def mirror(state: int) -> int:
        d, s = state >> 1, state & 1
        return (d ^ 1) << 1 | (s ^ neg[d >> 1] ^ 1)

    seen = [False] * (4 * m)
    faces = 0
    for x0 in range(4 * m):
        if seen[x0]:
            continue
        counts = not seen[mirror(x0)]
        if counts:
            faces += 1
        x = x0
        while not seen[x]:
            seen[x] = True
            x = step(x)
    return faces, is_orientable_signature(g, srot.signs)


def crosscap_of_signed(g: LabeledGraph, srot: SignedRotationSystem) -> int:
    """Euler deficiency 2 - v + e - f of the signed embedding."""
    f, _ = trace_faces_signed(g, srot)
    k = 2 - g.n + g.edge_count - f
    if k < 0:
        raise MalformedRotation(f"impossible Euler characteristic (k = {k})")
    return k
