"""Exact genus and crosscap by backtracking over (signed) rotation systems.

The search inserts edges one at a time, vertex by vertex: each new vertex
is anchored to the built part, then all its back edges are placed before
the next vertex arrives.  After every insertion the faces of the partial
embedding are retraced; a branch dies when the face count can no longer
reach the target because each remaining back edge raises it by at most one
(anchor edges never change it).

Non-orientable search fixes anchor (spanning tree) edge signs to +1, so a
scheme is orientable exactly when every back edge stays positive; target
crosscap k >= 1 additionally requires a negative back edge.

The node budget counts insertion attempts, so results are reproducible
across machines.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import Disconnected
from ..pis_graph import LabeledGraph
from .bounds import euler_lower_bounds
from .certificates import (
    KIND_EMBEDDING,
    KIND_EULER,
    STATUS_BUDGET,
    STATUS_COMPLETE,
    SurfaceCertificate,
    embedding_payload,
)
from .rotations import RotationSystem, SignedRotationSystem, trace_faces, trace_faces_signed


class Budget:
    """Deterministic node-expansion budget shared across search levels."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = int(limit)
        self.used = 0

    def spend(self, amount: int = 1) -> bool:
        self.used += amount
        return self.used <= self.limit

    @property
    def exhausted(self) -> bool:
        return self.used > self.limit


@dataclass
class LevelOutcome:
    found: bool
    exhausted: bool
    rotation: RotationSystem | None = None
    signs: tuple[int, ...] | None = None
    faces: int = 0


def _vertex_order(g: LabeledGraph) -> list[int]:
    # Start at a maximum-degree vertex, then repeatedly take the vertex with
    # most edges into the placed set (ties by degree, then index).
    n = g.n
    placed: list[int] = []
    placed_set = 0
    remaining = set(range(n))
    first = max(range(n), key=lambda v: (g.degree(v), -v))
    placed.append(first)
    placed_set |= 1 << first
    remaining.discard(first)
    while remaining:
        best = min(
            remaining,
            key=lambda v: (-(g.adj[v] & placed_set).bit_count(), -g.degree(v), v),
        )
        placed.append(best)
        placed_set |= 1 << best
        remaining.discard(best)
    return placed


def _schedule(g: LabeledGraph, order: list[int]):
    # Steps: (w, u, is_anchor, edge_id).  Edge ids index g.edge_list.
    eid = {}
    for i, (u, v) in enumerate(g.edge_list):
        eid[(u, v)] = i
        eid[(v, u)] = i
    pos = {v: i for i, v in enumerate(order)}
    steps = []
    for i, w in enumerate(order[1:], start=1):
        targets = [u for u in order[:i] if g.has_edge(w, u)]
        for j, u in enumerate(targets):
            steps.append((w, u, j == 0, eid[(w, u)]))
    return steps


def search_embedding_level(
    g: LabeledGraph,
    faces_target: int,
    *,
    signed: bool,
    need_twist: bool,
    budget: Budget,
) -> LevelOutcome:
    """Search for an embedding with exactly ``faces_target`` faces.

    Exhaustive unless the budget dies (flagged in the outcome).  In signed
    mode anchor edges stay positive and ``need_twist`` demands at least one
    negative back edge.
    """
    if not g.is_connected:
        raise Disconnected("embedding search needs a connected graph")
    n = g.n
    m = g.edge_count
    if m == 0:
        ok = faces_target == 1 and not need_twist
        return LevelOutcome(
            found=ok,
            exhausted=False,
            rotation=RotationSystem(order=((),) * n) if ok else None,
            signs=() if ok else None,
            faces=1,
        )
    order = _vertex_order(g)
    steps = _schedule(g, order)
    edges = g.edge_list
    tail = [0] * (2 * m)
    for i, (u, v) in enumerate(edges):
        tail[2 * i] = u
        tail[2 * i + 1] = v

    rot_next = [0] * (2 * m)
    rot_prev = [0] * (2 * m)
    first_dart = [-1] * n
    cur_deg = [0] * n
    final_deg = [g.degree(v) for v in range(n)]
    neg = [0] * m
    placed_darts: list[int] = []
    back_total = m - (n - 1)
    remaining_back = [back_total]
    twists = [0]

    # Trace workspace: states are darts (orientable) or dart*2+side (signed).
    size = 4 * m if signed else 2 * m
    visited = [0] * size
    stamp = [0]
    vmask = [0] * n

    F = faces_target

    def gaps(v: int) -> list[int]:
        # Darts at v in rotation order; inserting after each is one gap.
        if cur_deg[v] == 0:
            return [-1]
        out = []
        d = first_dart[v]
        for _ in range(cur_deg[v]):
            out.append(d)
            d = rot_next[d]
        return out

    def insert(dart: int, after: int) -> None:
        v = tail[dart]
        if after == -1:
            rot_next[dart] = dart
            rot_prev[dart] = dart
            first_dart[v] = dart
        else:
            nxt = rot_next[after]
            rot_next[after] = dart
            rot_prev[dart] = after
            rot_next[dart] = nxt
            rot_prev[nxt] = dart
        cur_deg[v] += 1
        placed_darts.append(dart)

    def remove(dart: int) -> None:
        v = tail[dart]
        placed_darts.pop()
        cur_deg[v] -= 1
        if cur_deg[v] == 0:
            first_dart[v] = -1
        else:
            p = rot_prev[dart]
            nx = rot_next[dart]
            rot_next[p] = nx
            rot_prev[nx] = p
            if first_dart[v] == dart:
                first_dart[v] = nx

    def trace() -> tuple[int, bool]:
        # Returns (face count, dead_short_face).  Also fills vmask with a
        # face-incidence bitmask per placed vertex.
        stamp[0] += 1
        st = stamp[0]
        for v in range(n):
            vmask[v] = 0
        f = 0
        dead = False
        if not signed:
            for d0 in placed_darts:
                if visited[d0] == st:
                    continue
                bit = 1 << f
                f += 1
                length = 0
                future = False
                d = d0
                while visited[d] != st:
                    visited[d] = st
                    t = tail[d]
                    vmask[t] |= bit
                    if final_deg[t] != cur_deg[t]:
                        future = True
                    length += 1
                    d = rot_next[d ^ 1]
                if length <= 2 and not future and len(placed_darts) < 2 * m:
                    dead = True
            return f, dead
        for d0 in placed_darts:
            for s0 in (0, 1):
                x0 = d0 << 1 | s0
                if visited[x0] == st:
                    continue
                d0m = d0 ^ 1
                mir = (d0m << 1) | (s0 ^ neg[d0 >> 1] ^ 1)
                counts = visited[mir] != st
                bit = 0
                if counts:
                    bit = 1 << f
                    f += 1
                length = 0
                future = False
                x = x0
                while visited[x] != st:
                    visited[x] = st
                    d = x >> 1
                    s = x & 1
                    if counts:
                        t = tail[d]
                        vmask[t] |= bit
                        if final_deg[t] != cur_deg[t]:
                            future = True
                    length += 1
                    s2 = s ^ neg[d >> 1]
                    r = d ^ 1
                    nd = rot_next[r] if s2 == 0 else rot_prev[r]
                    x = nd << 1 | s2
                if counts and length <= 2 and not future and len(placed_darts) < 2 * m:
                    dead = True
        return f, dead

    def viable(f_cur: int, idx: int) -> bool:
        rem = remaining_back[0]
        max_f = f_cur + rem
        if max_f < F:
            return False
        if f_cur - rem > F:
            return False
        if not signed and (F - f_cur - rem) % 2 != 0:
            return False
        if signed and need_twist and rem == 0 and twists[0] == 0:
            return False
        slack = max_f - F
        if slack <= 1:
            # No merges left: every remaining back edge between two placed
            # vertices must already see a common face.
            for w2, u2, anchor2, _e2 in steps[idx + 1 :]:
                if anchor2:
                    break  # vertices after the next anchor are not placed yet
                if vmask[w2] and vmask[u2] and not (vmask[w2] & vmask[u2]):
                    return False
        return True

    outcome = LevelOutcome(found=False, exhausted=False)

    def snapshot() -> None:
        rot = []
        for v in range(n):
            nbrs = []
            if cur_deg[v]:
                d = first_dart[v]
                for _ in range(cur_deg[v]):
                    e = edges[d >> 1]
                    nbrs.append(e[1] if d & 1 == 0 else e[0])
                    d = rot_next[d]
            rot.append(tuple(nbrs))
        outcome.rotation = RotationSystem(order=tuple(rot))
        outcome.signs = tuple(-1 if neg[i] else 1 for i in range(m))

    def dfs(idx: int) -> bool:
        if budget.exhausted:
            return False
        if idx == len(steps):
            f, _ = trace()
            if f == F and (not need_twist or twists[0] > 0):
                outcome.found = True
                outcome.faces = f
                snapshot()
                return True
            return False
        w, u, anchor, e = steps[idx]
        dw = 2 * e if tail[2 * e] == w else 2 * e + 1
        du = dw ^ 1
        if anchor:
            for gu in gaps(u):
                if not budget.spend():
                    return False
                insert(du, gu)
                insert(dw, -1)
                f, dead = trace()
                if not dead and viable(f, idx):
                    if dfs(idx + 1):
                        return True
                remove(dw)
                remove(du)
                if budget.exhausted:
                    return False
            return False
        sign_options = (0, 1) if signed else (0,)
        remaining_back[0] -= 1
        for gw in gaps(w):
            for gu in gaps(u):
                for sgn in sign_options:
                    if not budget.spend():
                        remaining_back[0] += 1
                        return False
                    neg[e] = sgn
                    if sgn:
                        twists[0] += 1
                    insert(dw, gw)
                    insert(du, gu)
                    f, dead = trace()
                    if not dead and viable(f, idx):
                        if dfs(idx + 1):
                            remaining_back[0] += 1
                            return True
                    remove(du)
                    remove(dw)
                    if sgn:
                        twists[0] -= 1
                    neg[e] = 0
                    if budget.exhausted:
                        remaining_back[0] += 1
                        return False
        remaining_back[0] += 1
        return False

    found = dfs(0)
    outcome.exhausted = budget.exhausted and not found
    return outcome


def _any_embedding(g: LabeledGraph, crosscap: bool) -> tuple[int, dict]:
    """Cheap upper bound: trace a fixed rotation (one twist for crosscap)."""
    from .rotations import canonical_rotation

    rot = canonical_rotation(g)
    if not crosscap:
        f, _ = trace_faces(g, rot)
        value = (2 - g.n + g.edge_count - f) // 2
        return value, embedding_payload(g, rot, None, f)
    m = g.edge_count
    beta = m - g.n + 1
    if beta <= 0:
        f, _ = trace_faces(g, rot)
        return 0, embedding_payload(g, rot, (1,) * m, f)
    # Make one non-tree edge negative so the scheme is genuinely twisted.
    tree_edges = set()
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    eid = {e: i for i, e in enumerate(g.edge_list)}
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                tree_edges.add(eid[tuple(sorted((u, w)))])
                stack.append(w)
    signs = [1] * m
    for i in range(m):
        if i not in tree_edges:
            signs[i] = -1
            break
    srot = SignedRotationSystem(rot, tuple(signs))
    f, _ = trace_faces_signed(g, srot)
    k = 2 - g.n + g.edge_count - f
    return k, embedding_payload(g, rot, tuple(signs), f)


def _exact_search(
    g: LabeledGraph, budget_limit: int, crosscap: bool
) -> SurfaceCertificate:
    if not g.is_connected:
        raise Disconnected("exact search needs a connected graph")
    invariant = "crosscap" if crosscap else "genus"
    v, e = g.n, g.edge_count
    glb, clb = euler_lower_bounds(g)
    lb = clb if crosscap else glb
    beta = e - v + 1
    max_level = beta if crosscap else beta // 2
    budget = Budget(budget_limit)
    level = lb
    refuted_below = lb
    while level <= max_level:
        if crosscap:
            faces = 2 - level + e - v
            if level == 0:
                out = search_embedding_level(
                    g, faces, signed=False, need_twist=False, budget=budget
                )
            else:
                out = search_embedding_level(
                    g, faces, signed=True, need_twist=True, budget=budget
                )
        else:
            faces = 2 - 2 * level + e - v
            out = search_embedding_level(
                g, faces, signed=False, need_twist=False, budget=budget
            )
        if out.found:
            signs = out.signs if crosscap else None
            payload = embedding_payload(g, out.rotation, signs, out.faces)
            payload["nodes_used"] = budget.used
            payload["refuted_below"] = refuted_below
            return SurfaceCertificate(
                invariant=invariant,
                kind=KIND_EMBEDDING,
                lo=level,
                hi=level,
                status=STATUS_COMPLETE,
                witness=payload,
            )
        if out.exhausted:
            ub, ub_payload = _any_embedding(g, crosscap)
            return SurfaceCertificate(
                invariant=invariant,
                kind=KIND_EULER,
                lo=refuted_below,
                hi=ub,
                status=STATUS_BUDGET,
                witness={
                    "euler": lb,
                    "refuted_below": refuted_below,
                    "nodes_used": budget.used,
                    "upper_embedding": ub_payload,
                },
            )
        level += 1
        refuted_below = level
    raise AssertionError("iterative deepening passed the maximum possible level")


def genus_exact(g: LabeledGraph, budget: int = 5_000_000) -> SurfaceCertificate:
    """Exact orientable genus by iterative-deepening rotation search.

    Returns an embedding certificate at the minimum, or a bound interval
    when the budget dies first.
    """
    return _exact_search(g, budget, crosscap=False)


def is_planar_by_embedding(g: LabeledGraph, budget: int = 5_000_000) -> bool | None:
    """Planarity of one connected graph by a genus-0 embedding search.

    True/False when the single-level search concludes, None on budget
    exhaustion.  Cheaper than an exact genus computation because no higher
    level is ever explored.
    """
    if not g.is_connected:
        raise Disconnected("planarity search needs a connected graph")
    v, e = g.n, g.edge_count
    glb, _ = euler_lower_bounds(g)
    if glb > 0:
        return False
    if e > max(0, 3 * v - 6):
        return False
    b = Budget(budget)
    out = search_embedding_level(
        g, 2 + e - v, signed=False, need_twist=False, budget=b
    )
    if out.found:
        return True
    if out.exhausted:
        return None
    return False


def crosscap_exact(g: LabeledGraph, budget: int = 5_000_000) -> SurfaceCertificate:
    """Exact crosscap by iterative-deepening signed rotation search."""
    return _exact_search(g, budget, crosscap=True)
