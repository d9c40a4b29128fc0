"""Finite local rings abstracted as ideal join-semilattices, and their products.

A local ring enters the workbench only through the lattice of its ideals
under ideal sum (join), with the zero ideal at index 0, the whole ring at
the last index, and a designated maximal ideal.  A product ring is an
ordered list of such lattices; its ideals are coordinate tuples.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadIndex,
    BadParameter,
    EmptyProduct,
    NotASemilattice,
    NotLocal,
    ShapeMismatch,
)

IdealTuple = tuple[int, ...]


@dataclass(frozen=True)
class IdealLattice:
    """Join-semilattice of the ideals of a finite local ring.

    ``elements`` lists ideal labels with index 0 the zero ideal and the last
    index the whole ring.  ``join[i][j]`` is the index of the ideal sum.
    ``maximal`` is the index of the maximal ideal (0 for a field).
    """

    name: str
    elements: tuple[str, ...]
    join: tuple[tuple[int, ...], ...]
    maximal: int

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    @property
    def is_field(self) -> bool:
        return self.size == 2

    @property
    def nontrivial_count(self) -> int:
        return self.size - 2

    def le(self, i: int, j: int) -> bool:
        """Order induced by the join: i <= j iff i + j = j."""
        return self.join[i][j] == j

    @cached_property
    def is_chain(self) -> bool:
        """True iff the induced order is total (finite chain ring)."""
        t = self.size
        return all(
            self.le(i, j) or self.le(j, i)
            for i in range(t)
            for j in range(i + 1, t)
        )


def lattice_violations(
    elements: Sequence[str],
    join: Sequence[Sequence[int]],
    maximal: int,
) -> list[tuple[str, str]]:
    """Exhaustively check the lattice axioms.

    Returns a list of (category, message) pairs; empty means valid.
    Categories: ``index``, ``semilattice``, ``local``.
    """
    out: list[tuple[str, str]] = []
    t = len(elements)
    if t < 2:
        out.append(("index", "need at least the zero ideal and the whole ring"))
        return out
    if len(set(elements)) != t:
        out.append(("index", "element labels must be pairwise distinct"))
    if len(join) != t or any(len(row) != t for row in join):
        out.append(("index", f"join table must be {t}x{t}"))
        return out
    for i in range(t):
        for j in range(t):
            v = join[i][j]
            if not isinstance(v, int) or not (0 <= v < t):
                out.append(("index", f"join[{i}][{j}] = {v!r} out of range"))
                return out
    if not (0 <= maximal < t):
        out.append(("index", f"maximal index {maximal} out of range"))
        return out

    top = t - 1
    for i in range(t):
        if join[i][i] != i:
            out.append(("semilattice", f"idempotence fails at {i}"))
        if join[i][0] != i:
            out.append(("semilattice", f"zero is not neutral at {i}"))
        if join[i][top] != top:
            out.append(("semilattice", f"whole ring does not absorb {i}"))
        for j in range(i + 1, t):
            if join[i][j] != join[j][i]:
                out.append(("semilattice", f"commutativity fails at ({i},{j})"))
    for i in range(t):
        for j in range(t):
            for k in range(t):
                if join[i][join[j][k]] != join[join[i][j]][k]:
                    out.append(
                        ("semilattice", f"associativity fails at ({i},{j},{k})")
                    )
    if out:
        return out

    # Locality: every proper ideal lies below the maximal one.  A field is
    # the degenerate case with maximal = 0 and only {0, R}.
    if t == 2:
        if maximal != 0:
            out.append(("local", "a field must designate the zero ideal as maximal"))
    else:
        if maximal == top:
            out.append(("local", "the whole ring cannot be the maximal ideal"))
        else:
            for i in range(top):
                if join[i][maximal] != maximal:
                    out.append(
                        ("local", f"proper ideal {i} does not lie below maximal")
                    )
    return out


def validate_lattice(
    name: str,
    elements: Sequence[str],
    join: Sequence[Sequence[int]],
    maximal: int,
) -> IdealLattice:
    """Validate raw lattice data and freeze it into an IdealLattice.

    Raises BadIndex / NotASemilattice / NotLocal naming every violated axiom
    of the offending category.
    """
    violations = lattice_violations(elements, join, maximal)
    if violations:
        by_cat: dict[str, list[str]] = {}
        for cat, msg in violations:
            by_cat.setdefault(cat, []).append(msg)
        for cat, exc in (("index", BadIndex), ("semilattice", NotASemilattice), ("local", NotLocal)):
            if cat in by_cat:
                raise exc("; ".join(by_cat[cat]))
    return IdealLattice(
        name=name,
        elements=tuple(elements),
        join=tuple(tuple(row) for row in join),
        maximal=maximal,
    )


def _chain_lattice(k: int) -> IdealLattice:
    if k < 0:
        raise BadParameter(f"chain length must be >= 0, got {k}")
    if k == 0:
        labels = ["0", "R"]
    elif k == 1:
        labels = ["0", "M", "R"]
    else:
        labels = ["0"] + [f"I{i}" for i in range(1, k)] + ["M", "R"]
    t = len(labels)
    join = [[max(i, j) for j in range(t)] for i in range(t)]
    return validate_lattice(f"chain({k})", labels, join, max(k, 0) if k else 0)


def _twogen_lattice(q: int, with_square: bool) -> IdealLattice:
    # Local ring whose maximal ideal needs two generators x, y; the q + 1
    # "line" ideals <x>, <y>, <x + uy> are pairwise incomparable and join
    # to M.  with_square keeps the ideal <xy> below every line; without it
    # the square of M vanishes.
    if q < 2:
        raise BadParameter(f"residue size must be >= 2, got {q}")
    lines = ["x", "y", "x+y"] + [f"x+a{i}y" for i in range(3, q + 1)]
    labels = (["0", "xy"] if with_square else ["0"]) + lines + ["M", "R"]
    t = len(labels)
    zero = 0
    base = 2 if with_square else 1
    line_idx = list(range(base, base + q + 1))
    m_idx = t - 2
    r_idx = t - 1

    def j(a: int, b: int) -> int:
        if a == b:
            return a
        if a > b:
            a, b = b, a
        if a == zero:
            return b
        if b == r_idx:
            return r_idx
        if with_square and a == 1:
            return b
        if a in line_idx and b in line_idx:
            return m_idx
        return m_idx

    join = [[j(a, b) for b in range(t)] for a in range(t)]
    name = f"twogen_xy({q})" if with_square else f"twogen_flat({q})"
    return validate_lattice(name, labels, join, m_idx)


def make_builtin(family: str, param: int | None = None) -> IdealLattice:
    """Build a lattice from one of the builtin families.

    Families: ``field``; ``chain`` with k >= 0 nontrivial ideals (totally
    ordered, models Z_{p^{k+1}}); ``twogen_xy`` / ``twogen_flat`` with
    residue count q >= 2 (two-generator maximal ideal, with and without the
    <xy> layer).
    """
    if family == "field":
        if param not in (None, 0):
            raise BadParameter("field takes no parameter")
        lat = _chain_lattice(0)
        return IdealLattice("field", lat.elements, lat.join, lat.maximal)
    if family == "chain":
        if param is None:
            raise BadParameter("chain needs its length k")
        return _chain_lattice(param)
    if family == "twogen_xy":
        if param is None:
            raise BadParameter("twogen_xy needs its residue count q")
        return _twogen_lattice(param, with_square=True)
    if family == "twogen_flat":
        if param is None:
            raise BadParameter("twogen_flat needs its residue count q")
        return _twogen_lattice(param, with_square=False)
    raise BadParameter(f"unknown family {family!r}")


@dataclass(frozen=True)
class RingSpec:
    """An ordered product of local rings given by their ideal lattices."""

    factors: tuple[IdealLattice, ...]

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def ideal_count(self) -> int:
        c = 1
        for f in self.factors:
            c *= f.size
        return c

    @property
    def name(self) -> str:
        return " x ".join(f.name for f in self.factors)


def product_ring(factors: Sequence[IdealLattice]) -> RingSpec:
    """Assemble a product ring from validated factor lattices."""
    if not factors:
        raise EmptyProduct("a product ring needs at least one factor")
    for f in factors:
        validate_lattice(f.name, f.elements, f.join, f.maximal)
    return RingSpec(factors=tuple(factors))


def _check_tuple(ring: RingSpec, a: IdealTuple) -> None:
    if len(a) != ring.n:
        raise ShapeMismatch(f"tuple has {len(a)} coordinates, ring has {ring.n}")
    for k, (x, f) in enumerate(zip(a, ring.factors)):
        if not (0 <= x < f.size):
            raise ShapeMismatch(f"coordinate {k} = {x} out of range for {f.name}")


def enumerate_vertices(ring: RingSpec) -> list[IdealTuple]:
    """All nonzero proper ideals of the product, in lexicographic order."""
    zero = tuple(0 for _ in ring.factors)
    whole = tuple(f.top for f in ring.factors)
    return [
        t
        for t in itertools.product(*(range(f.size) for f in ring.factors))
        if t != zero and t != whole
    ]


def ideal_join(ring: RingSpec, a: IdealTuple, b: IdealTuple) -> IdealTuple:
    """Ideal sum, computed coordinatewise in each factor's join table."""
    _check_tuple(ring, a)
    _check_tuple(ring, b)
    return tuple(f.join[x][y] for f, x, y in zip(ring.factors, a, b))


def is_prime_ideal(ring: RingSpec, a: IdealTuple) -> bool:
    """True iff exactly one coordinate is that factor's maximal ideal and
    every other coordinate is the whole factor."""
    _check_tuple(ring, a)
    seen_maximal = 0
    for f, x in zip(ring.factors, a):
        if x == f.maximal:
            seen_maximal += 1
        elif x != f.top:
            return False
    return seen_maximal == 1


def ideal_label(ring: RingSpec, a: IdealTuple) -> str:
    """Readable label for a coordinate tuple, e.g. ``(M,R,0)``."""
    return "(" + ",".join(f.elements[x] for f, x in zip(ring.factors, a)) + ")"


@dataclass(frozen=True)
class FactorShape:
    """Per-factor summary used by the theorem-based classifier."""

    is_field: bool
    nontrivial_count: int
    is_chain: bool


@dataclass(frozen=True)
class RingShape:
    factors: tuple[FactorShape, ...]

    @property
    def n(self) -> int:
        return len(self.factors)


def shape_summary(ring: RingSpec) -> RingShape:
    """Summarise each factor as (is_field, nontrivial ideal count, is_chain)."""
    return RingShape(
        factors=tuple(
            FactorShape(f.is_field, f.nontrivial_count, f.is_chain)
            for f in ring.factors
        )
    )


_CANON_MIDDLE_CAP = 8


def _lattice_canonical_digest(lat: IdealLattice) -> str:
    """Digest of the join structure, independent of element labels.

    Middle elements are brought to a canonical order by minimising the
    relabelled table over all permutations (lattices here are tiny).  Beyond
    the cap the raw index order is used, which is still label independent.
    """
    t = lat.top
    middle = list(range(1, t))
    serial: tuple
    if len(middle) <= _CANON_MIDDLE_CAP:
        best = None
        for perm in itertools.permutations(middle):
            relab = {0: 0, t: t}
            for new, old in enumerate(perm, start=1):
                relab[old] = new
            inv = {v: k for k, v in relab.items()}
            rows = tuple(
                tuple(relab[lat.join[inv[i]][inv[j]]] for j in range(t + 1))
                for i in range(t + 1)
            )
            cand = (relab[lat.maximal], rows)
            if best is None or cand < best:
                best = cand
        serial = best  # type: ignore[assignment]
    else:
        serial = (lat.maximal, lat.join)
    digest = hashlib.sha1(repr(serial).encode()).hexdigest()[:12]
    return f"{lat.size}.{digest}"


def canonical_key(ring: RingSpec) -> str:
    """Deterministic key for a ring spec, invariant under element relabelling.

    Factor order is part of the key; use sorted factor digests when a
    permutation-insensitive key is wanted.
    """
    return f"n{ring.n}:" + "|".join(_lattice_canonical_digest(f) for f in ring.factors)


def factor_digests(ring: RingSpec) -> tuple[str, ...]:
    """Per-factor canonical digests (building block for permutation-free keys)."""
    return tuple(_lattice_canonical_digest(f) for f in ring.factors)


# ---------------------------------------------------------------------------
# Ring-spec files: JSON with a top-level "factors" list.


def lattice_from_config(cfg: dict) -> IdealLattice:
    family = cfg.get("family")
    if family == "field":
        return make_builtin("field")
    if family == "chain":
        return make_builtin("chain", int(cfg["k"]))
    if family in ("twogen_xy", "twogen_flat"):
        return make_builtin(family, int(cfg["q"]))
    if family == "custom":
        elements = list(cfg["elements"])
        join = [[int(v) for v in row] for row in cfg["join"]]
        maximal = cfg["maximal"]
        if isinstance(maximal, str):
            if maximal not in elements:
                raise BadIndex(f"maximal label {maximal!r} not among elements")
            maximal = elements.index(maximal)
        lat = validate_lattice(cfg.get("name", "custom"), elements, join, int(maximal))
        # The file format pins the zero ideal first and the whole ring last;
        # validation already enforced neutrality/absorption at those slots.
        return lat
    raise BadParameter(f"unknown factor family {family!r}")


def lattice_to_config(lat: IdealLattice) -> dict:
    if lat.name == "field":
        return {"family": "field"}
    for family, key in (("chain", "k"), ("twogen_xy", "q"), ("twogen_flat", "q")):
        if lat.name.startswith(family + "("):
            return {"family": family, key: int(lat.name[len(family) + 1 : -1])}
    return {
        "family": "custom",
        "name": lat.name,
        "elements": list(lat.elements),
        "join": [list(row) for row in lat.join],
        "maximal": lat.elements[lat.maximal],
    }


def ring_from_config(cfg: dict) -> RingSpec:
    factors = cfg.get("factors")
    if not factors:
        raise EmptyProduct("ring spec needs a nonempty 'factors' list")
    return product_ring([lattice_from_config(f) for f in factors])


def ring_to_config(ring: RingSpec) -> dict:
    return {"factors": [lattice_to_config(f) for f in ring.factors]}


def load_ring(path: str) -> RingSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return ring_from_config(json.load(fh))
