"""Low-order separation systems, orientations, tangles, and profiles.

A system S_k collects every unoriented separation of one universe whose
order is strictly below k, excluding the top separation (full, full).  An
orientation picks one direction per member.  An orientation is a *tangle*
when no three of its members (chosen with repetition) have first components
covering the ground set; it is a *profile* when it neither contains two
members pointing away from each other nor any pair whose inverted supremum
it also contains; it is *regular* when no member's first component is the
whole ground set.

Repetition in the tangle triple is deliberate: without it, the orientation
{(X, ∅)} of a one-member system would vacuously count as a tangle, while a
separation pointing at everything is exactly what consistency must exclude.
A consequence worth knowing: every tangle is a regular profile.

Enumeration is exhaustive backtracking over members sorted by order, with
incremental violation pruning; violations are monotone under extension, so
pruned subtrees can contain no result.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator

from . import _kernels
from .bigraph import BipartiteGraph
from .errors import CapExceeded
from .orders import HalfInt, as_halfint, universe_context
from .separations import (
    DEFAULT_PARTITION_CAP,
    DEFAULT_SEP_CAP,
    Sep,
    inverse,
    leq,
    sup,
)

DEFAULT_EDGE_CAP = 10
DEFAULT_MEMBER_CAP = 24


def _scan(g: BipartiteGraph, universe: str):
    """Cached sorted scan of all canonical separations of a universe."""
    key = ("scan", universe)
    hit = g._cache.get(key)
    if hit is None:
        masks, ground, partitions_only = universe_context(g, universe)
        hit = _kernels.scan_members(masks, ground.n, partitions_only)
        g._cache[key] = hit
    return hit


def max_order2(g: BipartiteGraph, universe: str) -> int:
    """Doubled order of the largest separation of the universe.

    For separation universes this is the top element (full, full); for
    partition universes it is the maximum over all partitions.
    """
    masks, ground, partitions_only = universe_context(g, universe)
    if not partitions_only:
        return _kernels.order2(masks, ground.full, ground.full)
    scan = _scan(g, universe)
    return scan[-1][0] if scan else 0


class LowOrderSystem:
    """All separations of one universe with order strictly below a threshold.

    Members are canonical (lexicographically smaller orientation first),
    deduplicated, and sorted by (order, first mask, second mask).  The top
    separation (full, full) is never a member.
    """

    __slots__ = ("graph", "universe", "k2", "ground", "members", "orders2", "index")

    def __init__(self, graph, universe, k2, ground, members, orders2):
        self.graph = graph
        self.universe = universe
        self.k2 = k2
        self.ground = ground
        self.members = members
        self.orders2 = orders2
        self.index = {s: i for i, s in enumerate(members)}

    @property
    def k(self) -> HalfInt:
        return HalfInt(self.k2)

    def __len__(self) -> int:
        return len(self.members)

    def orientations_of(self, i: int) -> tuple[Sep, Sep]:
        m = self.members[i]
        return m, inverse(m)

    def restricted(self, k) -> "LowOrderSystem":
        """The subsystem of order below k (a prefix, since members are sorted)."""
        k2 = as_halfint(k).doubled
        if k2 > self.k2:
            raise ValueError("restriction threshold exceeds the system threshold")
        cut = bisect_left(self.orders2, k2)
        return LowOrderSystem(self.graph, self.universe, k2, self.ground,
                              self.members[:cut], self.orders2[:cut])

    def __repr__(self) -> str:
        return (f"LowOrderSystem({self.universe!r}, k={self.k}, "
                f"members={len(self.members)})")


def build_system(g: BipartiteGraph, universe: str, k,
                 cap: int | None = None) -> LowOrderSystem:
    """Construct S_k for a universe of ``g``; k is a HalfInt or whole int."""
    k2 = as_halfint(k).doubled
    masks, ground, partitions_only = universe_context(g, universe)
    if cap is None:
        cap = (DEFAULT_PARTITION_CAP if partitions_only
               else DEFAULT_EDGE_CAP if universe == "e" else DEFAULT_SEP_CAP)
    if ground.n > cap:
        raise CapExceeded(
            f"universe {universe!r} has {ground.n} elements, over cap {cap}")
    scan = _scan(g, universe)
    cut = bisect_left(scan, (k2,))
    members = tuple(Sep(a, b) for _, a, b in scan[:cut])
    orders2 = tuple(o for o, _, _ in scan[:cut])
    return LowOrderSystem(g, universe, k2, ground, members, orders2)


class Orientation:
    """A choice of one orientation for every member of a system."""

    __slots__ = ("system", "forward")

    def __init__(self, system: LowOrderSystem, forward: tuple[bool, ...]):
        if len(forward) != len(system.members):
            raise ValueError("one choice per member required")
        self.system = system
        self.forward = tuple(forward)

    def chosen(self, i: int) -> Sep:
        m = self.system.members[i]
        return m if self.forward[i] else inverse(m)

    def choices(self) -> tuple[Sep, ...]:
        return tuple(self.chosen(i) for i in range(len(self.forward)))

    def as_set(self) -> frozenset[Sep]:
        return frozenset(self.choices())

    def __contains__(self, s: Sep) -> bool:
        canon = s if (s.a, s.b) <= (s.b, s.a) else Sep(s.b, s.a)
        i = self.system.index.get(canon)
        if i is None:
            return False
        return self.forward[i] == (s == canon)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Orientation)
                and self.system is other.system
                and self.forward == other.forward)

    def __hash__(self) -> int:
        return hash((id(self.system), self.forward))

    def restrict(self, k) -> "Orientation":
        """Induced orientation of the subsystem of order below k."""
        sub = self.system.restricted(k)
        return Orientation(sub, self.forward[: len(sub.members)])

    def to_dict(self) -> dict:
        ground = self.system.ground
        out = []
        for i, m in enumerate(self.system.members):
            out.append({
                "a": [_fmt_label(l) for l in ground.members(m.a)],
                "b": [_fmt_label(l) for l in ground.members(m.b)],
                "order2": self.system.orders2[i],
                "forward": self.forward[i],
            })
        return {
            "universe": self.system.universe,
            "k2": self.system.k2,
            "members": out,
        }

    def dump_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _fmt_label(label) -> str:
    if isinstance(label, tuple) and len(label) == 2:
        return f"{label[0]}--{label[1]}"
    return str(label)


def restrict(o: Orientation, k) -> Orientation:
    return o.restrict(k)


@dataclass(frozen=True)
class TangleReport:
    """Outcome of a consistency check, with a literal witness on failure."""

    is_orientation: bool
    kind: str  # tangle | profile | regular_profile | none
    violation: tuple[Sep, ...] | None = None
    clause: str | None = None

    @property
    def ok(self) -> bool:
        return self.violation is None


def check_tangle(o: Orientation) -> TangleReport:
    """Test the covering-triple condition, triples taken with repetition.

    Returns the lexicographically first witness triple (by member index)
    when the condition fails.
    """
    chosen = o.choices()
    full = o.system.ground.full
    n = len(chosen)
    for i in range(n):
        ai = chosen[i].a
        for j in range(i, n):
            aij = ai | chosen[j].a
            for l in range(j, n):
                if aij | chosen[l].a == full:
                    return TangleReport(True, "none",
                                        (chosen[i], chosen[j], chosen[l]),
                                        "cover_triple")
    return TangleReport(True, "tangle")


def check_profile(o: Orientation) -> TangleReport:
    """Test the profile conditions.

    (i) no two members point away from each other: there are no chosen r, s
    with distinct underlying separations and inverse(r) <= s; and (ii) for
    no chosen pair r, s is the inverse of their supremum also chosen.
    """
    chosen = o.choices()
    picked = set(chosen)
    n = len(chosen)
    for i in range(n):
        for j in range(n):
            if i != j and leq(inverse(chosen[i]), chosen[j]):
                return TangleReport(True, "none",
                                    (chosen[i], chosen[j]), "consistency_pair")
    for i in range(n):
        for j in range(i, n):
            third = inverse(sup(chosen[i], chosen[j]))
            if third in picked:
                return TangleReport(True, "none",
                                    (chosen[i], chosen[j], third), "corner_triple")
    return TangleReport(True, "profile")


def check_regular(o: Orientation) -> bool:
    """No chosen separation points away from the whole ground set."""
    full = o.system.ground.full
    return all(c.a != full for c in o.choices())


def is_regular_profile(o: Orientation) -> bool:
    return check_regular(o) and check_profile(o).ok


def enumerate_orientations(system: LowOrderSystem) -> Iterator[Orientation]:
    """All 2^n orientations, forward-first per member; the naive generator."""
    n = len(system.members)
    forward = [True] * n

    def rec(i):
        if i == n:
            yield Orientation(system, tuple(forward))
            return
        for val in (True, False):
            forward[i] = val
            yield from rec(i + 1)

    yield from rec(0)


def enumerate_tangles(g: BipartiteGraph, universe: str, k,
                      kind: str = "tangle",
                      member_cap: int = DEFAULT_MEMBER_CAP,
                      system: LowOrderSystem | None = None) -> list[Orientation]:
    """Exhaustively enumerate tangles or regular profiles of S_k.

    Backtracking over members in sorted order with incremental pruning; the
    search tree covers all 2^n orientations, and pruned branches are exactly
    those whose partial choice already violates the (monotone) conditions,
    so the result list is complete.  Deterministic order: forward choice
    explored first at every member.
    """
    if kind not in ("tangle", "regular_profile"):
        raise ValueError(f"kind must be 'tangle' or 'regular_profile', got {kind!r}")
    if system is None:
        system = build_system(g, universe, k)
    n = len(system.members)
    if n > member_cap:
        raise CapExceeded(f"system has {n} members, over member cap {member_cap}")

    full = system.ground.full
    results: list[Orientation] = []
    forward = [True] * n
    chosen: list[Sep] = []

    if kind == "tangle":
        # pair_unions holds a|b over all chosen multisets of size <= 2
        pair_unions: list[int] = []

        def ok_to_add(s: Sep) -> bool:
            if s.a == full:
                return False
            for u in pair_unions:
                if u | s.a == full:
                    return False
            return True

        def push(s: Sep) -> int:
            added = [p.a | s.a for p in chosen]
            added.append(s.a)
            pair_unions.extend(added)
            chosen.append(s)
            return len(added)

        def pop(count: int) -> None:
            del pair_unions[-count:]
            chosen.pop()

    else:

        def ok_to_add(s: Sep) -> bool:
            if s.a == full:
                return False
            inv_s = inverse(s)
            for t in chosen:
                if leq(inverse(t), s) or leq(inv_s, t):
                    return False
            # corner triples touching s: either s closes a pair, or a pair
            # from the partial choice closes on s
            picked = set(chosen)
            picked.add(s)
            for t in chosen:
                if inverse(sup(t, s)) in picked:
                    return False
            if inv_s in picked:  # sup(s, s) degenerate case
                return False
            for i, t in enumerate(chosen):
                for u in chosen[i:]:
                    if inverse(sup(t, u)) == s:
                        return False
            return True

        def push(s: Sep) -> int:
            chosen.append(s)
            return 0

        def pop(count: int) -> None:
            chosen.pop()

    def rec(i: int) -> None:
        if i == n:
            results.append(Orientation(system, tuple(forward)))
            return
        fwd, bwd = system.orientations_of(i)
        for val, s in ((True, fwd), (False, bwd)):
            if ok_to_add(s):
                forward[i] = val
                token = push(s)
                rec(i + 1)
                pop(token)

    rec(0)
    return results
