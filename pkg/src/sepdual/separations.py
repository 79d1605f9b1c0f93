"""Oriented separations of a finite set, as pairs of bitmasks.

An oriented separation of a ground set ``V`` is an ordered pair ``(a, b)``
of subsets with ``a | b == V``; it is a partition when additionally
``a & b == 0``.  The pair and its inverse ``(b, a)`` form one unoriented
separation, represented throughout by its canonical orientation (the
lexicographically smaller mask pair).

The partial order is ``r <= s  iff  r.a ⊆ s.a and r.b ⊇ s.b``.  Under it the
inversion map is order-reversing, and any two separations have a supremum
``(r.a ∪ s.a, r.b ∩ s.b)`` and infimum ``(r.a ∩ s.a, r.b ∪ s.b)``.
Partitions are closed under both, so they form a universe of their own.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .errors import CapExceeded, CoverViolation
from .groundset import GroundSet

#: Enumeration caps; 3**n growth makes silently large runs pathological.
DEFAULT_SEP_CAP = 12
DEFAULT_PARTITION_CAP = 20


class Sep(NamedTuple):
    """An oriented separation: sides as bitmasks over a fixed ground set."""

    a: int
    b: int

    @property
    def middle(self) -> int:
        return self.a & self.b

    def is_partition(self) -> bool:
        return self.a & self.b == 0


def make_sep(ground: GroundSet, a: int, b: int) -> Sep:
    """Validate the cover condition and build a separation over ``ground``."""
    ground.check(a)
    ground.check(b)
    if a | b != ground.full:
        missing = ground.members(ground.full & ~(a | b))
        raise CoverViolation(f"sides do not cover the ground set; missing {missing}")
    return Sep(a, b)


def inverse(s: Sep) -> Sep:
    return Sep(s.b, s.a)


def leq(r: Sep, s: Sep) -> bool:
    """r <= s in the separation order: r.a ⊆ s.a and r.b ⊇ s.b."""
    return r.a & ~s.a == 0 and s.b & ~r.b == 0


def sup(r: Sep, s: Sep) -> Sep:
    return Sep(r.a | s.a, r.b & s.b)


def inf(r: Sep, s: Sep) -> Sep:
    return Sep(r.a & s.a, r.b | s.b)


def canonical(s: Sep) -> Sep:
    """The smaller of the two orientations; idempotent, fixes unoriented identity."""
    t = (s.b, s.a)
    return s if tuple(s) <= t else Sep(*t)


def enumerate_seps(
    ground: GroundSet, mode: str = "all_separations", cap: int | None = None
) -> Iterator[Sep]:
    """Yield every oriented separation (or partition) of ``ground`` once.

    ``mode`` is ``"all_separations"`` (3**n results) or ``"partitions_only"``
    (2**n results).  Order is deterministic.  Raises :class:`CapExceeded`
    when the ground set is larger than the cap.
    """
    n = ground.n
    full = ground.full
    if mode == "partitions_only":
        limit = DEFAULT_PARTITION_CAP if cap is None else cap
        if n > limit:
            raise CapExceeded(f"partition enumeration of {n} elements exceeds cap {limit}")
        for a in range(1 << n):
            yield Sep(a, full ^ a)
    elif mode == "all_separations":
        limit = DEFAULT_SEP_CAP if cap is None else cap
        if n > limit:
            raise CapExceeded(f"separation enumeration of {n} elements exceeds cap {limit}")
        for a in range(1 << n):
            rest = full ^ a
            m = a
            while True:
                yield Sep(a, rest | m)
                if m == 0:
                    break
                m = (m - 1) & a
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")


def render(ground: GroundSet, s: Sep) -> str:
    """Human-readable form of a separation using ground-set labels."""
    fmt = lambda m: "{" + ",".join(map(str, ground.members(m))) + "}"
    return f"({fmt(s.a)},{fmt(s.b)})"
