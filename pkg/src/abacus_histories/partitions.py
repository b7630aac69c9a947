"""Partitions, finite-bead abaci, gap/bead labels and the abacus-flip.

A partition is stored as a plain tuple of positive integers in weakly
decreasing order (trailing zeros stripped).  An :class:`Abacus` stores the
bead positions of an N-bead abacus in strictly decreasing order.  Every
position below 0 is implicitly a bead, which makes the finite abacus a
faithful window onto the doubly-infinite one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

Partition = Tuple[int, ...]


class PartitionError(ValueError):
    pass


class AbacusError(ValueError):
    pass


def partition(parts: Iterable[int] = ()) -> Partition:
    """Validate ``parts`` and return the canonical (zero-stripped) tuple."""
    parts = tuple(int(p) for p in parts)
    for i, p in enumerate(parts):
        if p < 0:
            raise PartitionError(f"negative part {p} in {parts}")
        if i and p > parts[i - 1]:
            raise PartitionError(f"parts not weakly decreasing: {parts}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def size(mu: Partition) -> int:
    return sum(mu)


def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= j) for j in range(1, mu[0] + 1))


def partitions_of(n: int, max_part: Optional[int] = None,
                  max_length: Optional[int] = None):
    """Yield the partitions of ``n`` in reverse lexicographic order."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    rest = None if max_length is None else max_length - 1
    for first in range(max_part, 0, -1):
        for tail in partitions_of(n - first, first, rest):
            yield (first,) + tail


def partitions_up_to(n: int, max_length: Optional[int] = None):
    for k in range(n + 1):
        yield from partitions_of(k, max_length=max_length)


class GapInfo(NamedTuple):
    position: int
    label: int
    sign: int


class BeadInfo(NamedTuple):
    position: int
    label: int
    sign: int


@dataclass(frozen=True)
class Abacus:
    """An N-bead abacus; ``beads`` is strictly decreasing and nonnegative."""

    beads: Tuple[int, ...]

    def __post_init__(self):
        beads = tuple(self.beads)
        for i, b in enumerate(beads):
            if b < 0:
                raise AbacusError(f"negative bead position {b}")
            if i and b >= beads[i - 1]:
                raise AbacusError(f"bead positions not strictly decreasing: {beads}")
        object.__setattr__(self, "beads", beads)

    @classmethod
    def from_positions(cls, positions: Iterable[int]) -> "Abacus":
        return cls(tuple(sorted(set(positions), reverse=True)))

    @property
    def n(self) -> int:
        return len(self.beads)

    def __contains__(self, position: int) -> bool:
        if position < 0:
            return True
        return position in self.beads

    def to_partition(self) -> Partition:
        return from_abacus(self)

    def word(self, width: Optional[int] = None) -> str:
        """0/1-free rendering: ``o`` for a bead, ``.`` for a gap."""
        top = self.beads[0] + 1 if self.beads else 0
        if width is None:
            width = top
        occupied = set(self.beads)
        return "".join("o" if i in occupied else "." for i in range(width))

    def __str__(self) -> str:
        return self.word()


def to_abacus(mu: Sequence[int], n: int) -> Abacus:
    mu = partition(mu)
    if n < len(mu):
        raise AbacusError(f"{n} beads cannot hold a partition of length {len(mu)}")
    padded = mu + (0,) * (n - len(mu))
    return Abacus(tuple(p + n - 1 - i for i, p in enumerate(padded)))


def from_abacus(a: Abacus) -> Partition:
    n = a.n
    return partition(p - (n - 1 - i) for i, p in enumerate(a.beads))


def gap_label_at(a: Abacus, position: int) -> Optional[GapInfo]:
    """Label and sign of the gap at ``position``, or None for a bead.

    With implicit beads below 0, a gap with g gaps to its left and b beads
    to its right has g - b = position - N.
    """
    if position < 0 or position in a.beads:
        return None
    # beads are descending: count those strictly right of position
    b = sum(1 for x in a.beads if x > position)
    return GapInfo(position, position - a.n, -1 if b % 2 else 1)


def gap_with_label(a: Abacus, label: int) -> Optional[GapInfo]:
    return gap_label_at(a, label + a.n)


def gap_labels(a: Abacus, horizon: int = 1) -> list:
    """All gaps in positions ``0 .. max bead + horizon`` with labels and signs.

    Labels are computed from the definition (gaps strictly left minus beads
    strictly right); beyond the last bead they continue +1 per position.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    top = a.beads[0] if a.beads else -1
    occupied = set(a.beads)
    out = []
    gaps_left = 0
    beads_right = a.n
    for pos in range(top + horizon + 1):
        if pos in occupied:
            beads_right -= 1
            continue
        out.append(GapInfo(pos, gaps_left - beads_right,
                           -1 if beads_right % 2 else 1))
        gaps_left += 1
    return out


def bead_labels(a: Abacus) -> list:
    """Beads listed left to right with label b - g and sign (-1)^g."""
    out = []
    asc = a.beads[::-1]
    n = a.n
    for rank, pos in enumerate(asc):
        g = pos - rank
        b = n - 1 - rank
        out.append(BeadInfo(pos, b - g, -1 if g % 2 else 1))
    return out


def bead_with_label(a: Abacus, label: int) -> Optional[BeadInfo]:
    # explicit bead at x has label N - 1 - x
    pos = a.n - 1 - label
    if pos < 0 or pos not in a.beads:
        return None
    rank = sum(1 for x in a.beads if x < pos)
    g = pos - rank
    return BeadInfo(pos, label, -1 if g % 2 else 1)


def flip(a: Abacus, window: Optional[Tuple[int, int]] = None) -> Abacus:
    """Interchange beads and gaps inside ``window`` and reverse it.

    ``window = (lo, hi)`` must start inside the solid block of beads
    (every position below ``lo`` is a bead) and end past the last bead.
    The result lives in a frame of width ``hi - lo``.
    """
    if window is None:
        window = (0, a.beads[0] + 1 if a.beads else 0)
    lo, hi = window
    top = a.beads[0] if a.beads else -1
    if lo < 0 or hi <= top or hi < lo:
        raise AbacusError(f"incomplete window {window} for abacus {a.beads}")
    if any(p not in a.beads for p in range(lo)):
        raise AbacusError(f"window {window} starts to the right of a gap")
    occupied = set(a.beads)
    return Abacus.from_positions(hi - 1 - p for p in range(lo, hi)
                                 if p not in occupied)


def render_partition(mu: Partition) -> str:
    return "s[" + ",".join(str(p) for p in mu) + "]"
