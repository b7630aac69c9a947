"""Linear operators on Schur expansions, implemented on abaci.

Every operator acts on a single Schur function through a cached kernel and
is extended to expansions by linearity.  Kernels compute their own bead
padding:

* ``mul_h``: one zero part (the bead at the edge of the solid block may
  move east);
* ``mul_e``: ``c`` zero parts;
* ``h_perp``/``e_perp``/``bernstein_S``: none, since beads below 0 are
  implicit and gap labels do not depend on N;
* ``co_S_destroy``: enough beads that the bead labelled ``m`` is explicit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .partitions import (Abacus, Partition, bead_with_label, conjugate,
                         from_abacus, gap_with_label, partition, to_abacus)
from .qlaurent import (Accumulator, QLaurent, SchurExpansion,
                       exp_map_conjugate)

Kernel = Tuple[Tuple[Partition, QLaurent], ...]


# -- bead-move enumerators -------------------------------------------------

def east_moves(beads: Sequence[int], total: int):
    """Yield new bead tuples: beads move east ``total`` steps altogether,
    never into a position occupied at the start.  Bead i ends in
    ``[beads[i], beads[i-1])``.  Enumeration is lexicographic on the
    displacement vector, rightmost bead first.
    """
    n = len(beads)
    out = [0] * n

    def rec(i, left):
        if i == n:
            if left == 0:
                yield tuple(out)
            return
        p = beads[i]
        room = left if i == 0 else min(left, beads[i - 1] - 1 - p)
        if i == n - 1:
            if left <= room:
                out[i] = p + left
                yield tuple(out)
            return
        for k in range(room + 1):
            out[i] = p + k
            yield from rec(i + 1, left - k)

    if total < 0:
        return
    if n == 0:
        if total == 0:
            yield ()
        return
    yield from rec(0, total)


def west_moves(beads: Sequence[int], total: int):
    """Yield new bead tuples: beads move west ``total`` steps altogether,
    never into a position occupied at the start (positions below 0 are
    occupied).  Bead i ends in ``(beads[i+1], beads[i]]``.
    """
    n = len(beads)
    out = [0] * n
    floors = [beads[i + 1] + 1 if i + 1 < n else 0 for i in range(n)]
    # capacity of beads i.. to absorb steps; used for pruning
    cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        cap[i] = cap[i + 1] + beads[i] - floors[i]

    def rec(i, left):
        if i == n:
            if left == 0:
                yield tuple(out)
            return
        p = beads[i]
        lo = max(0, left - cap[i + 1])
        hi = min(left, p - floors[i])
        for k in range(lo, hi + 1):
            out[i] = p - k
            yield from rec(i + 1, left - k)

    if total < 0 or total > cap[0]:
        return
    yield from rec(0, total)


def all_west_moves(beads: Sequence[int]):
    """Yield (total, new beads) over every west move of any total size."""
    n = len(beads)
    out = [0] * n
    floors = [beads[i + 1] + 1 if i + 1 < n else 0 for i in range(n)]

    def rec(i, total):
        if i == n:
            yield total, tuple(out)
            return
        p = beads[i]
        for k in range(p - floors[i] + 1):
            out[i] = p - k
            yield from rec(i + 1, total + k)

    yield from rec(0, 0)


def step_moves(beads: Sequence[int], count: int, direction: int):
    """Yield new bead tuples where ``count`` distinct beads move one step in
    ``direction`` (+1 east, -1 west) simultaneously, ending without
    collisions and at nonnegative positions.
    """
    n = len(beads)
    if count < 0 or count > n:
        return
    for chosen in combinations(range(n), count):
        moved = set(chosen)
        new = [b + direction if i in moved else b for i, b in enumerate(beads)]
        if new and new[-1] < 0:
            continue
        if all(new[i] > new[i + 1] for i in range(n - 1)):
            yield tuple(new)


# -- single-Schur kernels ------------------------------------------------

def _from_beads(beads) -> Partition:
    return from_abacus(Abacus(tuple(beads)))


@lru_cache(maxsize=None)
def _mul_h_kernel(c: int, mu: Partition) -> Tuple[Partition, ...]:
    if c < 0:
        return ()
    a = to_abacus(mu, len(mu) + 1)
    return tuple(_from_beads(b) for b in east_moves(a.beads, c))


@lru_cache(maxsize=None)
def _h_perp_kernel(c: int, mu: Partition) -> Tuple[Partition, ...]:
    if c < 0:
        return ()
    a = to_abacus(mu, len(mu))
    return tuple(_from_beads(b) for b in west_moves(a.beads, c))


@lru_cache(maxsize=None)
def _mul_e_kernel(c: int, mu: Partition) -> Tuple[Partition, ...]:
    if c < 0:
        return ()
    a = to_abacus(mu, len(mu) + c)
    return tuple(_from_beads(b) for b in step_moves(a.beads, c, +1))


@lru_cache(maxsize=None)
def _e_perp_kernel(c: int, mu: Partition) -> Tuple[Partition, ...]:
    if c < 0:
        return ()
    a = to_abacus(mu, len(mu))
    return tuple(_from_beads(b) for b in step_moves(a.beads, c, -1))


@lru_cache(maxsize=None)
def s_single(m: int, mu: Partition) -> Optional[Tuple[int, Partition]]:
    """Bernstein S_m on s_mu: (sign, lambda) or None for zero."""
    a = to_abacus(mu, len(mu))
    gap = gap_with_label(a, m)
    if gap is None:
        return None
    return gap.sign, from_abacus(Abacus.from_positions(a.beads + (gap.position,)))


@lru_cache(maxsize=None)
def co_s_single(m: int, mu: Partition) -> Optional[Tuple[int, Partition]]:
    """omega S_m omega on s_mu by bead destruction: (sign, nu) or None."""
    a = to_abacus(mu, max(len(mu), m + 1))
    bead = bead_with_label(a, m)
    if bead is None:
        return None
    rest = tuple(b for b in a.beads if b != bead.position)
    return bead.sign, from_abacus(Abacus(rest))


@lru_cache(maxsize=None)
def _h_kernel(m: int, mu: Partition) -> Kernel:
    acc: Dict[Partition, Dict[int, int]] = {}
    a = to_abacus(mu, len(mu))
    for c, beads in all_west_moves(a.beads):
        res = s_single(m + c, _from_beads(beads))
        if res is not None:
            sign, lam = res
            row = acc.setdefault(lam, {})
            row[c] = row.get(c, 0) + sign
    return _freeze_kernel(acc)


def _freeze_kernel(acc: Dict[Partition, Dict[int, int]]) -> Kernel:
    out = []
    for lam, row in acc.items():
        w = QLaurent.from_dict(row)
        if w:
            out.append((lam, w))
    return tuple(out)


# -- linear extension ------------------------------------------------------

def _apply_unit(E: SchurExpansion, kernel: Callable[[Partition], Iterable[Partition]]):
    acc = Accumulator()
    for mu, w in E.as_dict().items():
        for lam in kernel(mu):
            acc.add(lam, w)
    return acc.freeze()


def _apply_signed(E: SchurExpansion, kernel):
    acc = Accumulator()
    for mu, w in E.as_dict().items():
        res = kernel(mu)
        if res is not None:
            sign, lam = res
            acc.add(lam, w if sign > 0 else -w)
    return acc.freeze()


def _apply_weighted(E: SchurExpansion, kernel: Callable[[Partition], Kernel]):
    acc = Accumulator()
    for mu, w in E.as_dict().items():
        for lam, v in kernel(mu):
            acc.add(lam, w * v)
    return acc.freeze()


def mul_h(c: int, E: SchurExpansion) -> SchurExpansion:
    return _apply_unit(E, lambda mu: _mul_h_kernel(c, mu))


def h_perp(c: int, E: SchurExpansion) -> SchurExpansion:
    return _apply_unit(E, lambda mu: _h_perp_kernel(c, mu))


def mul_e(c: int, E: SchurExpansion) -> SchurExpansion:
    return _apply_unit(E, lambda mu: _mul_e_kernel(c, mu))


def e_perp(c: int, E: SchurExpansion) -> SchurExpansion:
    return _apply_unit(E, lambda mu: _e_perp_kernel(c, mu))


def omega(E: SchurExpansion) -> SchurExpansion:
    return exp_map_conjugate(E)


def bernstein_S(m: int, E: SchurExpansion) -> SchurExpansion:
    """Fill the gap labelled ``m`` with a new bead, times that gap's sign."""
    return _apply_signed(E, lambda mu: s_single(m, mu))


def co_S_destroy(m: int, E: SchurExpansion) -> SchurExpansion:
    """Replace the bead labelled ``m`` by a gap, times that bead's sign."""
    return _apply_signed(E, lambda mu: co_s_single(m, mu))


def bernstein_S_via_sum(m: int, E: SchurExpansion) -> SchurExpansion:
    total = SchurExpansion.zero()
    for mu, w in E.as_dict().items():
        single = SchurExpansion.schur(mu)
        for c in range(len(mu) + 1):
            term = mul_h(m + c, e_perp(c, single))
            total = total + term.scale(w if c % 2 == 0 else -w)
    return total


def jing_H(m: int, E: SchurExpansion) -> SchurExpansion:
    return _apply_weighted(E, lambda mu: _h_kernel(m, mu))


def _c_prefactor(m: int) -> QLaurent:
    # (-1/q)^(m-1)
    k = m - 1
    return QLaurent.monomial(-k, -1 if k % 2 else 1)


@lru_cache(maxsize=None)
def _c_kernel(m: int, mu: Partition) -> Kernel:
    pre = _c_prefactor(m)
    return tuple((lam, w.subst_qinv() * pre) for lam, w in _h_kernel(m, mu))


def hmz_C(m: int, E: SchurExpansion) -> SchurExpansion:
    return _apply_weighted(E, lambda mu: _c_kernel(m, mu))


@lru_cache(maxsize=None)
def _b_kernel(m: int, mu: Partition) -> Kernel:
    return tuple((conjugate(lam), w) for lam, w in _h_kernel(m, conjugate(mu)))


def hmz_B(m: int, E: SchurExpansion) -> SchurExpansion:
    return _apply_weighted(E, lambda mu: _b_kernel(m, mu))


def hmz_B_via_sum(m: int, E: SchurExpansion) -> SchurExpansion:
    total = SchurExpansion.zero()
    for mu, w in E.as_dict().items():
        single = SchurExpansion.schur(mu)
        for d in range(len(mu) + 1):
            after_d = e_perp(d, single)
            if not after_d:
                continue
            for c in range(max((nu[0] if nu else 0) for nu in after_d.keys()) + 1):
                term = mul_e(m + d + c, h_perp(c, after_d))
                weight = QLaurent.monomial(d, -1 if c % 2 else 1) * w
                total = total + term.scale(weight)
    return total


# -- straightening ---------------------------------------------------------

def straighten(alpha: Sequence[int]) -> Optional[Tuple[int, Partition]]:
    """Straighten ``S_alpha``: zero (None) or ``(sign, mu)`` with
    ``S_alpha = sign * s_mu``.

    The list is padded with zeros; each step swaps the first ascent
    ``(a, b)`` to ``(b - 1, a + 1)`` and flips the sign, returning zero
    when ``b == a + 1``.
    """
    alpha = [int(x) for x in alpha]
    if not alpha:
        return 1, ()
    spread = max(abs(x) for x in alpha)
    work = alpha + [0] * (len(alpha) + spread)
    bound = len(work) * (max(work) - min(work) + len(work)) + 1
    sign = 1
    for _ in range(bound):
        for i in range(len(work) - 1):
            if work[i] < work[i + 1]:
                break
        else:
            if work[-1] < 0:
                return None
            return sign, partition(work)
        a, b = work[i], work[i + 1]
        if b == a + 1:
            return None
        work[i], work[i + 1] = b - 1, a + 1
        sign = -sign
    raise RuntimeError(f"straightening of {alpha} did not terminate")


# -- operator words ----------------------------------------------------------

KINDS = ("MulH", "MulE", "HPerp", "EPerp", "Omega", "S", "CoS", "H", "C", "B")


class WordParseError(ValueError):
    def __init__(self, message: str, token: str = "", position: int = -1):
        super().__init__(message)
        self.token = token
        self.position = position


@dataclass(frozen=True)
class OperatorSpec:
    kind: str
    m: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if (self.kind == "Omega") != (self.m is None):
            raise ValueError(f"{self.kind} parameter mismatch: {self.m!r}")

    def __str__(self):
        return _TOKEN_OF[self.kind] + ("" if self.m is None else f"({self.m})")

    def apply(self, E: SchurExpansion) -> SchurExpansion:
        if self.kind == "Omega":
            return omega(E)
        return _DISPATCH[self.kind](self.m, E)


_DISPATCH = {
    "MulH": mul_h, "MulE": mul_e, "HPerp": h_perp, "EPerp": e_perp,
    "S": bernstein_S, "CoS": co_S_destroy, "H": jing_H, "C": hmz_C, "B": hmz_B,
}

_TOKEN_OF = {"MulH": "mh", "MulE": "me", "HPerp": "hp", "EPerp": "ep",
             "Omega": "w", "S": "S", "CoS": "cS", "H": "H", "C": "C", "B": "B"}
_KIND_OF = {v: k for k, v in _TOKEN_OF.items()}
_TOKEN_RE = re.compile(r"^(mh|me|hp|ep|cS|S|H|C|B)\((-?\d+)\)$|^w$")


def parse_word(text: str) -> List[OperatorSpec]:
    """Parse ``"H(1),H(2),w"`` into operator specs, in written order."""
    text = text.strip()
    if not text:
        return []
    word = []
    offset = 0
    for raw in text.split(","):
        token = raw.strip()
        pos = offset + (len(raw) - len(raw.lstrip()))
        offset += len(raw) + 1
        match = _TOKEN_RE.match(token)
        if not match:
            raise WordParseError(f"bad operator token {token!r} at position {pos}",
                                 token, pos)
        if token == "w":
            word.append(OperatorSpec("Omega"))
        else:
            word.append(OperatorSpec(_KIND_OF[match.group(1)], int(match.group(2))))
    return word


def format_word(word: Sequence[OperatorSpec]) -> str:
    return ",".join(str(op) for op in word)


def apply_word(word: Sequence[OperatorSpec], E: SchurExpansion) -> SchurExpansion:
    """Apply ``word`` right to left, as operator composition is written."""
    for op in reversed(list(word)):
        E = op.apply(E)
        if not E:
            break
    return E


def word_for(kind: str, alpha: Sequence[int]) -> List[OperatorSpec]:
    """The composition building ``S_alpha``, ``H_alpha``, ``C_alpha`` or
    ``B_alpha`` from 1.  For B the factor ``B_{alpha_1}`` is applied first,
    so its word is written in reverse.
    """
    ops = [OperatorSpec(kind, int(a)) for a in alpha]
    if kind == "B":
        ops.reverse()
    return ops


def create(kind: str, alpha: Sequence[int], start: Sequence[int] = ()) -> SchurExpansion:
    return apply_word(word_for(kind, alpha), SchurExpansion.schur(start))


def clear_caches():
    for fn in (_mul_h_kernel, _h_perp_kernel, _mul_e_kernel, _e_perp_kernel,
               s_single, co_s_single, _h_kernel, _c_kernel, _b_kernel):
        fn.cache_clear()

