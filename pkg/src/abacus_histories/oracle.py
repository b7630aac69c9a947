"""Brute-force reference implementations on Ferrers diagrams.

Nothing here touches abaci.  Pieri rules are enumerated row by row from
the strip inequalities, determinants are expanded directly, and the
three-step recipe for ``B_m`` is run on diagrams.  These exist to
cross-check the operator engine.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterator, NamedTuple, Sequence, Tuple

from .partitions import Partition, partition
from .qlaurent import Accumulator, QLaurent, SchurExpansion

MAX_JT_LENGTH = 12


class OracleSizeError(ValueError):
    pass


class SkewCheck(NamedTuple):
    inner: Partition
    outer: Partition

    def contained(self) -> bool:
        inner, outer = self.inner, self.outer
        return len(inner) <= len(outer) and all(i <= o for i, o in zip(inner, outer))

    def is_horizontal_strip(self) -> bool:
        if not self.contained():
            return False
        inner, outer = self.inner, self.outer
        for i, o in enumerate(outer):
            nxt = outer[i + 1] if i + 1 < len(outer) else 0
            have = inner[i] if i < len(inner) else 0
            if not o >= have >= nxt:
                return False
        return True

    def is_vertical_strip(self) -> bool:
        if not self.contained():
            return False
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return all(0 <= o - i <= 1 for o, i in zip(self.outer, inner))


def _fill(bounds, total) -> Iterator[Tuple[int, ...]]:
    """All vectors x with lo_i <= x_i <= hi_i summing to ``total``."""
    n = len(bounds)
    room = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        room[i] = room[i + 1] + bounds[i][1] - bounds[i][0]
    out = [0] * n

    def rec(i, left):
        if i == n:
            if left == 0:
                yield tuple(out)
            return
        lo, hi = bounds[i]
        for x in range(lo, hi + 1):
            extra = x - lo
            if extra > left:
                break
            if left - extra > room[i + 1]:
                continue
            out[i] = x
            yield from rec(i + 1, left - extra)

    extra = total - sum(lo for lo, _ in bounds)
    if extra >= 0:
        yield from rec(0, extra)


@lru_cache(maxsize=None)
def _add_horizontal(c: int, mu: Partition) -> Tuple[Partition, ...]:
    if c < 0:
        return ()
    rows = mu + (0,)
    bounds = [(rows[i], rows[i - 1] if i else rows[0] + c) for i in range(len(rows))]
    return tuple(partition(v) for v in _fill(bounds, sum(mu) + c))


@lru_cache(maxsize=None)
def _remove_horizontal(c: int, mu: Partition) -> Tuple[Partition, ...]:
    if c < 0:
        return ()
    n = len(mu)
    bounds = [(mu[i + 1] if i + 1 < n else 0, mu[i]) for i in range(n)]
    lo = sum(b[0] for b in bounds)
    target = sum(mu) - c
    if target < lo:
        return ()
    return tuple(partition(v) for v in _fill(bounds, target))


@lru_cache(maxsize=None)
def _add_vertical(c: int, mu: Partition) -> Tuple[Partition, ...]:
    if c < 0:
        return ()
    rows = mu + (0,) * c
    out = []
    for v in _fill([(r, r + 1) for r in rows], sum(mu) + c):
        if all(v[i] >= v[i + 1] for i in range(len(v) - 1)):
            out.append(partition(v))
    return tuple(out)


@lru_cache(maxsize=None)
def _remove_vertical(c: int, mu: Partition) -> Tuple[Partition, ...]:
    if c < 0 or c > len(mu):
        return ()
    out = []
    for v in _fill([(r - 1, r) for r in mu], sum(mu) - c):
        if all(v[i] >= v[i + 1] for i in range(len(v) - 1)):
            out.append(partition(v))
    return tuple(out)


def _expansion(shapes) -> SchurExpansion:
    acc = Accumulator()
    for lam in shapes:
        acc.add(lam, QLaurent.monomial(0, 1))
    return acc.freeze()


def ferrers_mul_h(c: int, mu: Sequence[int]) -> SchurExpansion:
    mu = partition(mu)
    shapes = _add_horizontal(c, mu)
    return _expansion(shapes)


def ferrers_h_perp(c: int, mu: Sequence[int]) -> SchurExpansion:
    mu = partition(mu)
    return _expansion(_remove_horizontal(c, mu))


def ferrers_mul_e(c: int, mu: Sequence[int]) -> SchurExpansion:
    mu = partition(mu)
    return _expansion(_add_vertical(c, mu))


def ferrers_e_perp(c: int, mu: Sequence[int]) -> SchurExpansion:
    mu = partition(mu)
    return _expansion(_remove_vertical(c, mu))


def _apply_h(c: int, vec: Dict[Partition, int]) -> Dict[Partition, int]:
    out: Dict[Partition, int] = {}
    for mu, k in vec.items():
        for lam in _add_horizontal(c, mu):
            out[lam] = out.get(lam, 0) + k
    return {lam: k for lam, k in out.items() if k}


def jacobi_trudi(alpha: Sequence[int]) -> SchurExpansion:
    """Schur expansion of ``det(h_{alpha_i + j - i})``.

    The determinant is expanded row by row over the set of columns already
    used, which sums the same signed monomials as the permutation
    expansion while sharing common prefixes.
    """
    alpha = tuple(int(a) for a in alpha)
    L = len(alpha)
    if L > MAX_JT_LENGTH:
        raise OracleSizeError(f"length {L} exceeds the limit {MAX_JT_LENGTH}")
    # state: bitmask of used columns -> signed Schur vector
    layer: Dict[int, Dict[Partition, int]] = {0: {(): 1}}
    for i in range(L):
        nxt: Dict[int, Dict[Partition, int]] = {}
        for used, vec in layer.items():
            for j in range(L):
                if used >> j & 1:
                    continue
                k = alpha[i] + j - i
                if k < 0:
                    continue
                # inversions with earlier rows, which took larger columns
                flips = bin(used >> (j + 1)).count("1")
                prod = _apply_h(k, vec)
                if not prod:
                    continue
                key = used | (1 << j)
                bucket = nxt.setdefault(key, {})
                sgn = -1 if flips % 2 else 1
                for lam, v in prod.items():
                    bucket[lam] = bucket.get(lam, 0) + sgn * v
        layer = {u: {lam: v for lam, v in vec.items() if v} for u, vec in nxt.items()}
    acc = Accumulator()
    for vec in layer.values():
        for lam, v in vec.items():
            acc.add(lam, QLaurent.monomial(0, v))
    return acc.freeze()


def ferrers_B(m: int, mu: Sequence[int]) -> SchurExpansion:
    """``sum_{c,d} (-1)^c q^d``: remove a vertical strip of size d, then a
    horizontal strip of size c, then add a vertical strip of size m+d+c."""
    mu = partition(mu)
    acc = Accumulator()
    n = sum(mu)
    for d in range(len(mu) + 1):
        for nu in _remove_vertical(d, mu):
            for c in range(n - d + 1):
                for rho in _remove_horizontal(c, nu):
                    w = QLaurent.monomial(d, -1 if c % 2 else 1)
                    for lam in _add_vertical(m + d + c, rho):
                        acc.add(lam, w)
    return acc.freeze()
