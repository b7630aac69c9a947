"""Three-row Hall-Littlewood coefficients and the sign-reversing involution
on three-bead histories of ``H_nu``.

For ``nu = (nu1, nu2, nu3)`` the word acts ``H(nu3)`` first.  A history is
determined by three west-step counts: bead 1 (created at ``nu3``) moves
``a`` steps in the second time step and ``b`` in the third, while bead 2
(created at ``nu2 + 1 + a``) moves ``c`` steps in the third.  Bead 3 is
created at ``nu1 + 2 + b + c``.  The history is negative exactly when bead
3 lands left of bead 2.
"""

from __future__ import annotations

from typing import Dict, NamedTuple, Sequence, Tuple

from .histories import (FIXED, AbacusHistory, HistoryError, enumerate_histories,
                        sum_histories)
from .operators import create, word_for
from .partitions import Partition, partition, partitions_of
from .qlaurent import QLaurent, SchurExpansion


class DomainError(ValueError):
    pass


class ThreeRowParams(NamedTuple):
    a: int
    b: int
    c: int
    k: int      # signed distance from bead 2 to bead 3 in the bottom row


def three_row_coeff(nu: Sequence[int], lam: Sequence[int]) -> QLaurent:
    """Coefficient of ``s_lam`` in ``H_nu`` for a three-part ``nu``."""
    try:
        nu = partition(nu)
        lam = partition(lam)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if len(nu) != 3:
        raise DomainError(f"need exactly three nonzero parts, got {nu}")
    if len(lam) > 3:
        raise DomainError(f"{lam} has more than three parts")
    if sum(lam) != sum(nu):
        raise DomainError(f"sizes differ: |{nu}| != |{lam}|")
    l1, l2, l3 = lam + (0,) * (3 - len(lam))
    n1, _, n3 = nu
    top = min(l1 - l2, l2 - l3, n3 - l3, l1 - n1)
    e = n3 - l3 + l1 - n1
    return QLaurent.from_dict({e - b: 1 for b in range(top + 1)})


def _three_row_nu(h: AbacusHistory) -> Tuple[int, int, int]:
    steps = h.steps
    if (len(steps) != 3 or h.conjugated
            or any(s.op is None or s.op.kind != "H" for s in steps)
            or h.rows[0].beads):
        raise HistoryError("not a three-step H history on the empty partition")
    return steps[2].op.m, steps[1].op.m, steps[0].op.m


def three_row_params(h: AbacusHistory) -> ThreeRowParams:
    nu = _three_row_nu(h)
    (a,) = h.steps[1].moves
    c, b = h.steps[2].moves
    a, b, c = -a, -b, -c
    bead2 = h.rows[3].beads
    p3 = h.steps[2].created
    p2 = nu[1] + 1 + a - c
    if p2 not in bead2:
        raise HistoryError("history rows do not match its steps")
    return ThreeRowParams(a, b, c, p3 - p2)


def build_three_row(nu: Sequence[int], a: int, b: int, c: int) -> AbacusHistory:
    """The unique history of ``H_nu`` with west-step counts ``(a, b, c)``."""
    nu = tuple(nu)
    target = ((), (-a,), (-c, -b))
    for h in enumerate_histories(word_for("H", nu)):
        if tuple(s.moves for s in h.steps) == target:
            return h
    raise HistoryError(f"no history of H{nu} with (a, b, c) = {(a, b, c)}")


def three_row_involution(h: AbacusHistory):
    """Pair negative histories with positive ones of equal weight and final
    partition; return ``FIXED`` for unmatched positive histories."""
    nu = _three_row_nu(h)
    a, b, c, k = three_row_params(h)
    if k < 0:
        k = -k
        return build_three_row(nu, a - k, b + k, c)
    if k <= b:
        return build_three_row(nu, a + k, b - k, c)
    return FIXED


def three_row_table(n: int) -> Dict[Tuple[Partition, Partition], QLaurent]:
    """Coefficients of ``s_lam`` in ``H_nu`` for every ``nu`` of size ``n``
    with at most three parts.  Three-part ``nu`` use the closed formula;
    shorter ones sum their (all positive) histories."""
    if n < 1:
        raise DomainError("n must be positive")
    table = {}
    lams = list(partitions_of(n, max_length=3))
    for nu in partitions_of(n, max_length=3):
        if len(nu) == 3:
            for lam in lams:
                coeff = three_row_coeff(nu, lam)
                if not coeff.is_zero():
                    table[(nu, lam)] = coeff
        else:
            for lam, coeff in sum_histories(word_for("H", nu)).items():
                table[(nu, lam)] = coeff
    return table


def hall_littlewood(nu: Sequence[int]) -> SchurExpansion:
    """``H_nu`` applied to 1, via the operator engine."""
    return create("H", nu)
