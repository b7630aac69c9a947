"""Abacus-histories: enumeration, bookkeeping, the S_m cancellation
involution, and ASCII rendering.

A history is a stack of abacus rows.  Row 0 is the input; each operator in
the word (applied right to left) contributes one time step:

* ``S(m)``   create a bead in the gap labelled ``m``;
* ``H(m)``   move beads west ``c`` steps in total (avoiding positions
  occupied at the start of the step), then create a bead in the gap now
  labelled ``m + c``; weight ``q**c``;
* ``C(m)``   the same moves with weight ``q**-c``; the constant
  ``(-1/q)**(m-1)`` is applied when histories are summed;
* ``B(m)``   natively: ``d`` distinct beads step west by one, then the
  bead labelled ``m + d`` is destroyed; weight ``q**d``.  By default a
  word without C steps is instead run on the conjugate input with H and B
  swapped, and final partitions are conjugated.

Positions below 0 are permanently beads, so rows are plain
:class:`~abacus_histories.partitions.Abacus` values in one fixed frame.
Enumeration is depth first; within a step, choices are ordered
lexicographically by displacement vector (rightmost bead first), and for
native B steps by ``d`` and then by the chosen set of beads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .operators import (OperatorSpec, all_west_moves, east_moves,
                        step_moves, word_for)
from .partitions import Abacus, Partition, conjugate, from_abacus, partition
from .qlaurent import Accumulator, QLaurent, SchurExpansion


class HistoryError(ValueError):
    pass


class _Fixed:
    """Marker returned by involutions for fixed points."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "FIXED"


FIXED = _Fixed()

STEP_KINDS = ("WestMoves", "EastMoves", "ZigSE", "ZigSW",
              "CreateBead", "DestroyBead", "Plain")


@dataclass(frozen=True)
class HistoryStep:
    kind: str
    moves: Tuple[int, ...]          # displacement of each bead of the row above
    created: Optional[int] = None
    destroyed: Optional[int] = None
    op: Optional[OperatorSpec] = None

    @property
    def west_steps(self) -> int:
        return -sum(d for d in self.moves if d < 0)

    @property
    def east_steps(self) -> int:
        return sum(d for d in self.moves if d > 0)


@dataclass(frozen=True)
class AbacusHistory:
    rows: Tuple[Abacus, ...]
    steps: Tuple[HistoryStep, ...]
    sign: int
    qpower: int
    final: Partition
    conjugated: bool = False

    @property
    def weight(self) -> QLaurent:
        return QLaurent.monomial(self.qpower, self.sign)

    def key(self):
        return tuple(r.beads for r in self.rows)

    def to_json(self) -> dict:
        return {
            "rows": [list(r.beads) for r in self.rows],
            "steps": [
                {"kind": s.kind, "op": None if s.op is None else str(s.op),
                 "moves": list(s.moves), "created": s.created,
                 "destroyed": s.destroyed}
                for s in self.steps
            ],
            "sign": self.sign,
            "qpower": self.qpower,
            "final": list(self.final),
        }


def _abacus(beads) -> Abacus:
    # rows produced here are valid by construction
    a = object.__new__(Abacus)
    object.__setattr__(a, "beads", tuple(beads))
    return a


def _insert_desc(beads: Tuple[int, ...], p: int) -> Tuple[int, int, Tuple[int, ...]]:
    """Insert p into a descending tuple; return (#beads right of p, index, new)."""
    i = 0
    n = len(beads)
    while i < n and beads[i] > p:
        i += 1
    return i, i, beads[:i] + (p,) + beads[i:]


# -- single-step kernels -------------------------------------------------------
# Each yields (step, new_beads, sign, qdelta).

def _create_steps(op: OperatorSpec, beads: Tuple[int, ...]):
    m = op.m
    if op.kind == "S":
        p = m + len(beads)
        if p >= 0 and p not in beads:
            right, _, new = _insert_desc(beads, p)
            step = HistoryStep("CreateBead", (0,) * len(beads), created=p, op=op)
            yield step, new, (-1 if right % 2 else 1), 0
        return
    sgn_q = 1 if op.kind == "H" else -1
    n = len(beads)
    for c, moved in all_west_moves(beads):
        p = m + c + n
        if p < 0 or p in moved:
            continue
        right, _, new = _insert_desc(moved, p)
        disp = tuple(x - y for x, y in zip(moved, beads))
        step = HistoryStep("WestMoves", disp, created=p, op=op)
        yield step, new, (-1 if right % 2 else 1), sgn_q * c


def _southwest_choices(beads: Tuple[int, ...]):
    """All ways for distinct beads to step west by one without collisions,
    as (d, chosen indices, new beads), ordered by d then by indices.

    Within a run of consecutive beads only a leftmost stretch can move, and
    a run touching position 0 cannot move at all.
    """
    n = len(beads)
    runs = []                      # (first index, length), leftmost bead last
    i = 0
    while i < n:
        j = i
        while j + 1 < n and beads[j + 1] == beads[j] - 1:
            j += 1
        if beads[j] > 0:
            runs.append((i, j - i + 1))
        i = j + 1
    out = []

    def rec(r, chosen):
        if r == len(runs):
            out.append((len(chosen), tuple(sorted(chosen))))
            return
        first, length = runs[r]
        last = first + length - 1
        for k in range(length + 1):
            rec(r + 1, chosen + list(range(last - k + 1, last + 1)))

    rec(0, [])
    out.sort()
    for d, chosen in out:
        moved = set(chosen)
        yield d, tuple(b - 1 if i in moved else b for i, b in enumerate(beads))


def _destroy_steps(op: OperatorSpec, beads: Tuple[int, ...]):
    m = op.m
    n = len(beads)
    for d, moved in _southwest_choices(beads):
        # explicit bead at x has label n - 1 - x
        x = n - 1 - (m + d)
        if x < 0:
            raise HistoryError("bead padding too small for native B step")
        if x not in moved:
            continue
        rank = sum(1 for y in moved if y < x)
        g = x - rank
        new = tuple(y for y in moved if y != x)
        disp = tuple(y - z for y, z in zip(moved, beads))
        step = HistoryStep("ZigSW", disp, destroyed=x, op=op)
        yield step, new, (-1 if g % 2 else 1), d


def _step_choices(op: OperatorSpec, beads):
    if op.kind in ("S", "H", "C"):
        return _create_steps(op, beads)
    if op.kind == "B":
        return _destroy_steps(op, beads)
    raise HistoryError(f"no history model for operator {op}")


# -- planning ------------------------------------------------------------------

@dataclass(frozen=True)
class _Plan:
    ops: Tuple[OperatorSpec, ...]     # in time order (first applied first)
    start: Abacus
    conjugated: bool


def _plan(word: Sequence[OperatorSpec], start: Sequence[int], b_mode: str) -> _Plan:
    word = list(word)
    if not word:
        raise HistoryError("history enumeration needs a nonempty word")
    for op in word:
        if op.kind not in ("S", "H", "C", "B"):
            raise HistoryError(f"operator {op} has no history model")
    if b_mode not in ("omega", "native"):
        raise ValueError(f"unknown B mode {b_mode!r}")
    mu = partition(start)
    ops = tuple(reversed(word))
    conjugated = False
    has_b = any(op.kind == "B" for op in ops)
    if has_b and b_mode == "omega" and all(op.kind in ("H", "B") for op in ops):
        swap = {"H": "B", "B": "H"}
        ops = tuple(OperatorSpec(swap[op.kind], op.m) for op in ops)
        mu = conjugate(mu)
        conjugated = True
        has_b = any(op.kind == "B" for op in ops)
    n0 = len(mu)
    if has_b:
        # every bead a native B step may destroy must be explicit
        grow = sum(max(op.m, 0) for op in ops)
        n0 = len(mu) + sum(mu) + 2 * grow + 2 * len(ops) + 2
    return _Plan(ops, _abacus(tuple(p + n0 - 1 - i for i, p in
                                    enumerate(mu + (0,) * (n0 - len(mu))))),
                 conjugated)


# -- enumeration -----------------------------------------------------------

def _finish(plan: _Plan, rows, steps, sign, qpower) -> AbacusHistory:
    final = from_abacus(rows[-1])
    if plan.conjugated:
        final = conjugate(final)
    return AbacusHistory(tuple(rows), tuple(steps), sign, qpower, final,
                         plan.conjugated)


def _dfs(plan: _Plan, t: int, rows: List[Abacus], steps: List[HistoryStep],
         sign: int, qpower: int) -> Iterator[AbacusHistory]:
    if t == len(plan.ops):
        yield _finish(plan, rows, steps, sign, qpower)
        return
    for step, new, s, dq in _step_choices(plan.ops[t], rows[-1].beads):
        rows.append(_abacus(new))
        steps.append(step)
        yield from _dfs(plan, t + 1, rows, steps, sign * s, qpower + dq)
        rows.pop()
        steps.pop()


def enumerate_histories(word: Sequence[OperatorSpec], start: Sequence[int] = (),
                        b_mode: str = "omega") -> Iterator[AbacusHistory]:
    """Lazily yield every surviving abacus-history for ``word`` on ``s_start``.

    ``word`` is written as an operator composition (rightmost acts first).
    """
    plan = _plan(word, start, b_mode)
    yield from _dfs(plan, 0, [plan.start], [], 1, 0)


def history_prefixes(word, start=(), b_mode="omega", depth=1):
    """Partial histories after ``depth`` steps, in enumeration order.

    Each item can be passed to :func:`enumerate_from_prefix`; concatenating
    the results in order reproduces :func:`enumerate_histories`.
    """
    plan = _plan(word, start, b_mode)
    depth = min(depth, len(plan.ops))
    out = []

    def rec(t, rows, steps, sign, qpower):
        if t == depth:
            out.append((tuple(rows), tuple(steps), sign, qpower))
            return
        for step, new, s, dq in _step_choices(plan.ops[t], rows[-1].beads):
            rec(t + 1, rows + [_abacus(new)], steps + [step], sign * s, qpower + dq)

    rec(0, [plan.start], [], 1, 0)
    return out


def enumerate_from_prefix(word, start, b_mode, prefix) -> Iterator[AbacusHistory]:
    plan = _plan(word, start, b_mode)
    rows, steps, sign, qpower = prefix
    yield from _dfs(plan, len(steps), list(rows), list(steps), sign, qpower)


def count_histories(word: Sequence[OperatorSpec], start: Sequence[int] = (),
                    b_mode: str = "omega") -> int:
    """Number of surviving histories, without building history objects."""
    plan = _plan(word, start, b_mode)
    ops = plan.ops
    last = len(ops)

    def rec(t, beads):
        if t == last:
            return 1
        op = ops[t]
        if op.kind in ("H", "C"):
            total = 0
            n = len(beads)
            m = op.m
            for c, moved in all_west_moves(beads):
                p = m + c + n
                if p >= 0 and p not in moved:
                    if t + 1 == last:
                        total += 1
                    else:
                        total += rec(t + 1, _insert_desc(moved, p)[2])
            return total
        return sum(rec(t + 1, new) for _, new, _, _ in _step_choices(op, beads))

    return rec(0, plan.start.beads)


def word_prefactor(word: Sequence[OperatorSpec]) -> QLaurent:
    """Constant factor ``(-1/q)**(m-1)`` contributed by each C step."""
    k = sum(op.m - 1 for op in word if op.kind == "C")
    return QLaurent.monomial(-k, -1 if k % 2 else 1)


def sum_histories(word: Sequence[OperatorSpec], start: Sequence[int] = (),
                  b_mode: str = "omega", histories=None) -> SchurExpansion:
    """Signed, weighted sum of the histories, times the C-step constant."""
    if histories is None:
        histories = enumerate_histories(word, start, b_mode)
    acc = Accumulator()
    pre = word_prefactor(word)
    for h in histories:
        acc.add(h.final, QLaurent.monomial(h.qpower, h.sign) * pre)
    return acc.freeze()


def recompute_sign_qpower(h: AbacusHistory) -> Tuple[int, int]:
    """Recompute sign and q-power from the rows and steps alone."""
    sign, qpower = 1, 0
    for i, step in enumerate(h.steps):
        before, after = h.rows[i].beads, h.rows[i + 1].beads
        moved = tuple(b + d for b, d in zip(before, step.moves))
        kind = step.op.kind if step.op is not None else None
        if step.created is not None:
            if set(after) != set(moved) | {step.created}:
                raise HistoryError(f"row {i + 1} does not follow from step {i}")
            right = sum(1 for x in moved if x > step.created)
            sign *= -1 if right % 2 else 1
        elif step.destroyed is not None:
            if set(after) != set(moved) - {step.destroyed}:
                raise HistoryError(f"row {i + 1} does not follow from step {i}")
            g = step.destroyed - sum(1 for x in moved if x < step.destroyed)
            sign *= -1 if g % 2 else 1
        elif tuple(after) != moved:
            raise HistoryError(f"row {i + 1} does not follow from step {i}")
        if kind == "H":
            qpower += step.west_steps
        elif kind == "C":
            qpower -= step.west_steps
        elif kind == "B":
            qpower += step.west_steps
        elif kind is None and step.kind == "ZigSW":
            sign *= -1 if step.west_steps % 2 else 1
    return sign, qpower


def default_start_positions(alpha: Sequence[int]) -> Tuple[int, ...]:
    """Positions where the new beads of ``H_alpha`` appear when no bead
    moves west: ``(alpha_L, alpha_{L-1} + 1, ..., alpha_1 + L - 1)``."""
    L = len(alpha)
    return tuple(alpha[L - 1 - t] + t for t in range(L))


def actual_start_positions(h: AbacusHistory) -> Tuple[int, ...]:
    return tuple(s.created for s in h.steps)


# -- raw two-step histories for S_m and their cancellation ----------------

def enumerate_S_raw(m: int, mu: Sequence[int]) -> Iterator[AbacusHistory]:
    """Two-step histories for ``sum_c (-1)^c h_{m+c} e_c^perp`` on ``s_mu``.

    Step 1 moves ``c`` distinct beads one step southwest; step 2 moves beads
    east ``m + c`` steps in total, avoiding positions occupied at the start
    of step 2.  The input abacus carries one zero part.
    """
    mu = partition(mu)
    n = len(mu) + 1
    start = _abacus(tuple(p + n - 1 - i for i, p in enumerate(mu + (0,))))
    beads = start.beads
    for c in range(n + 1):
        if m + c < 0:
            continue
        for mid in step_moves(beads, c, -1):
            sw = tuple(y - x for x, y in zip(beads, mid))
            for end in east_moves(mid, m + c):
                east = tuple(y - x for x, y in zip(mid, end))
                yield _raw_history(start, sw, east)


def _raw_history(start: Abacus, sw, east) -> AbacusHistory:
    mid = tuple(b + d for b, d in zip(start.beads, sw))
    end = tuple(b + d for b, d in zip(mid, east))
    c = -sum(sw)
    steps = (HistoryStep("ZigSW", tuple(sw)), HistoryStep("EastMoves", tuple(east)))
    rows = (start, _abacus(mid), _abacus(end))
    return AbacusHistory(rows, steps, -1 if c % 2 else 1, 0, from_abacus(rows[-1]))


def _validate_raw(start: Abacus, sw, east):
    beads = start.beads
    n = len(beads)
    if any(d not in (0, -1) for d in sw):
        raise HistoryError("first step must be south or southwest moves")
    mid = [b + d for b, d in zip(beads, sw)]
    if (mid and mid[-1] < 0) or any(mid[i] <= mid[i + 1] for i in range(n - 1)):
        raise HistoryError("southwest moves collide")
    for i, e in enumerate(east):
        if e < 0 or (i > 0 and mid[i] + e >= mid[i - 1]):
            raise HistoryError("east moves enter an occupied position")


def _raw_vectors(h: AbacusHistory):
    if len(h.steps) != 2 or h.steps[0].kind != "ZigSW" or h.steps[1].kind != "EastMoves":
        raise HistoryError("not a raw S_m history")
    return list(h.steps[0].moves), list(h.steps[1].moves)


def s_involution(h: AbacusHistory):
    """Sign-reversing involution on raw ``S_m`` histories.

    Scanning beads from the left, find the first one that either
    (1) steps southwest and then moves east ``i > 0`` steps, or
    (2) steps south and has a gap immediately to its left that no bead
    visits during step 2.  Pattern (1) becomes a south step followed by
    ``i - 1`` east steps; pattern (2) the reverse.  Returns ``FIXED`` when
    neither pattern occurs.
    """
    sw, east = _raw_vectors(h)
    start = h.rows[0]
    _validate_raw(start, sw, east)
    mid = h.rows[1].beads
    n = len(sw)
    visited = set()
    for i in range(n):
        visited.update(range(mid[i] + 1, mid[i] + east[i] + 1))
    occupied = set(mid)
    for j in range(n - 1, -1, -1):
        x = start.beads[j]
        if sw[j] == -1 and east[j] > 0:
            sw[j], east[j] = 0, east[j] - 1
            break
        if sw[j] == 0 and x - 1 >= 0 and x - 1 not in occupied and x - 1 not in visited:
            sw[j], east[j] = -1, east[j] + 1
            break
    else:
        return FIXED
    _validate_raw(start, sw, east)
    return _raw_history(start, tuple(sw), tuple(east))


def is_structural_fixed_point(h: AbacusHistory) -> bool:
    """Check the shape every uncancelled raw ``S_m`` history must have:
    the zig-down beads (southwest then no east moves) are exactly the
    rightmost k beads, the leftmost of them starts a block, the next bead
    P moves east fewer steps than the gaps before the zig-down beads (any
    amount if k = 0), and every other bead moves as far east as it can.
    """
    sw, east = _raw_vectors(h)
    beads = h.rows[0].beads
    n = len(beads)
    zig = [sw[i] == -1 and east[i] == 0 for i in range(n)]
    k = 0
    while k < n and zig[k]:
        k += 1
    if any(zig[k:]) or any(sw[i] != 0 for i in range(k, n)):
        return False
    if k:
        q = beads[k - 1]
        if q - 1 < 0 or (k < n and beads[k] == q - 1):
            return False
        if k < n and not 0 <= east[k] < q - beads[k] - 1:
            return False
    for i in range(k + 1, n):
        if east[i] != beads[i - 1] - beads[i] - 1:
            return False
    return True


# -- rendering -------------------------------------------------------------

def _move_glyph(d: int) -> str:
    if d == 0:
        return " | "
    if d == -1:
        return " / "
    if d == 1:
        return " \\ "
    if d < 0:
        return f"<{-d}".ljust(3)
    return f">{d}".ljust(3)


def render_history(h: AbacusHistory) -> str:
    """Multi-row ASCII picture: ``o`` bead, ``.`` gap, ``(o)`` a bead just
    created, `` x `` a bead just destroyed; between rows, one glyph per bead
    of the upper row at its column (``|`` south, ``/`` southwest, ``\\``
    southeast, ``<k``/``>k`` k steps west/east)."""
    width = 1 + max((r.beads[0] for r in h.rows if r.beads), default=-1) + 1
    width = max(width, 1)
    lines = []
    sgn = "+" if h.sign > 0 else "-"
    final = "s[" + ",".join(map(str, h.final)) + "]"
    lines.append(f"{sgn} q^{h.qpower} {final}" + ("  (conjugated)" if h.conjugated else ""))
    lines.append("".join(f"{i:>3}" for i in range(width)))
    lines.append(_render_row(h.rows[0].beads, width))
    for i, step in enumerate(h.steps):
        cells = ["   "] * width
        for b, d in zip(h.rows[i].beads, step.moves):
            if b < width:
                cells[b] = _move_glyph(d)
        lines.append("".join(cells).rstrip())
        lines.append(_render_row(h.rows[i + 1].beads, width, step.created, step.destroyed))
    return "\n".join(line.rstrip() for line in lines)


def format_history(h: AbacusHistory, fmt: str = "text") -> str:
    """One history as a text picture (``text``) or a JSON line (``json``)."""
    if fmt == "json":
        return json.dumps(h.to_json(), separators=(",", ":"))
    if fmt == "text":
        return render_history(h) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _render_row(beads, width, created=None, destroyed=None) -> str:
    occupied = set(beads)
    cells = []
    for i in range(width):
        if i == created:
            cells.append("(o)")
        elif i == destroyed:
            cells.append(" x ")
        elif i in occupied:
            cells.append(" o ")
        else:
            cells.append(" . ")
    return "".join(cells)


def creation_word(kind: str, alpha: Sequence[int]):
    """Alias of :func:`abacus_histories.operators.word_for`."""
    return word_for(kind, alpha)

