"""Property suites behind ``abacus-histories check``.

Each suite walks its cases from small to large and stops at the first
failure, so the reported counterexample is the first (smallest) one in
that order.  Random suites use fixed seeds.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import operators as ops
from .histories import (FIXED, count_histories, enumerate_S_raw,
                        enumerate_histories, is_structural_fixed_point,
                        recompute_sign_qpower, s_involution, sum_histories)
from .operators import OperatorSpec, apply_word, format_word, word_for
from .oracle import (ferrers_B, ferrers_e_perp, ferrers_h_perp, ferrers_mul_e,
                     ferrers_mul_h, jacobi_trudi)
from .partitions import partitions_of, partitions_up_to, render_partition
from .qlaurent import QLaurent, SchurExpansion
from .threerow import (three_row_coeff, three_row_involution)

LEVELS = ("quick", "full")


def expansion(terms: Dict[Tuple[int, ...], Dict[int, int]]) -> SchurExpansion:
    """Build an expansion from ``{partition: {q-exponent: coefficient}}``."""
    out = SchurExpansion.zero()
    for mu, poly in terms.items():
        out = out + SchurExpansion.schur(mu, QLaurent.from_dict(poly))
    return out


BIG_MU = (8, 8, 8, 4, 4, 2, 2, 1)
BIG_MU_VALUES = {
    4: (-1, (7, 7, 7, 7, 4, 4, 2, 2, 1)),
    3: (-1, (7, 7, 7, 6, 4, 4, 2, 2, 1)),
    2: (-1, (7, 7, 7, 5, 4, 4, 2, 2, 1)),
    1: (-1, (7, 7, 7, 4, 4, 4, 2, 2, 1)),
    -2: (-1, (7, 7, 7, 3, 3, 3, 2, 2, 1)),
    -3: (-1, (7, 7, 7, 3, 3, 2, 2, 2, 1)),
    -6: (-1, (7, 7, 7, 3, 3, 1, 1, 1, 1)),
    -8: (1, (7, 7, 7, 3, 3, 1, 1)),
}


def big_mu_expected(m: int) -> SchurExpansion:
    if m >= 8:
        return SchurExpansion.schur((m,) + BIG_MU)
    if m in BIG_MU_VALUES:
        sign, lam = BIG_MU_VALUES[m]
        return SchurExpansion.schur(lam, sign)
    return SchurExpansion.zero()


# (word text, start partition, expected expansion)
WORKED_EXAMPLES = [
    ("H(-2)", (3, 1), expansion({(2,): {0: 1, 1: -1}, (1, 1): {3: 1, 2: -1}})),
    ("H(1)", (3, 1), expansion({(2, 2, 1): {1: 1, 0: -1}, (3, 2): {2: 1},
                                (3, 1, 1): {2: 1}, (4, 1): {3: 1}})),
    ("C(-2)", (3, 1), expansion({(2,): {3: -1, 2: 1}, (1, 1): {1: 1, 0: -1}})),
    ("C(1)", (3, 1), expansion({(2, 2, 1): {-1: 1, 0: -1}, (3, 2): {-2: 1},
                                (3, 1, 1): {-2: 1}, (4, 1): {-3: 1}})),
    ("B(-2)", (2, 1, 1), expansion({(1, 1): {0: 1, 1: -1}, (2,): {3: 1, 2: -1}})),
    ("B(1)", (2, 1, 1), expansion({(3, 2): {1: 1, 0: -1}, (2, 2, 1): {2: 1},
                                   (3, 1, 1): {2: 1}, (2, 1, 1, 1): {3: 1}})),
    ("H(1),H(2),H(3)", (), expansion({
        (6,): {8: 1}, (5, 1): {6: 1, 7: 1}, (4, 2): {6: 1, 5: 1, 4: 1, 3: -1},
        (4, 1, 1): {5: 1}, (3, 3): {5: 1}, (3, 2, 1): {4: 1, 3: 1, 2: -1},
        (2, 2, 2): {2: 1, 1: -1}})),
    ("S(2),S(2),S(1)", (), expansion({(2, 2, 1): {0: 1}})),
]

HISTORY_COUNTS = {2: 4, 3: 27, 4: 338, 5: 6262, 6: 168312}
C_WORD_ALPHA = (5, 1, 4, 2, 3, 1)
C_WORD_HISTORIES = 16682


class CheckFailure(Exception):
    pass


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    counterexample: Optional[str] = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.counterexample is None


@dataclass
class _Runner:
    result: SuiteResult

    def equal(self, left, right, **context):
        self.result.cases += 1
        if left != right:
            ctx = ", ".join(f"{k}={_show(v)}" for k, v in context.items())
            raise CheckFailure(f"{ctx}\n  left:  {_show(left)}\n  right: {_show(right)}")

    def holds(self, cond: bool, **context):
        self.equal(bool(cond), True, **context)


def _show(v) -> str:
    if isinstance(v, SchurExpansion):
        return " ".join(str(v).split("\n"))
    if isinstance(v, tuple) and all(isinstance(x, int) for x in v):
        return render_partition(v)
    if isinstance(v, list) and v and isinstance(v[0], OperatorSpec):
        return format_word(v)
    return str(v)


def _s(mu) -> SchurExpansion:
    return SchurExpansion.schur(mu)


# -- suites ------------------------------------------------------------------

def suite_big_partition(run: _Runner, level: str):
    E = _s(BIG_MU)
    for m in range(-12, 13):
        run.equal(ops.bernstein_S(m, E), big_mu_expected(m), m=m, mu=BIG_MU)


def suite_worked(run: _Runner, level: str):
    for text, start, expected in WORKED_EXAMPLES:
        run.equal(apply_word(ops.parse_word(text), _s(start)), expected,
                  word=text, start=start)


def suite_pieri_oracle(run: _Runner, level: str):
    n, cmax = (6, 4) if level == "quick" else (10, 6)
    pairs = [(ops.mul_h, ferrers_mul_h), (ops.h_perp, ferrers_h_perp),
             (ops.mul_e, ferrers_mul_e), (ops.e_perp, ferrers_e_perp)]
    for mu in partitions_up_to(n):
        E = _s(mu)
        for c in range(-1, cmax + 1):
            for engine, oracle in pairs:
                run.equal(engine(c, E), oracle(c, mu), op=engine.__name__, c=c, mu=mu)


def suite_s_triangle(run: _Runner, level: str):
    n, lo, hi = (6, -6, 8) if level == "quick" else (10, -8, 10)
    for mu in partitions_up_to(n):
        E = _s(mu)
        for m in range(lo, hi + 1):
            direct = ops.bernstein_S(m, E)
            st = ops.straighten((m,) + mu)
            via_st = SchurExpansion.zero() if st is None else SchurExpansion.schur(st[1], st[0])
            run.equal(direct, ops.bernstein_S_via_sum(m, E), m=m, mu=mu, via="sum")
            run.equal(direct, via_st, m=m, mu=mu, via="straighten")
            run.equal(direct, jacobi_trudi((m,) + mu), m=m, mu=mu, via="jacobi_trudi")


def suite_b_triangle(run: _Runner, level: str):
    n, r = (5, 3) if level == "quick" else (8, 5)
    for mu in partitions_up_to(n):
        E = _s(mu)
        for m in range(-r, r + 1):
            direct = ops.hmz_B(m, E)
            run.equal(direct, ops.hmz_B_via_sum(m, E), m=m, mu=mu, via="sum")
            run.equal(direct, ferrers_B(m, mu), m=m, mu=mu, via="ferrers")


def _random_partition(rng: random.Random, pool) -> Tuple[int, ...]:
    return pool[rng.randrange(len(pool))]


def commutation_cases(max_size: int = 8, seed: int = 2024):
    """Endless seeded (m, n, mu) triples; every fifth has n = m + 1."""
    rng = random.Random(seed)
    pool = list(partitions_up_to(max_size))
    i = 0
    while True:
        m = rng.randint(-4, 5)
        n = m + 1 if i % 5 == 0 else rng.randint(-4, 5)
        yield m, n, _random_partition(rng, pool)
        i += 1


def commutation_relations():
    """Named relations as (name, lhs(m, n, E), rhs(m, n, E), guard(m, n))."""
    S, C, B = ops.bernstein_S, ops.hmz_C, ops.hmz_B
    return [
        ("S_m S_n = -S_{n-1} S_{m+1}",
         lambda m, n, E: S(m, S(n, E)),
         lambda m, n, E: -S(n - 1, S(m + 1, E)),
         lambda m, n: True),
        ("S_m S_{m+1} = 0",
         lambda m, n, E: S(m, S(m + 1, E)),
         lambda m, n, E: SchurExpansion.zero(),
         lambda m, n: True),
        ("q C_m C_{m+1} = C_{m+1} C_m",
         lambda m, n, E: C(m, C(m + 1, E)) * QLaurent.monomial(1),
         lambda m, n, E: C(m + 1, C(m, E)),
         lambda m, n: True),
        ("q C_m C_n - C_{m+1} C_{n-1} = C_n C_m - q C_{n-1} C_{m+1}",
         lambda m, n, E: C(m, C(n, E)) * QLaurent.monomial(1) - C(m + 1, C(n - 1, E)),
         lambda m, n, E: C(n, C(m, E)) - C(n - 1, C(m + 1, E)) * QLaurent.monomial(1),
         lambda m, n: True),
        ("B_n C_m = q C_m B_n (m + n > 0)",
         lambda m, n, E: B(n, C(m, E)),
         lambda m, n, E: C(m, B(n, E)) * QLaurent.monomial(1),
         lambda m, n: m + n > 0),
    ]


def suite_commutation(run: _Runner, level: str):
    per = 40 if level == "quick" else 200
    size = 6 if level == "quick" else 8
    for name, lhs, rhs, guard in commutation_relations():
        cases = (c for c in commutation_cases(size) if guard(c[0], c[1]))
        for _, (m, n, mu) in zip(range(per), cases):
            E = _s(mu)
            run.equal(lhs(m, n, E), rhs(m, n, E), relation=name, m=m, n=n, mu=mu)


def random_words(n_words: int, seed: int = 11, kinds: str = "HCB",
                 lo: int = -3, hi: int = 4, max_len: int = 4, max_start: int = 3):
    rng = random.Random(seed)
    pool = list(partitions_up_to(max_start))
    out = []
    for _ in range(n_words):
        L = rng.randint(1, max_len)
        word = [OperatorSpec(rng.choice(kinds), rng.randint(lo, hi)) for _ in range(L)]
        out.append((word, _random_partition(rng, pool)))
    return out


def suite_history_master(run: _Runner, level: str):
    n = 30 if level == "quick" else 150
    for word, start in random_words(n):
        engine = apply_word(word, _s(start))
        run.equal(sum_histories(word, start, "omega"), engine,
                  word=word, start=start, b_mode="omega")
        if level == "full" or sum(1 for op in word if op.kind == "B") <= 1:
            run.equal(sum_histories(word, start, "native"), engine,
                      word=word, start=start, b_mode="native")
    for word, start in random_words(n // 3, seed=12, max_len=3):
        for h in enumerate_histories(word, start, "native"):
            run.equal(recompute_sign_qpower(h), (h.sign, h.qpower), word=word, start=start)


def suite_s_involution(run: _Runner, level: str):
    n = 5 if level == "quick" else 8
    for mu in partitions_up_to(n):
        for m in range(-n - 1, n + 2):
            fixed = []
            for h in enumerate_S_raw(m, mu):
                g = s_involution(h)
                if g is FIXED:
                    fixed.append(h)
                    run.holds(is_structural_fixed_point(h), m=m, mu=mu, history=h.key())
                    continue
                run.holds(g.sign == -h.sign and g.final == h.final
                          and s_involution(g).key() == h.key(),
                          m=m, mu=mu, history=h.key())
            total = SchurExpansion.zero()
            for h in fixed:
                total = total + SchurExpansion.schur(h.final, h.sign)
            run.equal(total, ops.bernstein_S(m, _s(mu)), m=m, mu=mu)


def suite_three_row(run: _Runner, level: str):
    n = 8 if level == "quick" else 12
    inv = 7 if level == "quick" else 9
    for size in range(3, n + 1):
        for nu in partitions_of(size, max_length=3):
            E = ops.create("H", nu)
            for lam, coeff in E.items():
                run.holds(all(x >= 0 for x in coeff.coeffs) and coeff.lo >= 0,
                          nu=nu, lam=lam, coeff=coeff)
            if len(nu) < 3:
                continue
            for lam in partitions_of(size, max_length=3):
                run.equal(three_row_coeff(nu, lam), E[lam], nu=nu, lam=lam)
            if size > inv:
                continue
            fixed = []
            for h in enumerate_histories(word_for("H", nu)):
                g = three_row_involution(h)
                if g is FIXED:
                    fixed.append(h)
                    run.holds(h.sign > 0, nu=nu, history=h.key())
                else:
                    run.holds(g.sign == -h.sign and g.qpower == h.qpower
                              and g.final == h.final
                              and three_row_involution(g).key() == h.key(),
                              nu=nu, history=h.key())
            run.equal(sum_histories(word_for("H", nu), histories=fixed), E, nu=nu)


def suite_q_zero(run: _Runner, level: str):
    n = 7 if level == "quick" else 10
    for nu in partitions_up_to(n):
        E = ops.create("H", nu)
        at0 = {lam: int(c.evaluate(0)) for lam, c in E.items() if c.evaluate(0) != 0}
        run.equal(at0, {nu: 1}, nu=nu)


def suite_history_counts(run: _Runner, level: str):
    kmax = 4 if level == "quick" else 6
    for k in range(2, kmax + 1):
        run.equal(count_histories(word_for("H", (3,) * k)), HISTORY_COUNTS[k], alpha=(3,) * k)
    if level == "full":
        run.equal(count_histories(word_for("C", C_WORD_ALPHA)), C_WORD_HISTORIES,
                  alpha=C_WORD_ALPHA)


SUITES: List[Tuple[str, Callable[[_Runner, str], None]]] = [
    ("big-partition", suite_big_partition),
    ("worked-examples", suite_worked),
    ("pieri-oracle", suite_pieri_oracle),
    ("s-triangle", suite_s_triangle),
    ("b-triangle", suite_b_triangle),
    ("commutation", suite_commutation),
    ("history-master", suite_history_master),
    ("s-involution", suite_s_involution),
    ("three-row", suite_three_row),
    ("q-zero", suite_q_zero),
    ("history-counts", suite_history_counts),
]


def run_suite(name: str, level: str = "quick") -> SuiteResult:
    fn = dict(SUITES)[name]
    result = SuiteResult(name)
    t0 = time.perf_counter()
    try:
        fn(_Runner(result), level)
    except CheckFailure as exc:
        result.counterexample = str(exc)
    result.seconds = time.perf_counter() - t0
    return result


def run_checks(level: str = "quick", names: Optional[Sequence[str]] = None):
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    for name, _ in SUITES:
        if names is None or name in names:
            yield run_suite(name, level)
