"""Acceptance criteria, each checked exactly (zero tolerance).

Every test prints one ``PASS``/``FAIL`` line for its criterion, visible
even when pytest captures output.
"""

import io
import random
import time

import pytest

from abacus_histories import operators
from abacus_histories.cli import main
from abacus_histories.histories import (FIXED,
                                        enumerate_histories, enumerate_S_raw,
                                        s_involution, sum_histories)
from abacus_histories.operators import (OperatorSpec, apply_word, bernstein_S,
                                        bernstein_S_via_sum, create, hmz_B,
                                        hmz_C, parse_word, straighten,
                                        word_for)
from abacus_histories.oracle import jacobi_trudi
from abacus_histories.partitions import partitions_of, partitions_up_to
from abacus_histories.qlaurent import Q, SchurExpansion
from abacus_histories.threerow import three_row_coeff

q = Q


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
        if detail:
            line += f" [{detail}]"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return emit


def s(*mu, coeff=1):
    return SchurExpansion.schur(mu, coeff)


def total(*terms):
    out = SchurExpansion.zero()
    for t in terms:
        out = out + t
    return out


def test_criterion_01_bernstein_table(report):
    mu = (8, 8, 8, 4, 4, 2, 2, 1)
    table = {
        4: s(7, 7, 7, 7, 4, 4, 2, 2, 1, coeff=-1),
        3: s(7, 7, 7, 6, 4, 4, 2, 2, 1, coeff=-1),
        2: s(7, 7, 7, 5, 4, 4, 2, 2, 1, coeff=-1),
        1: s(7, 7, 7, 4, 4, 4, 2, 2, 1, coeff=-1),
        -2: s(7, 7, 7, 3, 3, 3, 2, 2, 1, coeff=-1),
        -3: s(7, 7, 7, 3, 3, 2, 2, 2, 1, coeff=-1),
        -6: s(7, 7, 7, 3, 3, 1, 1, 1, 1, coeff=-1),
        -8: s(7, 7, 7, 3, 3, 1, 1),
    }
    operators.clear_caches()
    t0 = time.perf_counter()
    bad = []
    for m in range(-12, 13):
        if m >= 8:
            expected = s(m, *mu)
        else:
            expected = table.get(m, SchurExpansion.zero())
        if bernstein_S(m, s(*mu)) != expected:
            bad.append(m)
    dt = time.perf_counter() - t0
    report(1, "S_m(s_88844221) table for m in [-12, 12]", not bad and dt < 1,
           f"{dt:.3f}s, mismatches {bad}")


def test_criterion_02_s_oracle_triangle(report):
    operators.clear_caches()
    t0 = time.perf_counter()
    bad = None
    cases = 0
    for mu in partitions_up_to(10):
        E = s(*mu)
        for m in range(-8, 11):
            a = bernstein_S(m, E)
            b = bernstein_S_via_sum(m, E)
            st = straighten((m,) + mu)
            c = SchurExpansion.zero() if st is None else s(*st[1], coeff=st[0])
            d = jacobi_trudi((m,) + mu)
            cases += 1
            if not (a == b == c == d):
                bad = (m, mu)
                break
        if bad:
            break
    dt = time.perf_counter() - t0
    report(2, "S_m four ways on |mu| <= 10, m in [-8, 10]", bad is None and dt < 60,
           f"{cases} cases, {dt:.1f}s, first mismatch {bad}")


def test_criterion_03_worked_expansions(report):
    cases = [
        ("H(-2)", (3, 1), s(2, coeff=1 - q) + s(1, 1, coeff=q ** 3 - q ** 2)),
        ("H(1)", (3, 1), total(s(2, 2, 1, coeff=q - 1), s(3, 2, coeff=q ** 2),
                               s(3, 1, 1, coeff=q ** 2), s(4, 1, coeff=q ** 3))),
        ("C(-2)", (3, 1), total(s(2, coeff=-q ** 3), s(2, coeff=q ** 2),
                                s(1, 1, coeff=q), s(1, 1, coeff=-1))),
        ("C(1)", (3, 1), total(s(2, 2, 1, coeff=q ** -1 - 1), s(3, 2, coeff=q ** -2),
                               s(3, 1, 1, coeff=q ** -2), s(4, 1, coeff=q ** -3))),
        ("B(-2)", (2, 1, 1), s(1, 1, coeff=1 - q) + s(2, coeff=q ** 3 - q ** 2)),
        ("B(1)", (2, 1, 1), total(s(3, 2, coeff=q - 1), s(2, 2, 1, coeff=q ** 2),
                                  s(3, 1, 1, coeff=q ** 2), s(2, 1, 1, 1, coeff=q ** 3))),
        ("H(1),H(2),H(3)", (), total(
            s(6, coeff=q ** 8), s(5, 1, coeff=q ** 6 + q ** 7),
            s(4, 2, coeff=q ** 6 + q ** 5 + q ** 4 - q ** 3), s(4, 1, 1, coeff=q ** 5),
            s(3, 3, coeff=q ** 5), s(3, 2, 1, coeff=q ** 4 + q ** 3 - q ** 2),
            s(2, 2, 2, coeff=q ** 2 - q))),
    ]
    bad = []
    for text, start, expected in cases:
        got = apply_word(parse_word(text), s(*start))
        # term for term: same partitions and same coefficient of every power
        same = got.keys() == expected.keys() and all(
            dict(got[mu].terms()) == dict(expected[mu].terms()) for mu in got.keys())
        if not same:
            bad.append(text)
    assert len(cases[-1][2]) == 7
    report(3, "worked H, C, B and H_(123) expansions", not bad, f"mismatches {bad}")


def test_criterion_04_history_counts(report):
    expected = {2: 4, 3: 27, 4: 338, 5: 6262, 6: 168312}
    got, times = {}, {}
    for k in range(2, 7):
        t0 = time.perf_counter()
        got[k] = sum(1 for _ in enumerate_histories(word_for("H", (3,) * k)))
        times[k] = time.perf_counter() - t0
    small = sum(times[k] for k in range(2, 6))
    c_terms = sum(1 for _ in enumerate_histories(word_for("C", (5, 1, 4, 2, 3, 1))))
    ok = got == expected and small < 10 and times[6] < 120 and c_terms == 16682
    report(4, "history counts for (3^k), k=2..6, and C_(5,1,4,2,3,1)", ok,
           f"counts {got}, k<=5 {small:.2f}s, k=6 {times[6]:.2f}s, C terms {c_terms}")


def test_criterion_05_s_involution_counts(report):
    hs = list(enumerate_S_raw(1, (3, 1, 1)))
    index = {h.key(): i for i, h in enumerate(hs)}
    pairs, fixed = set(), []
    involutive = True
    for i, h in enumerate(hs):
        g = s_involution(h)
        if g is FIXED:
            fixed.append(h)
            continue
        j = index[g.key()]
        involutive &= (s_involution(g).key() == h.key() and g.sign == -h.sign
                       and g.final == h.final)
        pairs.add(frozenset((i, j)))
    fixed_sum = total(*(s(*h.final, coeff=h.sign) for h in fixed))
    ok = (len(hs) == 23 and len(pairs) == 11 and len(fixed) == 1
          and fixed[0].sign == -1 and fixed_sum == s(2, 2, 1, 1, coeff=-1) and involutive)
    report(5, "S_1(s_311): 23 histories, 11 pairs, 1 negative fixed point", ok,
           f"{len(hs)} histories, {len(pairs)} pairs, {len(fixed)} fixed")


def test_criterion_06_commutation(report):
    rng = random.Random(20240601)
    pool = list(partitions_up_to(8))
    S, C, B = bernstein_S, hmz_C, hmz_B

    def draw(guard):
        while True:
            m, n = rng.randint(-4, 5), rng.randint(-4, 5)
            if guard(m, n):
                return m, n, rng.choice(pool)

    relations = [
        ("S-commute", lambda m, n: True,
         lambda m, n, E: S(m, S(n, E)) == -S(n - 1, S(m + 1, E))),
        ("S zero case n=m+1", lambda m, n: True,
         lambda m, n, E: not S(m, S(m + 1, E))),
        ("q C_m C_{m+1} = C_{m+1} C_m", lambda m, n: True,
         lambda m, n, E: C(m, C(m + 1, E)) * q == C(m + 1, C(m, E))),
        ("four-term C relation", lambda m, n: True,
         lambda m, n, E: C(m, C(n, E)) * q - C(m + 1, C(n - 1, E))
         == C(n, C(m, E)) - C(n - 1, C(m + 1, E)) * q),
        ("B_n C_m = q C_m B_n", lambda m, n: m + n > 0,
         lambda m, n, E: B(n, C(m, E)) == C(m, B(n, E)) * q),
    ]
    failures = []
    counts = {}
    for name, guard, holds in relations:
        counts[name] = 0
        for _ in range(200):
            m, n, mu = draw(guard)
            counts[name] += 1
            if not holds(m, n, s(*mu)):
                failures.append((name, m, n, mu))
                break
    report(6, "commutation relations, 200 random cases each", not failures,
           f"cases {sorted(counts.values())}, failures {failures[:3]}")


def test_criterion_07_three_row_theorem(report):
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for n in range(3, 13):
        lams = list(partitions_of(n))
        for nu in partitions_of(n, max_length=3):
            if len(nu) < 3:
                continue
            E = sum_histories(word_for("H", nu))
            for lam in lams:
                coeff = E[lam]
                checked += 1
                if coeff.lo < 0 or any(c < 0 for c in coeff.coeffs):
                    bad.append(("negative", nu, lam))
                if len(lam) <= 3:
                    if three_row_coeff(nu, lam) != coeff:
                        bad.append(("formula", nu, lam))
                elif not coeff.is_zero():
                    bad.append(("too long", nu, lam))
    dt = time.perf_counter() - t0
    report(7, "three-row coefficient formula for |nu| <= 12", not bad and dt < 60,
           f"{checked} coefficients, {dt:.1f}s, failures {bad[:3]}")


def test_criterion_08_q_zero(report):
    bad = []
    for nu in partitions_up_to(10):
        E = create("H", nu)
        values = {lam: c.evaluate(0) for lam, c in E.items()}
        nonzero = {lam: v for lam, v in values.items() if v != 0}
        if nonzero != {nu: 1}:
            bad.append(nu)
    report(8, "H_nu at q=0 is s_nu for |nu| <= 10", not bad, f"failures {bad[:3]}")


def test_criterion_09_master_history_equivalence(report):
    rng = random.Random(99)
    pool = list(partitions_up_to(3))
    failures = []
    cases = 0
    for _ in range(120):
        word = [OperatorSpec(rng.choice("HCB"), rng.randint(-3, 4))
                for _ in range(rng.randint(1, 4))]
        start = rng.choice(pool) if rng.random() < 0.5 else ()
        engine = apply_word(word, s(*start))
        for mode in ("omega", "native"):
            cases += 1
            if sum_histories(word, start, mode) != engine:
                failures.append((mode, [str(op) for op in word], start))
    report(9, "history sums equal engine output on random H/C/B words", not failures,
           f"{cases} cases, failures {failures[:3]}")


def test_criterion_10_jobs_determinism(report):
    commands = [
        ["expand", "--word", "H(-2)", "--start", "3,1"],
        ["expand", "--word", "H(1)", "--start", "3,1"],
        ["expand", "--word", "C(-2)", "--start", "3,1"],
        ["expand", "--word", "C(1)", "--start", "3,1"],
        ["expand", "--word", "B(-2)", "--start", "2,1,1"],
        ["expand", "--word", "B(1)", "--start", "2,1,1"],
        ["expand", "--word", "H(1),H(2),H(3)"],
        ["expand", "--word", "C(5),C(1),C(4),C(2),C(3),C(1)"],
        ["histories", "--word", "H(1),H(2),H(3)"],
        ["histories", "--word", "H(1),H(2),H(3)", "--format", "json"],
        ["bench", "--k-max", "6", "--no-times"],
        ["bench", "--word-type", "C", "--alpha", "5,1,4,2,3,1", "--terms", "--no-times"],
    ] + [["histories", "--word", ",".join(["H(3)"] * k), "--count-only"] for k in range(2, 7)]
    differ = []
    for argv in commands:
        outs = []
        for jobs in ("1", "8"):
            buf = io.StringIO()
            code = main(argv + ["--jobs", jobs], buf)
            outs.append((code, buf.getvalue().encode("utf-8")))
        if outs[0] != outs[1] or outs[0][0] != 0:
            differ.append(" ".join(argv))
    report(10, "--jobs 1 and --jobs 8 give byte-identical output", not differ,
           f"{len(commands)} commands, differing {differ}")

