import pytest

from abacus_histories.histories import (FIXED, HistoryError,
                                        enumerate_histories, sum_histories)
from abacus_histories.operators import create, parse_word, word_for
from abacus_histories.partitions import partitions_of
from abacus_histories.qlaurent import ONE, Q, QLaurent
from abacus_histories.threerow import (DomainError, build_three_row,
                                       three_row_coeff, three_row_involution,
                                       three_row_params, three_row_table)

q = Q


def three_part(n):
    return [nu for nu in partitions_of(n, max_length=3) if len(nu) == 3]


def test_coeff_examples():
    assert three_row_coeff((2, 1, 1), (2, 2)) == q
    assert three_row_coeff((2, 1, 1), (4,)) == q ** 3
    assert three_row_coeff((3, 2, 1), (3, 2, 1)) == ONE
    assert three_row_coeff((3, 2, 1), (2, 2, 2)).is_zero()


@pytest.mark.parametrize("nu, lam", [
    ((2, 1, 1), (1, 1, 1, 1)),
    ((2, 2), (2, 2)),
    ((2, 1, 1), (3, 2)),
    ((1, 2, 1), (4,)),
])
def test_coeff_domain_errors(nu, lam):
    with pytest.raises(DomainError):
        three_row_coeff(nu, lam)


def test_coeff_matches_enumeration():
    for n in range(3, 10):
        for nu in three_part(n):
            E = sum_histories(word_for("H", nu))
            for lam in partitions_of(n, max_length=3):
                assert three_row_coeff(nu, lam) == E[lam], (nu, lam)


def test_involution_size_six():
    seen_negative = 0
    for nu in three_part(6):
        hs = list(enumerate_histories(word_for("H", nu)))
        for h in hs:
            g = three_row_involution(h)
            if h.sign < 0:
                seen_negative += 1
                assert g is not FIXED and g.sign > 0
            if g is FIXED:
                assert h.sign > 0
    assert seen_negative


def test_involution_accounting_and_fixed_points():
    for n in range(3, 10):
        for nu in three_part(n):
            hs = list(enumerate_histories(word_for("H", nu)))
            fixed, matched = [], 0
            for h in hs:
                a, b, c, k = three_row_params(h)
                g = three_row_involution(h)
                if g is FIXED:
                    fixed.append(h)
                    lam = h.final + (0,) * (3 - len(h.final))
                    assert h.sign > 0 and k > b
                    assert k == (lam[0] + 2) - (lam[1] + 1)
                    assert a == nu[2] - lam[2] - b
                    assert c == lam[0] - nu[0] - b
                    assert h.qpower == nu[2] - lam[2] + lam[0] - nu[0] - b
                    continue
                matched += 1
                assert g.sign == -h.sign and g.qpower == h.qpower and g.final == h.final
                assert three_row_involution(g).key() == h.key()
                if h.sign < 0:
                    # the bead moved left by k must not collide in the middle row
                    assert nu[2] - a + (-k) < nu[1] + 1 + a - (-k) - c
                    assert -k < a
            assert len(hs) - matched == len(fixed)
            assert matched % 2 == 0
            assert sum_histories(word_for("H", nu), histories=fixed) == create("H", nu)


def test_negative_k_formula():
    for nu in three_part(8):
        for h in enumerate_histories(word_for("H", nu)):
            a, b, c, k = three_row_params(h)
            if h.sign < 0:
                assert -k == a - (b + 2 * c + 1 + nu[0] - nu[1])


def test_build_three_row_rejects_impossible():
    with pytest.raises(HistoryError):
        build_three_row((2, 1, 1), 5, 0, 0)


def test_involution_rejects_other_histories():
    h = next(iter(enumerate_histories(parse_word("H(1),H(2)"))))
    with pytest.raises(HistoryError):
        three_row_involution(h)


def test_table_examples():
    t3 = three_row_table(3)
    for lam, coeff in create("H", (1, 1, 1)).items():
        assert t3[((1, 1, 1), lam)] == coeff
    t2 = three_row_table(2)
    assert [(lam, c) for (nu, lam), c in t2.items() if nu == (2,)] == [((2,), ONE)]
    t4 = three_row_table(4)
    for (nu, lam), coeff in t4.items():
        if nu == (2, 2):
            assert coeff.lo >= 0 and all(x >= 0 for x in coeff.coeffs)


def test_table_matches_engine():
    for n in range(1, 9):
        table = three_row_table(n)
        for nu in partitions_of(n, max_length=3):
            E = create("H", nu)
            got = {lam: c for (mu, lam), c in table.items() if mu == nu}
            assert got == dict(E.items())


def test_table_rejects_nonpositive():
    with pytest.raises(DomainError):
        three_row_table(0)
    assert isinstance(three_row_coeff((1, 1, 1), (3,)), QLaurent)
