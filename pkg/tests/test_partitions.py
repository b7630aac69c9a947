import pytest
from hypothesis import given
import hypothesis.strategies as st

from abacus_histories.partitions import (Abacus, AbacusError, PartitionError,
                                         bead_labels, bead_with_label,
                                         conjugate, flip, from_abacus,
                                         gap_label_at, gap_labels, partition,
                                         partitions_of, partitions_up_to,
                                         to_abacus)
from conftest import partitions

BIG = (8, 8, 8, 4, 4, 2, 2, 1)


def test_partition_strips_zeros():
    assert partition((3, 1, 0, 0)) == (3, 1)
    assert partition(()) == ()


@pytest.mark.parametrize("bad", [(1, 2), (3, -1), (2, 0, 1)])
def test_partition_rejects(bad):
    with pytest.raises(PartitionError):
        partition(bad)


def test_to_abacus_big_example():
    a = to_abacus(BIG + (0, 0), 10)
    assert a.beads == (17, 16, 15, 10, 9, 6, 5, 3, 1, 0)
    assert a.word() == "oo.o.oo..oo....ooo"
    assert from_abacus(a) == BIG


def test_to_abacus_small_examples():
    assert to_abacus((), 3).beads == (2, 1, 0)
    assert to_abacus((3, 1, 1), 4).beads == (6, 3, 2, 0)
    assert from_abacus(Abacus((6, 3, 2, 0))) == (3, 1, 1)
    assert from_abacus(Abacus((2, 1, 0))) == ()


def test_to_abacus_too_few_beads():
    with pytest.raises(AbacusError):
        to_abacus((2, 1), 1)


@pytest.mark.parametrize("beads", [(1, 3), (2, 2), (-1,)])
def test_abacus_validates(beads):
    with pytest.raises(AbacusError):
        Abacus(beads)


@given(partitions(10), st.integers(0, 20))
def test_round_trip(mu, extra):
    assert from_abacus(to_abacus(mu, len(mu) + extra)) == mu


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 1, 1)) == (3, 1)
    assert conjugate(()) == ()
    assert conjugate(BIG) == (8, 7, 5, 5, 3, 3, 3, 3)


@given(partitions(12))
def test_conjugate_involution(mu):
    assert conjugate(conjugate(mu)) == mu
    assert sum(conjugate(mu)) == sum(mu)


def test_partition_counts():
    assert [len(list(partitions_of(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    ps = list(partitions_of(6))
    assert ps == sorted(ps, reverse=True)
    assert all(len(p) <= 2 for p in partitions_of(7, max_length=2))
    assert len(list(partitions_up_to(4))) == 1 + 1 + 2 + 3 + 5


def test_gap_labels_big_example():
    a = to_abacus(BIG, 8)
    infos = gap_labels(a, horizon=3)
    labels = {g.label: g.sign for g in infos}
    low = {k: v for k, v in labels.items() if k < 8}
    assert low == {-8: 1, -6: -1, -3: -1, -2: -1, 1: -1, 2: -1, 3: -1, 4: -1}
    assert all(labels[k] == 1 for k in (8, 9, 10))


def test_gap_labels_empty_abacus():
    a = to_abacus((), 4)
    for g in gap_labels(a, horizon=5):
        assert g.label == g.position - 4 and g.sign == 1


def test_gap_right_of_last_bead_has_first_part_label():
    a = to_abacus((3, 1), 2)
    infos = gap_labels(a, horizon=4)
    after = [g for g in infos if g.position > a.beads[0]]
    assert after[0].label == 3
    assert [g.label for g in after] == list(range(3, 3 + len(after)))


@given(partitions(10), st.integers(0, 6))
def test_gap_labels_increase_and_match_two_rules(mu, horizon):
    a = to_abacus(mu, len(mu))
    infos = gap_labels(a, horizon)
    labels = [g.label for g in infos]
    assert labels == sorted(set(labels))
    # second rule: mu_1 just right of the top bead, one step per position
    top = a.beads[0] if a.beads else -1
    first = mu[0] if mu else 0
    for g in infos:
        assert gap_label_at(a, g.position) == g
        if g.position > top:
            assert g.label == first + (g.position - top - 1)


@given(partitions(10))
def test_gap_labels_independent_of_padding(mu):
    a = to_abacus(mu, len(mu))
    b = to_abacus(mu, len(mu) + 1)
    la = {g.label: g.sign for g in gap_labels(a, 3)}
    lb = {g.label: g.sign for g in gap_labels(b, 3)}
    shared = set(la) & set(lb)
    assert shared
    assert all(la[k] == lb[k] for k in shared)


def test_bead_labels_examples():
    assert [(b.label, b.sign) for b in bead_labels(Abacus((2, 1, 0)))] == [(2, 1), (1, 1), (0, 1)]
    assert sorted((b.position, b.label, b.sign) for b in bead_labels(Abacus((2, 0)))) == [
        (0, 1, 1), (2, -1, -1)]
    assert bead_with_label(Abacus((2, 0)), -1).sign == -1
    assert bead_with_label(Abacus((2, 0)), 0) is None


@given(partitions(10), st.integers(0, 3))
def test_bead_labels_decrease(mu, extra):
    a = to_abacus(mu, len(mu) + extra)
    infos = bead_labels(a)
    positions = [b.position for b in infos]
    assert positions == sorted(positions)
    labels = [b.label for b in infos]
    assert labels == sorted(labels, reverse=True)
    for b in infos:
        right = sum(1 for x in a.beads if x > b.position)
        gaps = sum(1 for p in range(b.position) if p not in a.beads)
        assert b.label == right - gaps and b.sign == (-1) ** gaps


def test_flip_examples():
    assert from_abacus(flip(to_abacus((3, 1), 2))) == (2, 1, 1)
    assert flip(Abacus(())).beads == ()
    assert from_abacus(flip(to_abacus(BIG, 8))) == conjugate(BIG)


def test_flip_rejects_short_window():
    a = to_abacus((3, 1), 2)
    with pytest.raises(AbacusError):
        flip(a, (0, a.beads[0]))
    with pytest.raises(AbacusError):
        flip(a, (1, 10))


def test_flip_is_conjugation_exhaustive():
    for mu in partitions_up_to(12):
        for n in (len(mu), len(mu) + 2):
            a = to_abacus(mu, n)
            assert from_abacus(flip(a)) == conjugate(mu)


@given(partitions(10), st.integers(0, 3), st.integers(0, 3))
def test_flip_twice_is_identity(mu, extra, margin):
    a = to_abacus(mu, len(mu) + extra)
    hi = (a.beads[0] + 1 if a.beads else 0) + margin
    once = flip(a, (0, hi))
    assert flip(once, (0, hi)) == a
