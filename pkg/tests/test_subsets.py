# tests/test_subsets.py

from __future__ import annotations

import pytest

from src.tools.errors import DomainError
from src.tools.subsets import (
    IndexSet,
    MinorSpec,
    admissible_pairs,
    complement_index_sets,
    demazure_index_sets,
    generator_minors,
    generator_pairs,
    k_subsets,
    minor_from_index,
    split,
    subset_leq,
)
from src.tools.weyl import Perm, all_perms, coxeter_power


def S(*items: int) -> IndexSet:
    return IndexSet.of(items)


def test_index_set_rejects_bad_input():
    with pytest.raises(DomainError):
        IndexSet((2, 1))
    with pytest.raises(DomainError):
        IndexSet((0, 1))
    assert str(S(1, 3)) == "{1,3}"
    assert S(3, 1, 3) == S(1, 3)


def test_subset_order():
    assert subset_leq(S(1, 2), S(3, 4))
    assert not subset_leq(S(1, 4), S(2, 3))
    assert subset_leq(S(2, 5), S(2, 5))
    with pytest.raises(DomainError):
        subset_leq(S(1), S(1, 2))


def test_split():
    assert split(S(1, 3), 2, 2) == (S(1), S(3))
    assert split(S(3, 4), 2, 2) == (IndexSet(), S(3, 4))
    assert split(S(1, 2, 4), 2, 2) == (S(1, 2), S(4))
    with pytest.raises(DomainError):
        split(S(5), 2, 2)


def test_demazure_and_complement_sets():
    s1 = coxeter_power(2, 1)
    assert demazure_index_sets(s1, 1, 2) == [S(1), S(2)]
    assert complement_index_sets(s1, Perm.parse("12"), 1, 2) == []

    c2 = coxeter_power(4, 2)
    assert len(demazure_index_sets(c2, 2, 4)) == 6
    assert complement_index_sets(c2, Perm.parse("1324"), 2, 4) == [S(1, 2)]


@pytest.mark.parametrize("size", [2, 3, 4, 5, 6])
def test_subset_order_is_a_partial_order(size):
    for k in range(1, min(3, size) + 1):
        sets = k_subsets(k, size)
        for a in sets:
            assert subset_leq(a, a)
            for b in sets:
                if a != b and subset_leq(a, b):
                    assert not subset_leq(b, a)
                for c in sets:
                    if subset_leq(a, b) and subset_leq(b, c):
                        assert subset_leq(a, c)


def test_demazure_sets_contain_both_ends():
    for w in all_perms(4):
        for k in range(1, 4):
            found = demazure_index_sets(w, k, 4)
            assert IndexSet.interval(1, k) in found
            assert IndexSet.interval(1, k).image(w) in found


def test_complement_against_identity_is_empty():
    identity = Perm.parse("1234")
    for w in all_perms(4):
        for k in range(1, 4):
            assert complement_index_sets(w, identity, k, 4) == []


def test_k_subsets_counts():
    assert len(k_subsets(2, 5)) == 10
    assert k_subsets(0, 3) == [IndexSet()]


def test_minor_from_index_examples():
    assert minor_from_index(1, 1, 1, S(1)) == MinorSpec(S(1), S(1))
    assert minor_from_index(2, 2, 2, S(1, 3)) == MinorSpec(S(2), S(2))
    assert minor_from_index(2, 2, 3, S(1, 2, 3)) == MinorSpec(S(1), S(2))
    assert minor_from_index(2, 2, 2, S(1, 2)) == MinorSpec(S(1, 2), S(1, 2))
    # two index sets naming the same minor
    assert minor_from_index(2, 2, 1, S(1)) == minor_from_index(2, 2, 2, S(1, 4)) == MinorSpec(S(2), S(1))


def test_empty_minor_is_allowed():
    spec = minor_from_index(2, 2, 2, S(3, 4))
    assert spec.size == 0


def test_minor_from_index_rejects_inadmissible_pairs():
    with pytest.raises(DomainError):
        minor_from_index(2, 2, 3, S(2, 3, 4))
    with pytest.raises(DomainError):
        minor_from_index(2, 2, 4, S(1, 2, 3, 4))
    with pytest.raises(DomainError):
        minor_from_index(2, 2, 2, S(1))


def test_admissible_pairs_count():
    assert len(admissible_pairs(1, 1)) == 2
    assert len(admissible_pairs(2, 2)) == 12


def test_every_admissible_minor_fits_the_matrix():
    for m, n in [(1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)]:
        for k, index_set in admissible_pairs(m, n):
            spec = minor_from_index(m, n, k, index_set)
            assert all(1 <= r <= m for r in spec.rows)
            assert all(1 <= c <= n for c in spec.cols)


def test_generator_minors_two_by_two():
    assert generator_minors(Perm.parse("1234"), 2, 2) == []
    assert generator_minors(Perm.parse("1324"), 2, 2) == [MinorSpec(S(1, 2), S(1, 2))]
    assert generator_minors(Perm.parse("2134"), 2, 2) == [MinorSpec(S(2), S(1))]
    top = generator_minors(coxeter_power(4, 2), 2, 2)
    assert top == [
        MinorSpec(S(1), S(1)),
        MinorSpec(S(1), S(2)),
        MinorSpec(S(2), S(1)),
        MinorSpec(S(2), S(2)),
        MinorSpec(S(1, 2), S(1, 2)),
    ]


def test_generator_pairs_shrink_with_bruhat_order():
    assert generator_pairs(Perm.parse("1234"), 2, 2) == []
    assert len(generator_pairs(coxeter_power(4, 2), 2, 2)) > len(generator_pairs(Perm.parse("1324"), 2, 2))
