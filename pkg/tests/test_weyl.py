# tests/test_weyl.py

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from src.tools.errors import DomainError
from src.tools.weyl import (
    Perm,
    all_perms,
    apply_set,
    bruhat_leq,
    bruhat_leq_subword,
    compose,
    compose_all,
    coxeter,
    coxeter_power,
    coxeter_power_word,
    hasse_dot,
    hasse_edges,
    interval,
    interval_below,
    inverse,
    length,
    longest,
    longest_rev,
    reduced_word,
    word_product,
)


def test_parse_and_render():
    w = Perm.parse("3412")
    assert w.oneline == (3, 4, 1, 2)
    assert str(w) == "3412"
    assert w(1) == 3
    with pytest.raises(DomainError):
        Perm.parse("[3,1,4,2]")
    with pytest.raises(DomainError):
        Perm.parse("1124")


def test_composition_is_function_composition():
    u, v = Perm.parse("231"), Perm.parse("213")
    assert compose(u, v) == Perm(tuple(u(v(i)) for i in (1, 2, 3)))
    assert compose(u, inverse(u)).is_identity()


def test_special_elements():
    assert coxeter(4) == Perm.parse("2341")
    assert coxeter_power(4, 2) == Perm.parse("3412")
    assert longest(2, 4) == Perm.parse("2134")
    assert longest_rev(2, 4) == Perm.parse("1243")
    assert length(longest(4, 4)) == 6


def test_coxeter_power_factorization_and_length():
    for m in range(1, 5):
        for n in range(1, 5):
            size = m + n
            cm = coxeter_power(size, m)
            assert compose_all([longest(m, size), longest_rev(n, size), longest(size, size)]) == cm
            assert length(cm) == m * n
            word = coxeter_power_word(m, n)
            assert len(word) == m * n
            assert word_product(word, size) == cm


def test_reduced_words():
    for w in all_perms(4):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert word_product(word, 4) == w


def test_permutation_matrix_convention():
    w = Perm.parse("231")
    mat = w.matrix()
    for j in range(1, 4):
        assert mat[w(j) - 1, j - 1] == 1
    assert mat.sum() == 3


def test_bruhat_agrees_with_subword_oracle():
    for size in range(1, 5):
        perms = all_perms(size)
        for u in perms:
            for w in perms:
                assert bruhat_leq(u, w) == bruhat_leq_subword(u, w)


def test_bruhat_agrees_with_subword_oracle_s5():
    perms = all_perms(5)
    for u in perms:
        for w in perms:
            assert bruhat_leq(u, w) == bruhat_leq_subword(u, w)


@pytest.mark.parametrize("m, n, size", [(1, 1, 2), (1, 2, 4), (2, 1, 4), (2, 2, 14)])
def test_interval_sizes(m, n, size):
    below = interval_below(coxeter_power(m + n, m))
    assert len(below) == size
    assert below[0].is_identity()


def test_interval_size_three_by_three():
    assert len(interval_below(coxeter_power(6, 3))) == 230


def test_interval_matches_brute_force_filter():
    top = coxeter_power(4, 2)
    brute = sorted((y for y in all_perms(4) if bruhat_leq(y, top)), key=lambda y: (length(y), y.oneline))
    assert interval_below(top) == brute


def test_interval_between():
    u, w = Perm.parse("2134"), Perm.parse("3412")
    found = interval(u, w)
    assert all(bruhat_leq(u, y) and bruhat_leq(y, w) for y in found)
    assert u in found and w in found
    assert Perm.parse("1324") not in found


def test_hasse_edges_and_dot():
    elements = interval_below(coxeter_power(2, 1))
    assert hasse_edges(elements) == [(Perm.parse("12"), Perm.parse("21"))]
    dot = hasse_dot(elements)
    assert dot.startswith("digraph")
    assert '"12" -> "21";' in dot


def test_apply_set_keeps_size_and_composes():
    perms = all_perms(4)
    subsets = [s for k in range(5) for s in combinations(range(1, 5), k)]
    for u in perms:
        for index_set in subsets:
            assert len(apply_set(u, index_set)) == len(index_set)
        for v in perms:
            uv = compose(u, v)
            for index_set in subsets:
                assert apply_set(uv, index_set) == apply_set(u, apply_set(v, index_set))


def test_apply_set_sorts_the_image():
    assert apply_set(Perm.parse("3412"), (1, 2)) == (3, 4)
    assert apply_set(Perm.parse("2341"), (3, 4)) == (1, 4)
    assert apply_set(Perm.parse("21"), ()) == ()


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_bruhat_order_is_a_partial_order(size):
    elements = interval_below(longest(size, size))
    assert len(elements) == len(all_perms(size))
    leq = np.array([[bruhat_leq(u, w) for w in elements] for u in elements], dtype=np.int64)
    assert np.all(np.diag(leq) == 1)
    assert np.all((leq * leq.T) == np.eye(len(elements), dtype=np.int64))
    # any u <= v <= w path forces u <= w
    assert np.all(((leq @ leq) > 0) <= (leq > 0))


@pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (2, 3)])
def test_bruhat_order_on_coxeter_intervals(m, n):
    elements = interval_below(coxeter_power(m + n, m))
    leq = np.array([[bruhat_leq(u, w) for w in elements] for u in elements], dtype=np.int64)
    assert np.all((leq * leq.T) == np.eye(len(elements), dtype=np.int64))
    assert np.all(((leq @ leq) > 0) <= (leq > 0))
