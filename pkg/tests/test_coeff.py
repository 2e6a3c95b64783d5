# tests/test_coeff.py

from __future__ import annotations

from math import comb

import pytest

from src.tools.coeff import (
    ONE,
    Q,
    Q_INV,
    ZERO,
    LaurentPoly,
    RatFunc,
    div_qminus1,
    eval_q1,
    q_binom,
    q_fact,
    q_int,
)
from src.tools.errors import DomainError, InexactDivisionError


def _random_poly(rng) -> LaurentPoly:
    return LaurentPoly({rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(rng.randint(0, 4))})


def test_q_integers():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(2) == Q + Q_INV
    assert q_int(3) == LaurentPoly({2: 1, 0: 1, -2: 1})


def test_q_factorial_and_binomial_examples():
    assert q_fact(0) == ONE
    assert q_fact(3) == q_int(2) * q_int(3)
    assert q_binom(2, 1) == Q + Q_INV
    assert q_binom(4, 2) == LaurentPoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})


def test_q_binom_rejects_m_above_n():
    with pytest.raises(DomainError):
        q_binom(2, 3)


def test_q_binom_symmetry_and_classical_limit():
    for n in range(9):
        for m in range(n + 1):
            assert q_binom(n, m) == q_binom(n, n - m)
            assert eval_q1(q_binom(n, m)) == comb(n, m)


def test_q_binom_pascal_recursion():
    for n in range(1, 9):
        for m in range(1, n):
            rhs = LaurentPoly.monomial(-m) * q_binom(n - 1, m - 1) + LaurentPoly.monomial(n - m) * q_binom(n - 1, m)
            assert q_binom(n, m) == rhs


def test_eval_and_divide_by_q_minus_one():
    assert eval_q1(Q + Q_INV) == 2
    assert div_qminus1(Q - Q_INV) == ONE + Q_INV
    assert div_qminus1(Q ** 2 - 1) == Q + 1
    with pytest.raises(InexactDivisionError):
        div_qminus1(Q)


def test_exact_division():
    assert (Q ** 3 - Q_INV ** 3).exact_div(Q - Q_INV) == q_int(3)
    with pytest.raises(InexactDivisionError):
        (Q + 2).exact_div(Q + 1)


def test_ring_axioms_on_random_triples(rng):
    for _ in range(200):
        a, b, c = (_random_poly(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a - a == ZERO


def test_no_zero_coefficients_are_stored():
    p = LaurentPoly({1: 2, 0: 0, -1: 0})
    assert p.terms == {1: 2}
    assert (p - p).terms == {}


def test_ratfunc_normal_form():
    assert RatFunc(Q ** 2 - 1, Q - 1) == RatFunc(Q + 1)
    assert RatFunc(Q ** 2 - 1, Q - 1).is_laurent()
    assert RatFunc(Q, Q) == 1
    assert RatFunc(-1, -Q - 1) == RatFunc(1, Q + 1)
    r = RatFunc(Q + 2, Q ** 2 + 3)
    assert r * r.inverse() == 1
    assert r / r == RatFunc(1)
    assert r - r == 0
