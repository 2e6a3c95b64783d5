# tests/test_poisson.py

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from config import get_settings
from src.tools.cpoly import CPoly, determinant
from src.tools.errors import DomainError
from src.tools.poisson import (
    RatMatrix,
    a_generators,
    bracket,
    check_antisymmetry,
    check_jacobi,
    check_semiclassical,
    classify_square,
    closure_violations,
    exact_rank,
    leaf_of,
    poisson_ideal_check,
    semiclassical_check,
    torus_scale,
    vanishing_witness,
    verify_stratification,
)
from src.tools.qmatrix import QMPoly, aq_generators, specialize_q1
from src.tools.sampling import SampleSpec, random_matrices, random_torus, zero_one_matrices
from src.tools.weyl import Perm, all_perms, coxeter_power, interval_below


def C(i: int, j: int, m: int = 2, n: int = 2) -> CPoly:
    return CPoly.var(m, n, i, j)


def test_exact_rank():
    assert exact_rank(RatMatrix.zeros(3, 2)) == 0
    assert exact_rank(RatMatrix.of([[1, 2], [2, 4]])) == 1
    assert exact_rank(RatMatrix.of([["1/2", "1/3"], [1, 1]])) == 2
    assert exact_rank(RatMatrix.of([[1, 0], [0, 1], [1, 1]])) == 2
    assert exact_rank(RatMatrix.of([[0, 0, 3], [0, 0, "1/7"]])) == 1


def test_matrix_parsing():
    x = RatMatrix.of([["1/2", 3], [0, "-2/4"]])
    assert x.rows[0][0] == Fraction(1, 2)
    assert x.rows[1][1] == Fraction(-1, 2)
    with pytest.raises(DomainError):
        RatMatrix.of([[1, 2], [3]])


def test_coordinate_brackets():
    assert bracket(C(1, 1), C(1, 2)) == C(1, 1) * C(1, 2)
    assert bracket(C(1, 2), C(2, 1)).is_zero()
    assert bracket(C(1, 1), C(2, 2)) == (C(1, 2) * C(2, 1)).scale(2)
    assert bracket(C(2, 2), C(1, 1)) == (C(1, 2) * C(2, 1)).scale(-2)


def test_determinant_is_a_casimir():
    det = determinant(2, 2, [1, 2], [1, 2])
    for i in (1, 2):
        for j in (1, 2):
            assert bracket(det, C(i, j)).is_zero()


@pytest.mark.parametrize("m, n", [(1, 2), (2, 1), (2, 2), (2, 3), (3, 3)])
def test_antisymmetry(m, n):
    assert check_antisymmetry(m, n) == []


@pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_jacobi(m, n):
    assert check_jacobi(m, n) == []


def test_semiclassical_limit():
    x = {(i, j): QMPoly.var(2, 2, i, j) for i in (1, 2) for j in (1, 2)}
    assert semiclassical_check(x[(1, 1)], x[(1, 2)])
    assert semiclassical_check(x[(1, 1)], x[(2, 2)])
    assert semiclassical_check(x[(1, 2)], x[(2, 1)])
    for m, n in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        assert check_semiclassical(m, n) == []


def test_a_generators_examples():
    assert a_generators(Perm.parse("1234"), 2, 2) == []
    assert a_generators(Perm.parse("1324"), 2, 2) == [C(1, 1) * C(2, 2) - C(1, 2) * C(2, 1)]
    assert a_generators(Perm.parse("21"), 1, 1) == [CPoly.var(1, 1, 1, 1)]


def test_a_generators_are_the_q_equal_one_shadow():
    for y in interval_below(coxeter_power(4, 2)):
        assert a_generators(y, 2, 2) == [specialize_q1(g) for g in aq_generators(y, 2, 2)]


def test_poisson_ideals_two_by_two():
    for y in interval_below(coxeter_power(4, 2)):
        assert poisson_ideal_check(y, 2, 2)


def test_leaf_examples():
    assert leaf_of(RatMatrix.of([[1, 2], [3, 5]])).is_identity()
    assert leaf_of(RatMatrix.zeros(2, 2)) == coxeter_power(4, 2)
    assert leaf_of(RatMatrix.zeros(1, 1)) == Perm.parse("21")
    assert leaf_of(RatMatrix.of([[7]])).is_identity()


def test_classify_recovers_permutation_matrices():
    for y in all_perms(4):
        assert classify_square(RatMatrix.from_array(y.matrix())) == y


def test_classify_rejects_rectangles():
    with pytest.raises(DomainError):
        classify_square(RatMatrix.zeros(2, 3))


def test_leaves_lie_below_coxeter_power():
    for x in zero_one_matrices(2, 3):
        leaf = leaf_of(x)
        assert leaf in interval_below(coxeter_power(5, 2))


def test_every_minor_vanishes_at_zero():
    zero = RatMatrix.zeros(2, 2)
    for y in interval_below(coxeter_power(4, 2)):
        assert vanishing_witness(a_generators(y, 2, 2), zero) is None


def test_stratification_on_zero_one_matrices():
    report = verify_stratification(2, 2, zero_one_matrices(2, 2))
    assert report["ok"], report["failures"]
    assert report["samples"] == 16
    assert sum(report["census"].values()) == 16


def test_stratification_on_random_rationals():
    samples = random_matrices(SampleSpec(2, 2, 200, 20240601))
    report = verify_stratification(2, 2, samples)
    assert report["ok"], report["failures"]


@pytest.mark.parametrize("m, n", [(1, 2), (2, 1), (2, 3)])
def test_stratification_rectangles(m, n):
    samples = zero_one_matrices(m, n) + random_matrices(SampleSpec(m, n, 40, 7))
    assert verify_stratification(m, n, samples)["ok"]


def test_stratification_rejects_wrong_shape():
    with pytest.raises(DomainError):
        verify_stratification(2, 2, [RatMatrix.zeros(2, 3)])


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3)])
def test_leaves_are_torus_invariant(m, n):
    trials = get_settings().torus_trials
    rng = np.random.default_rng(11)
    samples = random_matrices(SampleSpec(m, n, trials, 12))
    assert len(samples) == trials
    for x in samples:
        left, right = random_torus(rng, m, n)
        assert leaf_of(torus_scale(x, left, right)) == leaf_of(x)


def test_zero_sets_are_nested():
    elements = interval_below(coxeter_power(4, 2))
    gens = {y: a_generators(y, 2, 2) for y in elements}
    for x in zero_one_matrices(2, 2) + random_matrices(SampleSpec(2, 2, 20, 5)):
        vanishing = {y: vanishing_witness(gens[y], x) is None for y in elements}
        assert closure_violations(vanishing) == []


def test_closure_violations_are_reported():
    identity, s1 = Perm.parse("12"), Perm.parse("21")
    assert closure_violations({identity: True, s1: True}) == []
    assert closure_violations({identity: False, s1: True}) == [(identity, s1)]
    assert closure_violations({identity: True, s1: False}) == []
