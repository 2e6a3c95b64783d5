# tests/test_grobner.py

from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from src.tools.coeff import Q, LaurentPoly
from src.tools.cpoly import CPoly, determinant
from src.tools.errors import DegreeBoundExceeded, DomainError
from src.tools.grobner import (
    COMMUTATIVE,
    QUANTUM,
    GroebnerBasis,
    ideal_contains,
    ideal_equal,
    reduce,
    right_groebner,
    two_sided_groebner,
    verify_poset,
)
from src.tools.poisson import a_generators
from src.tools.qmatrix import QMPoly, aq_generators, multiply_word, qminor
from src.tools.subsets import IndexSet
from src.tools.weyl import Perm, coxeter_power, interval_below

SYMBOLS = sympy.symbols("x11 x12 x21 x22")


def delta() -> QMPoly:
    return qminor(2, 2, IndexSet.of([1, 2]), IndexSet.of([1, 2]))


def _random_quantum(rng: random.Random) -> QMPoly:
    total = QMPoly.zero(2, 2)
    for _ in range(rng.randint(1, 3)):
        word = [(rng.randint(1, 2), rng.randint(1, 2)) for _ in range(rng.randint(0, 3))]
        coeff = LaurentPoly.monomial(rng.randint(-1, 1), rng.choice([-2, -1, 1, 2]))
        total = total + multiply_word(2, 2, word).scale(coeff)
    return total


def _random_monomial(rng: random.Random) -> CPoly:
    term = CPoly.one(2, 2)
    for _ in range(rng.randint(1, 2)):
        term = term * CPoly.var(2, 2, rng.randint(1, 2), rng.randint(1, 2))
    return term


def _random_commutative_ideal(seed: int):
    rng = random.Random(seed)
    return [
        _random_monomial(rng) - _random_monomial(rng).scale(rng.choice([-3, -2, -1, 2, 3]))
        for _ in range(2)
    ]


# -------------------------------------------------------------------
# Reduction
# -------------------------------------------------------------------


def test_reduce_examples(x2):
    assert reduce(x2[(1, 1)], GroebnerBasis([x2[(1, 1)]])).is_zero()
    x11x22 = multiply_word(2, 2, [(1, 1), (2, 2)])
    expected = multiply_word(2, 2, [(1, 2), (2, 1)]).scale(Q)
    assert reduce(x11x22, GroebnerBasis([delta()])) == expected
    f = x2[(2, 2)] * x2[(1, 1)]
    assert reduce(f, GroebnerBasis([])) == f
    assert reduce(f, []) == f


def test_reduce_leaves_no_divisible_monomial(x2):
    basis = two_sided_groebner([x2[(1, 1)]])
    f = x2[(2, 2)] * x2[(1, 1)] + x2[(1, 2)] * x2[(2, 2)]
    r = reduce(f, basis)
    for mono in r.terms:
        assert not any(all(a <= b for a, b in zip(lead, mono)) for lead in basis.leads)


# -------------------------------------------------------------------
# Completion
# -------------------------------------------------------------------


def test_reduce_is_idempotent(rng):
    bases = [
        two_sided_groebner([delta()]),
        two_sided_groebner(aq_generators(coxeter_power(4, 2), 2, 2)),
        two_sided_groebner([QMPoly.var(2, 2, 1, 2)]),
    ]
    for basis in bases:
        for _ in range(15):
            r = reduce(_random_quantum(rng), basis)
            assert reduce(r, basis) == r
    commutative = right_groebner(_random_commutative_ideal(3))
    for seed in range(10):
        r = reduce(_random_commutative_ideal(seed)[0], commutative)
        assert reduce(r, commutative) == r


def test_two_sided_closure_of_corner_variable(x2):
    # x22 x11 = x11 x22 - (q - q^-1) x12 x21 puts x12 x21 into the ideal
    basis = two_sided_groebner([x2[(1, 1)]])
    assert basis.two_sided
    assert basis.gens == [x2[(1, 1)], x2[(1, 2)] * x2[(2, 1)]]
    right = right_groebner([x2[(1, 1)]])
    assert right.gens == [x2[(1, 1)]]
    assert not ideal_equal(right, basis)


def test_quantum_determinant_generates_a_two_sided_ideal():
    basis = two_sided_groebner([delta()])
    assert len(basis) == 1
    assert basis.gens[0] == delta()
    assert ideal_equal(basis, right_groebner([delta()]))


def test_empty_generators():
    assert two_sided_groebner([]).gens == []
    assert right_groebner([QMPoly.zero(2, 2)]).gens == []
    assert right_groebner([]).mode == QUANTUM


def test_empty_basis_keeps_the_requested_mode():
    assert right_groebner([], mode=COMMUTATIVE).mode == COMMUTATIVE
    assert two_sided_groebner([], mode=COMMUTATIVE).mode == COMMUTATIVE
    assert right_groebner([CPoly.zero(2, 2)]).mode == COMMUTATIVE
    assert right_groebner([CPoly.zero(2, 2)]).gens == []
    with pytest.raises(DomainError):
        right_groebner([QMPoly.var(2, 2, 1, 1)], mode=COMMUTATIVE)
    with pytest.raises(DomainError):
        right_groebner([], mode="noncommutative")


def test_generators_reduce_to_zero_modulo_their_basis():
    for y in interval_below(coxeter_power(4, 2)):
        gens = aq_generators(y, 2, 2)
        right = right_groebner(gens)
        two = two_sided_groebner(gens)
        for g in gens:
            assert reduce(g, right).is_zero()
            assert reduce(g, two).is_zero()
        classical = right_groebner(a_generators(y, 2, 2), mode=COMMUTATIVE)
        assert classical.mode == COMMUTATIVE
        for g in a_generators(y, 2, 2):
            assert reduce(g, classical).is_zero()


def test_completion_is_idempotent(x2):
    basis = two_sided_groebner([x2[(1, 1)], delta()])
    again = two_sided_groebner(basis.gens)
    assert again.gens == basis.gens


def test_degree_bound_is_enforced():
    with pytest.raises(DegreeBoundExceeded) as info:
        two_sided_groebner([delta()], degree_bound=1)
    assert info.value.bound == 1


def test_mixed_modes_are_rejected():
    with pytest.raises(DomainError):
        right_groebner([QMPoly.var(2, 2, 1, 1), CPoly.var(2, 2, 1, 1)])


def test_ideal_containment_examples():
    top = two_sided_groebner(aq_generators(coxeter_power(4, 2), 2, 2))
    s2 = two_sided_groebner(aq_generators(Perm.parse("1324"), 2, 2))
    assert ideal_contains([], s2)
    assert ideal_contains(aq_generators(Perm.parse("1324"), 2, 2), top)
    assert not ideal_contains(aq_generators(coxeter_power(4, 2), 2, 2), s2)


# -------------------------------------------------------------------
# Commutative mode against sympy
# -------------------------------------------------------------------


def _to_sympy(f: CPoly):
    expr = sympy.Integer(0)
    for mono, coeff in f.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for sym, e in zip(SYMBOLS, mono):
            term *= sym ** e
        expr += term
    return expr


def _canonical_ours(basis: GroebnerBasis):
    return {frozenset(g.terms.items()) for g in basis.gens}


def _canonical_sympy(polys):
    out = set()
    for g in polys:
        monic = sympy.Poly(g, *SYMBOLS, domain="QQ").monic()
        out.add(frozenset(
            (tuple(mono), Fraction(int(c.p), int(c.q))) for mono, c in monic.as_dict().items()
        ))
    return out


@pytest.mark.parametrize("gens", [
    [determinant(2, 2, [1, 2], [1, 2])],
    [determinant(2, 2, [1, 2], [1, 2]), CPoly.var(2, 2, 1, 1)],
    [CPoly.var(2, 2, 1, 1) * CPoly.var(2, 2, 1, 2) - CPoly.var(2, 2, 2, 2),
     CPoly.var(2, 2, 1, 1) * CPoly.var(2, 2, 2, 1) + CPoly.var(2, 2, 1, 2).scale(3)],
    [CPoly.var(2, 2, 1, 1) * CPoly.var(2, 2, 1, 1) - CPoly.var(2, 2, 2, 1),
     CPoly.var(2, 2, 1, 2) * CPoly.var(2, 2, 2, 2) - CPoly.one(2, 2)],
])
def test_commutative_basis_matches_sympy(gens):
    ours = right_groebner(gens)
    assert ours.mode == "commutative"
    theirs = sympy.groebner([_to_sympy(g) for g in gens], *SYMBOLS, order="grlex", domain="QQ")
    assert _canonical_ours(ours) == _canonical_sympy(theirs.exprs)


@pytest.mark.parametrize("seed", range(12))
def test_random_commutative_ideals_match_sympy(seed):
    gens = _random_commutative_ideal(seed)
    ours = right_groebner(gens)
    theirs = sympy.groebner([_to_sympy(g) for g in gens], *SYMBOLS, order="grlex", domain="QQ")
    assert _canonical_ours(ours) == _canonical_sympy(theirs.exprs)
    for g in gens:
        assert reduce(g, ours).is_zero()


# -------------------------------------------------------------------
# Poset of ideals
# -------------------------------------------------------------------


@pytest.mark.parametrize("m, n, size", [(1, 1, 2), (1, 2, 4), (2, 1, 4), (2, 2, 14)])
def test_verify_poset_small_shapes(m, n, size):
    report = verify_poset(m, n)
    assert report["ok"], report["failures"]
    assert len(report["ideals"]) == size
    assert report["inclusion_matrix"] == report["bruhat_matrix"]
    assert report["distinct"]


def test_verify_poset_one_by_one_ideals():
    report = verify_poset(1, 1)
    assert [i["generators"] for i in report["ideals"]] == [[], ["x11"]]
    assert report["ideal_hasse_edges"] == [("12", "21")]


@pytest.mark.slow
@pytest.mark.parametrize("m, n", [(2, 3), (3, 2)])
def test_verify_poset_two_by_three(m, n):
    assert verify_poset(m, n)["ok"]


@pytest.mark.slow
def test_verify_poset_three_by_three():
    report = verify_poset(3, 3)
    assert report["ok"]
    assert len(report["ideals"]) == 230
