# src/tools/grobner.py

"""
Groebner bases for right and two-sided ideals of R_q[M_{m,n}], and for
ideals of its commutative q = 1 specialization.

Quantum elements are reduced over Q(q) (RatFunc coefficients). Reduction
subtracts right multiples g * x^u; because every swap rule exchanges two
variables up to a unit plus lower terms, the leading monomial of g * x^u is
LM(g) + u and the usual exponent-vector lcm overlaps are the S-pairs.

A two-sided basis is a right basis closed under x_v * g for every variable;
such a basis decides two-sided membership by right reduction.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from loguru import logger

from .cpoly import CPoly
from .errors import DegreeBoundExceeded, DomainError, VerificationError
from .monomials import Mono, deglex_key, mono_add, mono_degree, mono_divides, mono_lcm, mono_sub
from .qmatrix import QMPoly, aq_generators, multidegree, relation_table
from .weyl import Perm, bruhat_matrix, coxeter_power, interval_below, length

Poly = Union[QMPoly, CPoly]

QUANTUM = "quantum"
COMMUTATIVE = "commutative"


@dataclass(frozen=True)
class TermOrder:
    """Degree-lex over the row-major variable order, earlier variable heavier."""

    kind: str = "deglex"

    def key(self, mono: Mono) -> Tuple[int, Mono]:
        return deglex_key(mono)

    def check_compatible(self, m: int, n: int) -> None:
        """Raises VerificationError if some straightening correction is not below its lead."""
        relation_table(m, n)


DEGLEX = TermOrder()


@dataclass
class GroebnerBasis:
    gens: List[Poly] = field(default_factory=list)
    mode: str = QUANTUM
    degree_bound: Optional[int] = None
    two_sided: bool = False

    def __post_init__(self) -> None:
        self._leads: List[Mono] = [g.leading_monomial() for g in self.gens]

    @property
    def leads(self) -> List[Mono]:
        return self._leads

    def __len__(self) -> int:
        return len(self.gens)

    def is_homogeneous(self) -> bool:
        return all(_is_homogeneous(g) for g in self.gens)

    def to_json(self) -> Dict[str, object]:
        return {
            "mode": self.mode,
            "two_sided": self.two_sided,
            "degree_bound": self.degree_bound,
            "gens": [str(g) for g in self.gens],
        }


# --------------------------------------------------------------------
# Helpers
# --------------------------------------------------------------------


def _mode_of(poly: Poly) -> str:
    return COMMUTATIVE if isinstance(poly, CPoly) else QUANTUM


def _resolve_mode(gens: Sequence[Poly], mode: Optional[str]) -> str:
    if mode not in (None, QUANTUM, COMMUTATIVE):
        raise DomainError(f"unknown mode {mode!r}")
    found = {_mode_of(g) for g in gens}
    if len(found) > 1:
        raise DomainError("cannot mix quantum and commutative generators")
    if found and mode is not None and found != {mode}:
        raise DomainError(f"generators are {found.pop()}, not {mode}")
    return found.pop() if found else (mode or QUANTUM)


def _prepare(poly: Poly) -> Poly:
    """Move quantum coefficients into Q(q) so leading coefficients can be inverted."""
    return poly.to_ratfunc() if isinstance(poly, QMPoly) else poly


def _is_homogeneous(poly: Poly) -> bool:
    if isinstance(poly, QMPoly):
        return multidegree(poly) is not None
    return poly.multidegree() is not None


def _monic(poly: Poly) -> Poly:
    return poly.scale(1 / poly.leading_coeff())


def _right_multiple(g: Poly, target: Mono) -> Poly:
    """g * x^(target - LM(g)), checked to lead with `target`."""
    mult = g.mul_monomial_right(mono_sub(target, g.leading_monomial()))
    if mult.leading_monomial() != target:
        raise VerificationError(
            "right multiple does not lead with the expected monomial",
            {"g": str(g), "target": list(target)},
        )
    return mult


def _leading_term(poly: Poly) -> Poly:
    lm = poly.leading_monomial()
    return type(poly).monomial(poly.m, poly.n, lm, poly.terms[lm])


# --------------------------------------------------------------------
# Reduction
# --------------------------------------------------------------------


def reduce(f: Poly, basis: Union[GroebnerBasis, Sequence[Poly]]) -> Poly:
    """
    Full normal form of f: no monomial of the result is divisible by a leading
    monomial of the basis.
    """
    gens = basis.gens if isinstance(basis, GroebnerBasis) else list(basis)
    leads = basis.leads if isinstance(basis, GroebnerBasis) else [g.leading_monomial() for g in gens]
    current = _prepare(f)
    remainder = type(current).zero(current.m, current.n)
    while not current.is_zero():
        lm = current.leading_monomial()
        lc = current.terms[lm]
        for g, glm in zip(gens, leads):
            if mono_divides(glm, lm):
                mult = _right_multiple(g, lm)
                current = current - mult.scale(lc / mult.leading_coeff())
                break
        else:
            head = type(current).monomial(current.m, current.n, lm, lc)
            remainder = remainder + head
            current = current - head
    return remainder


def s_polynomial(f: Poly, g: Poly) -> Poly:
    """Right S-polynomial on the exponent-vector lcm of the leading monomials."""
    target = mono_lcm(f.leading_monomial(), g.leading_monomial())
    left = _right_multiple(f, target)
    right = _right_multiple(g, target)
    return left.scale(1 / left.leading_coeff()) - right.scale(1 / right.leading_coeff())


# --------------------------------------------------------------------
# Completion
# --------------------------------------------------------------------


def _check_bound(degree: int, bound: Optional[int]) -> None:
    if bound is not None and degree > bound:
        raise DegreeBoundExceeded(degree, bound)


def interreduce(gens: Sequence[Poly]) -> List[Poly]:
    """Reduced basis: drop redundant leads, reduce every tail, make monic, sort by lead."""
    gens = [g for g in gens if not g.is_zero()]
    leads = [g.leading_monomial() for g in gens]
    minimal: List[Poly] = []
    for idx, (g, lm) in enumerate(zip(gens, leads)):
        redundant = any(
            mono_divides(other, lm) and (other != lm or jdx < idx)
            for jdx, other in enumerate(leads)
            if jdx != idx
        )
        if not redundant:
            minimal.append(g)
    reduced: List[Poly] = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        head = _leading_term(g)
        tail = reduce(g - head, others) if others else _prepare(g - head)
        reduced.append(_monic(_prepare(head) + tail))
    return sorted(reduced, key=lambda g: DEGLEX.key(g.leading_monomial()))


def right_groebner(
    gens: Sequence[Poly],
    degree_bound: Optional[int] = None,
    mode: Optional[str] = None,
) -> GroebnerBasis:
    """
    Reduced Groebner basis of the right ideal generated by `gens` (any ideal, in commutative mode).

    `mode` is read off the generators; pass it to tag a basis of no generators.
    """
    mode = _resolve_mode(gens, mode)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis([], mode, degree_bound)
    if mode == QUANTUM:
        DEGLEX.check_compatible(gens[0].m, gens[0].n)

    basis: List[Poly] = []
    leads: List[Mono] = []
    pairs: List[Tuple[Tuple[int, Mono], int, int]] = []

    def add(poly: Poly) -> None:
        poly = _monic(poly)
        lm = poly.leading_monomial()
        _check_bound(mono_degree(lm), degree_bound)
        for idx, other in enumerate(leads):
            target = mono_lcm(other, lm)
            if mode == COMMUTATIVE and target == mono_add(other, lm):
                continue  # coprime leads
            heapq.heappush(pairs, (DEGLEX.key(target), idx, len(basis)))
        basis.append(poly)
        leads.append(lm)

    for g in gens:
        r = reduce(g, basis)
        if not r.is_zero():
            add(r)

    processed = 0
    while pairs:
        key, i, j = heapq.heappop(pairs)
        _check_bound(key[0], degree_bound)
        processed += 1
        r = reduce(s_polynomial(basis[i], basis[j]), basis)
        if not r.is_zero():
            add(r)

    result = interreduce(basis)
    logger.debug(
        "{} right basis: {} inputs, {} pairs, {} elements",
        mode, len(gens), processed, len(result),
    )
    return GroebnerBasis(result, mode, degree_bound)


def two_sided_groebner(
    gens: Sequence[Poly],
    degree_bound: Optional[int] = None,
    mode: Optional[str] = None,
) -> GroebnerBasis:
    """Right basis closed under left multiplication by every variable."""
    basis = right_groebner(gens, degree_bound, mode)
    if not basis.gens:
        return GroebnerBasis([], basis.mode, degree_bound, two_sided=True)
    m, n = basis.gens[0].m, basis.gens[0].n
    rounds = 0
    while True:
        extra: List[Poly] = []
        for g in basis.gens:
            for v in range(m * n):
                h = reduce(g.var_left(v), basis)
                if not h.is_zero():
                    extra.append(h)
        if not extra:
            break
        rounds += 1
        logger.debug("two-sided closure round {}: {} new elements", rounds, len(extra))
        basis = right_groebner(list(basis.gens) + extra, degree_bound)
    return GroebnerBasis(basis.gens, basis.mode, degree_bound, two_sided=True)


# --------------------------------------------------------------------
# Ideal comparisons
# --------------------------------------------------------------------


def ideal_contains(a_gens: Sequence[Poly], b: GroebnerBasis) -> bool:
    return all(reduce(g, b).is_zero() for g in a_gens)


def ideal_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    return ideal_contains(a.gens, b) and ideal_contains(b.gens, a)


def first_residue(a_gens: Sequence[Poly], b: GroebnerBasis) -> Optional[Tuple[Poly, Poly]]:
    """(generator, nonzero normal form) for the first generator outside b, if any."""
    for g in a_gens:
        r = reduce(g, b)
        if not r.is_zero():
            return g, r
    return None


# --------------------------------------------------------------------
# Poset of torus-invariant ideals
# --------------------------------------------------------------------


def ideal_hasse_edges(elements: Sequence[Perm], inclusion: Sequence[Sequence[int]]) -> List[Tuple[str, str]]:
    """Covering pairs of the strict inclusion order given by a 0/1 matrix."""
    size = len(elements)
    below = [[bool(inclusion[a][b]) and a != b for b in range(size)] for a in range(size)]
    edges: List[Tuple[str, str]] = []
    for a in range(size):
        for b in range(size):
            if below[a][b] and not any(below[a][c] and below[c][b] for c in range(size)):
                edges.append((str(elements[a]), str(elements[b])))
    return sorted(edges)


def verify_poset(m: int, n: int, degree_bound: Optional[int] = None) -> Dict[str, object]:
    """
    Build I(y) = <A_q(y)> for every y <= c^m and check the poset structure.

    Checks: inclusion matrix equals the Bruhat matrix, ideals are pairwise
    distinct, right and two-sided bases agree, every basis element is homogeneous.
    """
    if m < 1 or n < 1:
        raise DomainError(f"need m, n >= 1, got {m}x{n}")
    DEGLEX.check_compatible(m, n)
    cm = coxeter_power(m + n, m)
    elements = interval_below(cm)
    logger.info("verify_poset {}x{}: {} elements below c^{}", m, n, len(elements), m)

    failures: List[Dict[str, object]] = []
    gens_by_y: List[List[QMPoly]] = []
    bases: List[GroebnerBasis] = []
    ideals: List[Dict[str, object]] = []
    for y in elements:
        gens = aq_generators(y, m, n)
        right = right_groebner(gens, degree_bound)
        two = two_sided_groebner(gens, degree_bound)
        homogeneous = all(_is_homogeneous(g) for g in gens) and two.is_homogeneous() and right.is_homogeneous()
        same = ideal_equal(right, two)
        if not homogeneous:
            failures.append({"check": "homogeneous", "y": str(y),
                             "basis": [str(g) for g in two.gens if not _is_homogeneous(g)]})
        if not same:
            extra = first_residue(two.gens, right)
            failures.append({"check": "right_equals_two_sided", "y": str(y),
                             "element": str(extra[0]) if extra else None,
                             "residue": str(extra[1]) if extra else None})
        gens_by_y.append(gens)
        bases.append(two)
        ideals.append({
            "y": str(y),
            "length": length(y),
            "generators": [str(g) for g in gens],
            "basis": [str(g) for g in two.gens],
            "basis_size": len(two),
            "homogeneous": homogeneous,
            "right_equals_two_sided": same,
        })

    size = len(elements)
    inclusion = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(size):
            residue = first_residue(gens_by_y[a], bases[b])
            inclusion[a][b] = int(residue is None)
    expected = bruhat_matrix(elements)
    for a in range(size):
        for b in range(size):
            if inclusion[a][b] != expected[a][b]:
                residue = first_residue(gens_by_y[a], bases[b])
                failures.append({
                    "check": "inclusion",
                    "y": str(elements[a]),
                    "y_prime": str(elements[b]),
                    "included": bool(inclusion[a][b]),
                    "bruhat": bool(expected[a][b]),
                    "residue": str(residue[1]) if residue else None,
                })
    distinct = all(
        not (inclusion[a][b] and inclusion[b][a])
        for a in range(size) for b in range(size) if a != b
    )
    if not distinct:
        failures.append({"check": "distinct", "pairs": [
            [str(elements[a]), str(elements[b])]
            for a in range(size) for b in range(a + 1, size)
            if inclusion[a][b] and inclusion[b][a]
        ]})

    for failure in failures:
        logger.error("poset check failed: {}", failure)
    return {
        "m": m,
        "n": n,
        "ideals": ideals,
        "inclusion_matrix": inclusion,
        "bruhat_matrix": expected,
        "ideal_hasse_edges": ideal_hasse_edges(elements, inclusion),
        "distinct": distinct,
        "failures": failures,
        "ok": not failures,
    }
