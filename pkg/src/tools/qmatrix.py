# src/tools/qmatrix.py

"""
The quantum matrix algebra R_q[M_{m,n}].

Elements are kept in PBW normal form: a map from exponent vectors (ordered
products of the x_ij in row-major order) to coefficients. Products are
straightened with the four defining relations

    x_ij x_lj = q x_lj x_ij                              (i < l)
    x_ij x_ik = q x_ik x_ij                              (j < k)
    x_ij x_lk = x_lk x_ij                                (i < l, j > k)
    x_ij x_lk - x_lk x_ij = (q - q^-1) x_ik x_lj         (i < l, j < k)

Coefficients are LaurentPoly, or RatFunc once an element enters Groebner
reduction; arithmetic works for either.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from .coeff import ONE, Q, Q_INV, LaurentPoly, RatFunc
from .cpoly import CPoly
from .errors import DomainError, VerificationError
from .monomials import (
    Mono,
    deglex_key,
    mono_json,
    mono_multidegree,
    mono_str,
    mono_word,
    one_mono,
    unit_mono,
    var_index,
    var_pair,
    word_mono,
)
from .subsets import IndexSet, MinorSpec, generator_minors, generator_pairs, minor_from_index
from .weyl import Perm, bruhat_leq, coxeter_power

Coeff = Union[LaurentPoly, RatFunc]
Scalar = Union[int, LaurentPoly, RatFunc]


# --------------------------------------------------------------------
# Straightening
# --------------------------------------------------------------------


@dataclass(frozen=True)
class SwapRule:
    """x_b x_a = coeff * x_a x_b + corr_coeff * x_s x_t for variable indices a < b."""

    coeff: LaurentPoly
    corr_coeff: Optional[LaurentPoly] = None
    corr: Optional[Tuple[int, int]] = None


@lru_cache(maxsize=None)
def relation_table(m: int, n: int) -> Dict[Tuple[int, int], SwapRule]:
    """
    Swap rules for every pair of variables a < b.

    Each correction term is checked to share the multidegree of x_a x_b and to
    sit strictly below it in the degree-lex order.
    """
    table: Dict[Tuple[int, int], SwapRule] = {}
    for a in range(m * n):
        for b in range(a + 1, m * n):
            i, j = var_pair(n, a)
            l, k = var_pair(n, b)
            if i == l or j == k:
                rule = SwapRule(Q_INV)
            elif j > k:
                rule = SwapRule(ONE)
            else:
                s, t = var_index(n, i, k), var_index(n, l, j)
                rule = SwapRule(ONE, -(Q - Q_INV), (s, t))
                lead = word_mono(m, n, [a, b])
                corr = word_mono(m, n, [s, t])
                if mono_multidegree(m, n, lead) != mono_multidegree(m, n, corr):
                    raise VerificationError(
                        "straightening changes the multidegree",
                        {"lead": mono_json(n, lead), "correction": mono_json(n, corr)},
                    )
                if not deglex_key(corr) < deglex_key(lead):
                    raise VerificationError(
                        "correction term is not below the leading term",
                        {"lead": mono_json(n, lead), "correction": mono_json(n, corr)},
                    )
            table[(a, b)] = rule
    return table


Terms = Tuple[Tuple[Mono, LaurentPoly], ...]


def _accumulate(out: Dict[Mono, LaurentPoly], mono: Mono, coeff: LaurentPoly) -> None:
    total = out.get(mono)
    total = coeff if total is None else total + coeff
    if total.is_zero():
        out.pop(mono, None)
    else:
        out[mono] = total


@lru_cache(maxsize=None)
def _mono_times_var(m: int, n: int, mono: Mono, v: int) -> Terms:
    """Normal form of (ordered monomial) * x_v, by moving x_v left past larger variables."""
    last = max((idx for idx, e in enumerate(mono) if e), default=-1)
    if last <= v:
        bumped = list(mono)
        bumped[v] += 1
        return ((tuple(bumped), ONE),)
    prefix = list(mono)
    prefix[last] -= 1
    prefix = tuple(prefix)
    rule = relation_table(m, n)[(v, last)]
    out: Dict[Mono, LaurentPoly] = {}
    # mono * x_v = prefix * (x_last x_v) = rule.coeff * (prefix x_v) x_last + corr
    for mid, c1 in _mono_times_var(m, n, prefix, v):
        for end, c2 in _mono_times_var(m, n, mid, last):
            _accumulate(out, end, rule.coeff * c1 * c2)
    if rule.corr is not None:
        s, t = rule.corr
        for mid, c1 in _mono_times_var(m, n, prefix, s):
            for end, c2 in _mono_times_var(m, n, mid, t):
                _accumulate(out, end, rule.corr_coeff * c1 * c2)
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _mono_times_mono(m: int, n: int, left: Mono, right: Mono) -> Terms:
    current: Dict[Mono, LaurentPoly] = {left: ONE}
    for v in mono_word(right):
        nxt: Dict[Mono, LaurentPoly] = {}
        for mono, coeff in current.items():
            for out_mono, c in _mono_times_var(m, n, mono, v):
                _accumulate(nxt, out_mono, coeff * c)
        current = nxt
    return tuple(sorted(current.items()))


# --------------------------------------------------------------------
# Elements
# --------------------------------------------------------------------


class QMPoly:
    """Immutable element of R_q[M_{m,n}] in PBW normal form."""

    __slots__ = ("m", "n", "_terms", "_hash")

    def __init__(self, m: int, n: int, terms: Optional[Mapping[Mono, Scalar]] = None) -> None:
        self.m = m
        self.n = n
        clean: Dict[Mono, Coeff] = {}
        if terms:
            for mono, coeff in terms.items():
                if isinstance(coeff, int):
                    coeff = LaurentPoly.constant(coeff)
                if coeff:
                    if len(mono) != m * n:
                        raise DomainError(f"monomial {mono} does not fit a {m}x{n} matrix")
                    clean[tuple(mono)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls, m: int, n: int) -> "QMPoly":
        return cls(m, n)

    @classmethod
    def one(cls, m: int, n: int) -> "QMPoly":
        return cls(m, n, {one_mono(m, n): ONE})

    @classmethod
    def var(cls, m: int, n: int, i: int, j: int) -> "QMPoly":
        if not (1 <= i <= m and 1 <= j <= n):
            raise DomainError(f"x_{i}{j} is not a variable of a {m}x{n} matrix")
        return cls(m, n, {unit_mono(m, n, var_index(n, i, j)): ONE})

    @classmethod
    def monomial(cls, m: int, n: int, mono: Mono, coeff: Scalar = 1) -> "QMPoly":
        return cls(m, n, {mono: coeff})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> Dict[Mono, Coeff]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def monomials(self) -> List[Mono]:
        return sorted(self._terms, key=deglex_key, reverse=True)

    def leading_monomial(self) -> Mono:
        if not self._terms:
            raise DomainError("the zero element has no leading monomial")
        return max(self._terms, key=deglex_key)

    def leading_coeff(self) -> Coeff:
        return self._terms[self.leading_monomial()]

    def degree(self) -> int:
        return max((sum(a) for a in self._terms), default=0)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "QMPoly") -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise DomainError(f"shape mismatch: {self.m}x{self.n} vs {other.m}x{other.n}")

    def __add__(self, other: "QMPoly") -> "QMPoly":
        if not isinstance(other, QMPoly):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = out.get(mono)
            out[mono] = coeff if total is None else total + coeff
        return QMPoly(self.m, self.n, out)

    def __neg__(self) -> "QMPoly":
        return QMPoly(self.m, self.n, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: "QMPoly") -> "QMPoly":
        if not isinstance(other, QMPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> "QMPoly":
        if isinstance(factor, int):
            factor = LaurentPoly.constant(factor)
        return QMPoly(self.m, self.n, {a: c * factor for a, c in self._terms.items()})

    def __mul__(self, other: Union["QMPoly", Scalar]) -> "QMPoly":
        if isinstance(other, QMPoly):
            return multiply(self, other)
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "QMPoly":
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def mul_monomial_right(self, mono: Mono) -> "QMPoly":
        return multiply(self, QMPoly.monomial(self.m, self.n, mono))

    def var_left(self, v: int) -> "QMPoly":
        return multiply(QMPoly.monomial(self.m, self.n, unit_mono(self.m, self.n, v)), self)

    def to_ratfunc(self) -> "QMPoly":
        return QMPoly(self.m, self.n, {a: RatFunc.coerce(c) for a, c in self._terms.items()})

    # -- comparison / rendering ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMPoly):
            return NotImplemented
        if (self.m, self.n) != (other.m, other.n) or self._terms.keys() != other._terms.keys():
            return False
        return all(c == other._terms[a] for a, c in self._terms.items())

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, self.n, frozenset(self._terms)))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for a in self.monomials():
            coeff = self._terms[a]
            body = mono_str(self.n, a)
            text = str(coeff)
            if isinstance(coeff, LaurentPoly) and len(coeff.terms) == 1:
                negative = coeff.leading_coeff() < 0
                mag = -coeff if negative else coeff
                mag_text = str(mag)
                if body == "1":
                    piece = mag_text
                elif mag_text == "1":
                    piece = body
                else:
                    piece = f"{mag_text}*{body}"
                pieces.append(("- " if negative else "+ ") + piece)
            else:
                pieces.append("+ " + (f"({text})" if body == "1" else f"({text})*{body}"))
        joined = " ".join(pieces)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]

    def __repr__(self) -> str:
        return f"QMPoly({self})"

    def to_json(self) -> List[Dict[str, object]]:
        return [
            {"monomial": mono_json(self.n, a), "coeff": self._terms[a].to_json()}
            for a in self.monomials()
        ]


def multiply(f: QMPoly, g: QMPoly) -> QMPoly:
    """Product f * g rewritten to PBW normal form."""
    f._check(g)
    out: Dict[Mono, Coeff] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            for ab, c in _mono_times_mono(f.m, f.n, a, b):
                term = ca * cb * c
                total = out.get(ab)
                out[ab] = term if total is None else total + term
    return QMPoly(f.m, f.n, out)


def multiply_word(m: int, n: int, word: Sequence[Tuple[int, int]]) -> QMPoly:
    """Normal form of the ordered product x_{i1 j1} x_{i2 j2} ..."""
    result = QMPoly.one(m, n)
    for i, j in word:
        result = multiply(result, QMPoly.var(m, n, i, j))
    return result


# --------------------------------------------------------------------
# Quantum minors and generating sets
# --------------------------------------------------------------------


def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def _signed_q_power(exp: int) -> LaurentPoly:
    """(-q)^exp for any integer exp."""
    return LaurentPoly.monomial(exp, -1 if exp % 2 else 1)


@lru_cache(maxsize=None)
def qminor(m: int, n: int, rows: IndexSet, cols: IndexSet, verify: bool = False) -> QMPoly:
    """
    Quantum minor Δ^q_{rows, cols} = sum over σ of (-q)^{l(σ)} x_{i1 jσ(1)} ... x_{ik jσ(k)}.

    With verify=True the reversed expansion with (-q)^{-l(σ)} is straightened
    as well and must agree.
    """
    if len(rows) != len(cols):
        raise DomainError(f"minor {rows} x {cols} is not square")
    if any(not 1 <= r <= m for r in rows) or any(not 1 <= c <= n for c in cols):
        raise DomainError(f"minor {rows} x {cols} does not fit a {m}x{n} matrix")
    r, c = rows.elems, cols.elems
    terms: Dict[Mono, LaurentPoly] = {}
    for perm in permutations(range(len(c))):
        word = [var_index(n, r[a], c[perm[a]]) for a in range(len(r))]
        terms[word_mono(m, n, word)] = _signed_q_power(_inversions(perm))
    first = QMPoly(m, n, terms)
    if verify:
        second = qminor_reversed(m, n, rows, cols)
        if first != second:
            raise VerificationError(
                "the two expansions of the quantum minor disagree",
                {"rows": rows.to_json(), "cols": cols.to_json(),
                 "first": first.to_json(), "second": second.to_json()},
            )
    return first


def qminor_reversed(m: int, n: int, rows: IndexSet, cols: IndexSet) -> QMPoly:
    """sum over σ of (-q)^{-l(σ)} x_{ik jσ(k)} ... x_{i1 jσ(1)}, straightened."""
    r, c = rows.elems, cols.elems
    total = QMPoly.zero(m, n)
    for perm in permutations(range(len(c))):
        word = [(r[a], c[perm[a]]) for a in reversed(range(len(r)))]
        total = total + multiply_word(m, n, word).scale(_signed_q_power(-_inversions(perm)))
    return total


def minor_poly(m: int, n: int, spec: MinorSpec) -> QMPoly:
    return qminor(m, n, spec.rows, spec.cols)


def require_below_coxeter(y: Perm, m: int, n: int) -> None:
    if y.size != m + n:
        raise DomainError(f"{y} is not an element of S_{m + n}")
    if not bruhat_leq(y, coxeter_power(m + n, m)):
        raise DomainError(f"{y} is not below c^{m} = {coxeter_power(m + n, m)} in the Bruhat order")


def aq_generators(y: Perm, m: int, n: int) -> List[QMPoly]:
    """A_q(y): the deduplicated quantum minors, sorted by (size, rows, cols)."""
    require_below_coxeter(y, m, n)
    gens = [minor_poly(m, n, spec) for spec in generator_minors(y, m, n)]
    logger.debug("A_q({}) at {}x{} has {} generators", y, m, n, len(gens))
    return gens


def aq_generator_table(y: Perm, m: int, n: int) -> List[Dict[str, object]]:
    """One row per admissible (k, I), flagging minors already produced by an earlier row."""
    require_below_coxeter(y, m, n)
    seen = set()
    rows: List[Dict[str, object]] = []
    for k, index_set in generator_pairs(y, m, n):
        spec = minor_from_index(m, n, k, index_set)
        rows.append({
            "k": k,
            "I": index_set.to_json(),
            "minor": spec.to_json(),
            "qminor": str(minor_poly(m, n, spec)),
            "duplicate": spec in seen,
        })
        seen.add(spec)
    return rows


# --------------------------------------------------------------------
# Grading, torus action, q = 1
# --------------------------------------------------------------------


@dataclass(frozen=True)
class MultiDeg:
    """(a_1..a_m, b_1..b_n) with deg x_ij = e_i - f_j."""

    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    @property
    def vector(self) -> Tuple[int, ...]:
        return self.rows + self.cols

    def to_json(self) -> List[int]:
        return list(self.vector)


def multidegree(f: QMPoly) -> Optional[MultiDeg]:
    """Common multidegree of the terms of f, or None for an inhomogeneous element."""
    degs = {mono_multidegree(f.m, f.n, a) for a in f.terms}
    if len(degs) > 1:
        return None
    vec = degs.pop() if degs else (0,) * (f.m + f.n)
    return MultiDeg(vec[: f.m], vec[f.m:])


def is_homogeneous(f: QMPoly) -> bool:
    return multidegree(f) is not None


def scale_action(weights: Sequence[int], f: QMPoly) -> QMPoly:
    """(a_1..a_m, b_1..b_n) . x_ij = q^{a_i - b_j} x_ij, extended multiplicatively."""
    if len(weights) != f.m + f.n:
        raise DomainError(f"expected {f.m + f.n} weights, got {len(weights)}")
    a, b = list(weights[: f.m]), list(weights[f.m:])
    out: Dict[Mono, Coeff] = {}
    for mono, coeff in f.terms.items():
        power = 0
        for v, e in enumerate(mono):
            if e:
                i, j = var_pair(f.n, v)
                power += e * (a[i - 1] - b[j - 1])
        out[mono] = coeff * LaurentPoly.monomial(power)
    return QMPoly(f.m, f.n, out)


def specialize_q1(f: QMPoly) -> CPoly:
    """Evaluate every coefficient at q = 1."""
    out: Dict[Mono, Fraction] = {}
    for mono, coeff in f.terms.items():
        if not isinstance(coeff, LaurentPoly):
            raise DomainError("specialize_q1 needs coefficients in Z[q, q^-1]")
        value = coeff.eval_q1()
        if value:
            out[mono] = Fraction(value)
    return CPoly(f.m, f.n, out)
