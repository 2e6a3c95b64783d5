# src/tools/cpoly.py

"""Commutative polynomials in the x_ij of an m x n matrix, with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import DomainError
from .monomials import (
    Mono,
    deglex_key,
    mono_add,
    mono_json,
    mono_multidegree,
    mono_str,
    one_mono,
    unit_mono,
    var_index,
)

Number = Union[int, Fraction]


class CPoly:
    """Immutable element of Q[x_11, ..., x_mn] in canonical sorted-monomial form."""

    __slots__ = ("m", "n", "_terms", "_hash")

    def __init__(self, m: int, n: int, terms: Optional[Mapping[Mono, Number]] = None) -> None:
        self.m = m
        self.n = n
        clean: Dict[Mono, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[tuple(mono)] = Fraction(coeff)
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls, m: int, n: int) -> "CPoly":
        return cls(m, n)

    @classmethod
    def one(cls, m: int, n: int) -> "CPoly":
        return cls(m, n, {one_mono(m, n): 1})

    @classmethod
    def var(cls, m: int, n: int, i: int, j: int) -> "CPoly":
        return cls(m, n, {unit_mono(m, n, var_index(n, i, j)): 1})

    @classmethod
    def monomial(cls, m: int, n: int, mono: Mono, coeff: Number = 1) -> "CPoly":
        return cls(m, n, {mono: coeff})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> Dict[Mono, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def monomials(self) -> List[Mono]:
        return sorted(self._terms, key=deglex_key, reverse=True)

    def leading_monomial(self) -> Mono:
        if not self._terms:
            raise DomainError("the zero polynomial has no leading monomial")
        return max(self._terms, key=deglex_key)

    def leading_coeff(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def degree(self) -> int:
        return max((sum(a) for a in self._terms), default=0)

    def multidegree(self) -> Optional[Tuple[int, ...]]:
        degs = {mono_multidegree(self.m, self.n, a) for a in self._terms}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else tuple([0] * (self.m + self.n))

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "CPoly") -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise DomainError(f"shape mismatch: {self.m}x{self.n} vs {other.m}x{other.n}")

    def __add__(self, other: "CPoly") -> "CPoly":
        self._check(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return CPoly(self.m, self.n, out)

    def __neg__(self) -> "CPoly":
        return CPoly(self.m, self.n, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: "CPoly") -> "CPoly":
        return self + (-other)

    def scale(self, factor: Number) -> "CPoly":
        return CPoly(self.m, self.n, {a: c * factor for a, c in self._terms.items()})

    def __mul__(self, other: Union["CPoly", Number]) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CPoly):
            return NotImplemented
        self._check(other)
        out: Dict[Mono, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                ab = mono_add(a, b)
                out[ab] = out.get(ab, 0) + ca * cb
        return CPoly(self.m, self.n, out)

    def __rmul__(self, other: Number) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def mul_monomial_right(self, mono: Mono) -> "CPoly":
        return CPoly(self.m, self.n, {mono_add(a, mono): c for a, c in self._terms.items()})

    def var_left(self, v: int) -> "CPoly":
        return self.mul_monomial_right(unit_mono(self.m, self.n, v))

    def derivative(self, v: int) -> "CPoly":
        out: Dict[Mono, Fraction] = {}
        for a, c in self._terms.items():
            if a[v]:
                lowered = list(a)
                lowered[v] -= 1
                out[tuple(lowered)] = c * a[v]
        return CPoly(self.m, self.n, out)

    def evaluate(self, values: Sequence[Sequence[Number]]) -> Fraction:
        """Value at the m x n matrix `values`."""
        flat = [Fraction(values[i][j]) for i in range(self.m) for j in range(self.n)]
        total = Fraction(0)
        for a, c in self._terms.items():
            term = c
            for v, e in enumerate(a):
                if e:
                    term *= flat[v] ** e
            total += term
        return total

    # -- comparison / rendering ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CPoly):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, self.n, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for a in self.monomials():
            c = self._terms[a]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono_str(self.n, a)
            if body == "1":
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            pieces.append(f"{sign} {body}")
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"CPoly({self})"

    def to_json(self) -> List[Dict[str, object]]:
        return [
            {"monomial": mono_json(self.n, a), "coeff": str(self._terms[a])}
            for a in self.monomials()
        ]


def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def determinant(m: int, n: int, rows: Iterable[int], cols: Iterable[int]) -> CPoly:
    """Classical minor Δ_{rows, cols}; the empty minor is 1."""
    rows = list(rows)
    cols = list(cols)
    if len(rows) != len(cols):
        raise DomainError(f"minor {rows} x {cols} is not square")
    out: Dict[Mono, int] = {}
    for perm in permutations(range(len(cols))):
        exps = [0] * (m * n)
        for r, p in zip(rows, perm):
            exps[var_index(n, r, cols[p])] += 1
        out[tuple(exps)] = (-1) ** _inversions(perm)
    return CPoly(m, n, out)
