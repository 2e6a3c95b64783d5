# src/tools/coeff.py

"""
Exact coefficient arithmetic.

LaurentPoly is an element of Z[q, q^-1]; RatFunc is an element of its field
of fractions Q(q). Every structure constant in the toolkit lives in one of
these two types, so nothing here ever rounds.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from .errors import DomainError, InexactDivisionError


# --------------------------------------------------------------------
# Dense integer polynomial helpers (coefficient lists, low degree first)
# --------------------------------------------------------------------


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _content(a: List[int]) -> int:
    c = 0
    for x in a:
        c = gcd(c, x)
    return c


def _primitive(a: List[int]) -> List[int]:
    c = _content(a)
    if c in (0, 1):
        return list(a)
    return [x // c for x in a]


def _divmod_exact(a: List[int], b: List[int]) -> List[int]:
    """Quotient a / b over Z; raises if b does not divide a."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return []
    if len(a) < len(b):
        raise InexactDivisionError("divisor has larger degree than dividend")
    lb = b[-1]
    quot = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for shift in range(len(a) - len(b), -1, -1):
        top = rem[shift + len(b) - 1]
        if top == 0:
            continue
        if top % lb:
            raise InexactDivisionError("non-integral quotient coefficient")
        factor = top // lb
        quot[shift] = factor
        for idx, coeff in enumerate(b):
            rem[shift + idx] -= factor * coeff
    if any(rem):
        raise InexactDivisionError("division leaves a nonzero remainder")
    return _trim(quot)


def _pseudo_rem(a: List[int], b: List[int]) -> List[int]:
    rem = _trim(list(a))
    lb = b[-1]
    while len(rem) >= len(b):
        lr = rem[-1]
        shift = len(rem) - len(b)
        rem = [lb * x for x in rem]
        for idx, coeff in enumerate(b):
            rem[shift + idx] -= lr * coeff
        _trim(rem)
    return rem


def _poly_gcd(a: List[int], b: List[int]) -> List[int]:
    """Gcd in Z[q] via the primitive remainder sequence; leading coefficient > 0."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not a:
        g = b
    elif not b:
        g = a
    else:
        cont = gcd(_content(a), _content(b))
        x, y = _primitive(a), _primitive(b)
        if len(x) < len(y):
            x, y = y, x
        while y:
            r = _primitive(_pseudo_rem(x, y))
            x, y = y, r
        g = [cont * c for c in _primitive(x)]
    if g and g[-1] < 0:
        g = [-c for c in g]
    return g


# --------------------------------------------------------------------
# Laurent polynomials
# --------------------------------------------------------------------


Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Immutable element of Z[q, q^-1] stored as {exponent: coefficient}."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None) -> None:
        clean: Dict[int, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    clean[int(exp)] = int(coeff)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def _from_dense(cls, coeffs: List[int], shift: int) -> "LaurentPoly":
        return cls({shift + i: c for i, c in enumerate(coeffs) if c})

    @staticmethod
    def coerce(value: Scalar) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly.constant(value)
        raise TypeError(f"cannot treat {type(value).__name__} as a Laurent polynomial")

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[int, int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_exp(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_exp(self) -> int:
        return max(self._terms) if self._terms else 0

    def leading_coeff(self) -> int:
        return self._terms[self.max_exp()] if self._terms else 0

    def is_unit(self) -> bool:
        """True for +-q^k, the units of Z[q, q^-1]."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def _dense(self) -> Tuple[List[int], int]:
        """Coefficient list of q^-min * self, and min."""
        if not self._terms:
            return [], 0
        lo = self.min_exp()
        dense = [0] * (self.max_exp() - lo + 1)
        for exp, coeff in self._terms.items():
            dense[exp - lo] = coeff
        return dense, lo

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: object) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            out[exp] = out.get(exp, 0) + coeff
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.constant(other) - self
        return NotImplemented

    def __mul__(self, other: object) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            if not self.is_unit():
                raise InexactDivisionError(f"{self} is not a unit of Z[q, q^-1]")
            (exp, coeff), = self._terms.items()
            return LaurentPoly({exp * power: coeff ** (-power)})
        result = ONE
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def exact_div(self, other: Scalar) -> "LaurentPoly":
        """Quotient self / other in Z[q, q^-1]; raises InexactDivisionError on a remainder."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return ZERO
        num, lo_num = self._dense()
        den, lo_den = other._dense()
        return LaurentPoly._from_dense(_divmod_exact(num, den), lo_num - lo_den)

    def eval_q1(self) -> int:
        return sum(self._terms.values())

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for exp, coeff in sorted(self._terms.items(), reverse=True):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                power = "q" if exp == 1 else f"q^{exp}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json(self) -> Dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._terms.items())}


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)
Q_INV = LaurentPoly.monomial(-1)


# --------------------------------------------------------------------
# Field of fractions
# --------------------------------------------------------------------


class RatFunc:
    """
    Immutable element of Q(q) in canonical form.

    A nonzero value is stored as num/den with den a polynomial in q with
    nonzero constant term and positive leading coefficient, and num, den
    coprime in Z[q, q^-1] with no common integer content. Under this
    normalization equality is syntactic.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Scalar, den: Scalar = 1) -> None:
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        self.num, self.den = self._normalize(num, den)
        self._hash = None

    @staticmethod
    def _normalize(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
        if num.is_zero():
            return ZERO, ONE
        n_dense, n_lo = num._dense()
        d_dense, d_lo = den._dense()
        g = _poly_gcd(n_dense, d_dense)
        n_dense = _divmod_exact(n_dense, g)
        d_dense = _divmod_exact(d_dense, g)
        if d_dense[-1] < 0:
            n_dense = [-c for c in n_dense]
            d_dense = [-c for c in d_dense]
        return (
            LaurentPoly._from_dense(n_dense, n_lo - d_lo),
            LaurentPoly._from_dense(d_dense, 0),
        )

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        obj._hash = None
        return obj

    @staticmethod
    def coerce(value: Union[int, LaurentPoly, "RatFunc"]) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (int, LaurentPoly)):
            return RatFunc(value)
        raise TypeError(f"cannot treat {type(value).__name__} as a rational function")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def __add__(self, other: object) -> "RatFunc":
        if not isinstance(other, (int, LaurentPoly, RatFunc)):
            return NotImplemented
        other = RatFunc.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other: object) -> "RatFunc":
        if not isinstance(other, (int, LaurentPoly, RatFunc)):
            return NotImplemented
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other: object) -> "RatFunc":
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        return RatFunc.coerce(other) - self

    def __mul__(self, other: object) -> "RatFunc":
        if not isinstance(other, (int, LaurentPoly, RatFunc)):
            return NotImplemented
        other = RatFunc.coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFunc(0)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: object) -> "RatFunc":
        if not isinstance(other, (int, LaurentPoly, RatFunc)):
            return NotImplemented
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other: object) -> "RatFunc":
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        return RatFunc.coerce(other) * self.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RatFunc(other)
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def to_json(self) -> Dict[str, Dict[str, str]]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


# --------------------------------------------------------------------
# q-combinatorics
# --------------------------------------------------------------------


@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentPoly:
    """Balanced q-integer [n]_q = (q^n - q^-n) / (q - q^-1)."""
    if n < 0:
        raise DomainError(f"q_int needs n >= 0, got {n}")
    return (Q ** n - Q_INV ** n).exact_div(Q - Q_INV)


@lru_cache(maxsize=None)
def q_fact(n: int) -> LaurentPoly:
    if n < 0:
        raise DomainError(f"q_fact needs n >= 0, got {n}")
    result = ONE
    for k in range(1, n + 1):
        result = result * q_int(k)
    return result


@lru_cache(maxsize=None)
def q_binom(n: int, m: int) -> LaurentPoly:
    """Gaussian binomial [n, m]_q; always an exact Laurent polynomial."""
    if m < 0 or n < 0 or m > n:
        raise DomainError(f"q_binom needs 0 <= m <= n, got n={n}, m={m}")
    return q_fact(n).exact_div(q_fact(m) * q_fact(n - m))


def eval_q1(p: Scalar) -> int:
    return LaurentPoly.coerce(p).eval_q1()


def div_qminus1(p: Scalar) -> LaurentPoly:
    """Exact quotient p / (q - 1); p must vanish at q = 1."""
    p = LaurentPoly.coerce(p)
    if p.eval_q1() != 0:
        raise InexactDivisionError(f"{p} does not vanish at q = 1")
    if p.is_zero():
        return ZERO
    dense, lo = p._dense()
    # synthetic division by (q - 1), top coefficient first
    quot = [0] * (len(dense) - 1)
    carry = 0
    for idx in range(len(dense) - 1, 0, -1):
        carry += dense[idx]
        quot[idx - 1] = carry
    return LaurentPoly._from_dense(quot, lo)
