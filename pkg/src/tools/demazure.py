# src/tools/demazure.py

"""
The quantum exterior algebra Λ_q(K^N) with v_i v_j = -q^-1 v_j v_i (i > j)
and v_i^2 = 0, the root-vector operators Y_ij on it, Demazure supports, and
the truncated R-matrix pairing that recovers the quantum minors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from loguru import logger

from .coeff import ONE, Q_INV, ZERO, LaurentPoly, RatFunc
from .errors import DomainError, VerificationError
from .qmatrix import QMPoly, multiply, qminor
from .subsets import (
    IndexSet,
    complement_index_sets,
    demazure_index_sets,
    k_subsets,
    minor_from_index,
    subset_leq,
)
from .weyl import Perm, bruhat_leq, coxeter_power, longest

MINUS_Q_INV = -Q_INV


# --------------------------------------------------------------------
# Vectors
# --------------------------------------------------------------------


class ExtVec:
    """Element of the degree-k piece of Λ_q(K^N), in the basis u_I = v_{i1} ... v_{ik}."""

    __slots__ = ("size", "degree", "_terms")

    def __init__(self, size: int, degree: int, terms: Optional[Dict[IndexSet, LaurentPoly]] = None) -> None:
        self.size = size
        self.degree = degree
        clean: Dict[IndexSet, LaurentPoly] = {}
        for index_set, coeff in (terms or {}).items():
            if len(index_set) != degree:
                raise DomainError(f"{index_set} does not have degree {degree}")
            if index_set.elems and index_set.elems[-1] > size:
                raise DomainError(f"{index_set} is not inside 1..{size}")
            if coeff:
                clean[index_set] = coeff
        self._terms = clean

    @classmethod
    def basis(cls, size: int, index_set: IndexSet) -> "ExtVec":
        return cls(size, len(index_set), {index_set: ONE})

    @classmethod
    def zero(cls, size: int, degree: int) -> "ExtVec":
        return cls(size, degree)

    @classmethod
    def from_word(cls, size: int, word: Sequence[int]) -> "ExtVec":
        """The product v_{w1} ... v_{wk} in the sorted basis."""
        index_set, coeff = ext_normalize(word)
        if index_set is None:
            return cls(size, len(word))
        return cls(size, len(word), {index_set: coeff})

    @property
    def terms(self) -> Dict[IndexSet, LaurentPoly]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> Set[IndexSet]:
        return set(self._terms)

    def __add__(self, other: "ExtVec") -> "ExtVec":
        if (self.size, self.degree) != (other.size, other.degree):
            raise DomainError("cannot add vectors from different graded pieces")
        out = dict(self._terms)
        for index_set, coeff in other._terms.items():
            out[index_set] = out.get(index_set, ZERO) + coeff
        return ExtVec(self.size, self.degree, out)

    def __sub__(self, other: "ExtVec") -> "ExtVec":
        return self + other.scale(-1)

    def scale(self, factor) -> "ExtVec":
        return ExtVec(self.size, self.degree, {s: c * factor for s, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtVec):
            return NotImplemented
        return (self.size, self.degree) == (other.size, other.degree) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.size, self.degree, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*u{s}" for s, c in sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"ExtVec({self})"

    def to_json(self) -> List[Dict[str, object]]:
        return [{"I": s.to_json(), "coeff": c.to_json()} for s, c in sorted(self._terms.items())]


def ext_normalize(word: Sequence[int]) -> Tuple[Optional[IndexSet], LaurentPoly]:
    """
    Bubble-sort a word of generators, picking up -q^-1 per swap of a descending
    adjacent pair. A repeated letter gives (None, 0).
    """
    letters = list(word)
    if len(set(letters)) != len(letters):
        return None, ZERO
    coeff = ONE
    for end in range(len(letters) - 1, 0, -1):
        for idx in range(end):
            if letters[idx] > letters[idx + 1]:
                letters[idx], letters[idx + 1] = letters[idx + 1], letters[idx]
                coeff = coeff * MINUS_Q_INV
    return IndexSet(tuple(letters)), coeff


# --------------------------------------------------------------------
# Root-vector operators
# --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _swap_letter(index_set: IndexSet, old: int, new: int) -> Optional[Tuple[IndexSet, LaurentPoly]]:
    """
    Write u_I = c u_{I'} u_old, replace the last factor by u_new and renormalize.
    None when old is missing from I or new is already in it.
    """
    if old not in index_set or new in index_set:
        return None
    rest = list(index_set.minus([old]).elems)
    _, before = ext_normalize(rest + [old])
    target, after = ext_normalize(rest + [new])
    return target, after * before ** -1


def _apply_letter_swap(old: int, new: int, v: ExtVec) -> ExtVec:
    out: Dict[IndexSet, LaurentPoly] = {}
    for index_set, coeff in v.terms.items():
        hit = _swap_letter(index_set, old, new)
        if hit is not None:
            target, unit = hit
            out[target] = out.get(target, ZERO) + coeff * unit
    return ExtVec(v.size, v.degree, out)


def raise_op(i: int, j: int, v: ExtVec) -> ExtVec:
    """Y_ij for i < j: u_{I'} u_j -> u_{I'} u_i."""
    if not 1 <= i < j <= v.size:
        raise DomainError(f"raise_op needs 1 <= i < j <= {v.size}, got ({i}, {j})")
    return _apply_letter_swap(j, i, v)


def lower_op(j: int, i: int, v: ExtVec) -> ExtVec:
    """Y_ji for j > i: u_{I'} u_i -> u_{I'} u_j."""
    if not 1 <= i < j <= v.size:
        raise DomainError(f"lower_op needs 1 <= i < j <= {v.size}, got ({j}, {i})")
    return _apply_letter_swap(i, j, v)


def graded_basis(size: int, degree: int) -> List[ExtVec]:
    return [ExtVec.basis(size, s) for s in k_subsets(degree, size)]


def check_raise_recursion(size: int) -> List[Dict[str, object]]:
    """
    Y_ij = Y_{i,j-1} Y_{j-1,j} - q^-1 Y_{j-1,j} Y_{i,j-1} on every basis vector, j - i >= 2.
    Returns the failures.
    """
    failures: List[Dict[str, object]] = []
    for degree in range(size + 1):
        for u in graded_basis(size, degree):
            for i in range(1, size + 1):
                for j in range(i + 2, size + 1):
                    lhs = raise_op(i, j, u)
                    rhs = raise_op(i, j - 1, raise_op(j - 1, j, u)) - raise_op(
                        j - 1, j, raise_op(i, j - 1, u)
                    ).scale(Q_INV)
                    if lhs != rhs:
                        failures.append({"i": i, "j": j, "u": str(u), "lhs": str(lhs), "rhs": str(rhs)})
    return failures


def check_lower_recursion(size: int) -> List[Dict[str, object]]:
    """Y_ji = Y_{j,j-1} Y_{j-1,i} - q Y_{j-1,i} Y_{j,j-1} on every basis vector, j - i >= 2."""
    failures: List[Dict[str, object]] = []
    q = LaurentPoly.monomial(1)
    for degree in range(size + 1):
        for u in graded_basis(size, degree):
            for i in range(1, size + 1):
                for j in range(i + 2, size + 1):
                    lhs = lower_op(j, i, u)
                    rhs = lower_op(j, j - 1, lower_op(j - 1, i, u)) - lower_op(
                        j - 1, i, lower_op(j, j - 1, u)
                    ).scale(q)
                    if lhs != rhs:
                        failures.append({"j": j, "i": i, "u": str(u), "lhs": str(lhs), "rhs": str(rhs)})
    return failures


def check_nilpotence(size: int) -> List[Dict[str, object]]:
    """Y_ij Y_ij = 0 and Y_ji Y_ji = 0 on every basis vector."""
    failures: List[Dict[str, object]] = []
    for degree in range(size + 1):
        for u in graded_basis(size, degree):
            for i in range(1, size + 1):
                for j in range(i + 1, size + 1):
                    if not raise_op(i, j, raise_op(i, j, u)).is_zero():
                        failures.append({"op": f"Y{i},{j}", "u": str(u)})
                    if not lower_op(j, i, lower_op(j, i, u)).is_zero():
                        failures.append({"op": f"Y{j},{i}", "u": str(u)})
    return failures


def check_product_rules(size: int) -> List[Dict[str, object]]:
    """
    Y_ij (u_{I'} u_j) = u_{I'} u_i for I' avoiding i and j, and Y_ij u_I = 0
    when j is missing from I or i is already in it.
    """
    failures: List[Dict[str, object]] = []
    for degree in range(size):
        for rest in k_subsets(degree, size):
            for i in range(1, size + 1):
                for j in range(i + 1, size + 1):
                    if i in rest or j in rest:
                        continue
                    lhs = raise_op(i, j, ExtVec.from_word(size, list(rest) + [j]))
                    rhs = ExtVec.from_word(size, list(rest) + [i])
                    if lhs != rhs:
                        failures.append({"rule": "product", "I'": rest.to_json(), "i": i, "j": j})
    for degree in range(size + 1):
        for u_set in k_subsets(degree, size):
            for i in range(1, size + 1):
                for j in range(i + 1, size + 1):
                    if j not in u_set or i in u_set:
                        if not raise_op(i, j, ExtVec.basis(size, u_set)).is_zero():
                            failures.append({"rule": "vanishing", "I": u_set.to_json(), "i": i, "j": j})
    return failures


# --------------------------------------------------------------------
# Supports of Demazure and U_- spans
# --------------------------------------------------------------------


def lower_support(a: int, supports: Iterable[IndexSet]) -> Set[IndexSet]:
    """Simple lowering F_a at support level: adds (I - {a}) + {a+1} where possible."""
    out = set(supports)
    for index_set in list(out):
        if a in index_set and a + 1 not in index_set:
            out.add(IndexSet.of(list(index_set.minus([a])) + [a + 1]))
    return out


def uminus_span_indices(y: Perm, k: int) -> List[IndexSet]:
    """
    Support of U_- T_y v_{1..k}: the closure of {y({1..k})} under every F_a,
    checked against {I : I >= y({1..k})}.
    """
    size = y.size
    start = IndexSet.interval(1, k).image(y)
    closure = {start}
    while True:
        grown = set(closure)
        for a in range(1, size):
            grown = lower_support(a, grown)
        if grown == closure:
            break
        closure = grown
    expected = {s for s in k_subsets(k, size) if subset_leq(start, s)}
    if closure != expected:
        raise VerificationError(
            "U_- orbit support differs from the upper set of y({1..k})",
            {"y": str(y), "k": k,
             "closure": sorted(s.to_json() for s in closure),
             "expected": sorted(s.to_json() for s in expected)},
        )
    return sorted(closure)


def ortho_complement_indices(w: Perm, y: Perm, k: int) -> List[IndexSet]:
    """Demazure support of w minus the U_- support of y, checked against the combinatorial set."""
    if not bruhat_leq(y, w):
        raise DomainError(f"{y} is not below {w}")
    size = w.size
    span = set(uminus_span_indices(y, k))
    route = [s for s in demazure_index_sets(w, k, size) if s not in span]
    combinatorial = complement_index_sets(w, y, k, size)
    if set(route) != set(combinatorial):
        raise VerificationError(
            "representation and combinatorial complements differ",
            {"w": str(w), "y": str(y), "k": k,
             "representation": [s.to_json() for s in route],
             "combinatorial": [s.to_json() for s in combinatorial]},
        )
    return sorted(route)


# --------------------------------------------------------------------
# Truncated R-matrix pairing
# --------------------------------------------------------------------


@dataclass
class PairingState:
    """Element sum_J u_J (x) f_J of Λ_q ⊗ R_q[M_{m,n}], homogeneous of exterior degree k."""

    m: int
    n: int
    k: int
    terms: Dict[IndexSet, QMPoly] = field(default_factory=dict)

    @classmethod
    def initial(cls, m: int, n: int, k: int) -> "PairingState":
        """u_{w°_m c^m({1..k})} (x) 1."""
        size = m + n
        start = IndexSet.interval(1, k).image(coxeter_power(size, m)).image(longest(m, size))
        return cls(m, n, k, {start: QMPoly.one(m, n)})

    def apply_factor(self, i: int, j: int) -> "PairingState":
        """Act by 1 + Y_{i, m+j} (x) x_ij, with x_ij multiplied on the left of the algebra part."""
        x_ij = QMPoly.var(self.m, self.n, i, j)
        out = dict(self.terms)
        for index_set, poly in self.terms.items():
            hit = _swap_letter(index_set, self.m + j, i)
            if hit is None:
                continue
            target, unit = hit
            term = multiply(x_ij, poly).scale(unit)
            out[target] = out[target] + term if target in out else term
        return PairingState(self.m, self.n, self.k, {s: p for s, p in out.items() if not p.is_zero()})

    def coefficient(self, index_set: IndexSet) -> QMPoly:
        return self.terms.get(index_set, QMPoly.zero(self.m, self.n))


def rmatrix_pairing(m: int, n: int, k: int, index_set: IndexSet) -> Tuple[QMPoly, RatFunc]:
    """
    Coefficient of u_{w°_m(I)} after applying prod (1 + Y_{i,m+j} (x) x_ij)
    to u_{w°_m c^m({1..k})} (x) 1, with the scalar s such that the
    coefficient equals s times the predicted quantum minor.
    """
    size = m + n
    spec = minor_from_index(m, n, k, index_set)
    state = PairingState.initial(m, n, k)
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            state = state.apply_factor(i, j)
    result = state.coefficient(index_set.image(longest(m, size)))
    predicted = qminor(m, n, spec.rows, spec.cols)
    witness = {"k": k, "I": index_set.to_json(), "minor": spec.to_json(),
               "result": str(result), "predicted": str(predicted)}
    if result.is_zero():
        raise VerificationError("pairing vanished", witness)
    lead = predicted.leading_monomial()
    if lead not in result.terms:
        raise VerificationError("pairing is not proportional to the predicted minor", witness)
    scalar = RatFunc.coerce(result.terms[lead]) / RatFunc.coerce(predicted.terms[lead])
    if result.to_ratfunc() != predicted.to_ratfunc().scale(scalar):
        raise VerificationError("pairing is not proportional to the predicted minor", witness)
    logger.debug("pairing {}x{} k={} I={} -> {} times {}", m, n, k, index_set, scalar, spec)
    return result, scalar
