# src/tools/subsets.py

"""
k-subsets of {1..N}: the componentwise order, the p_1/p_2 splits, Demazure
index sets, and the (rows, cols) pairs naming the minors of A(y) / A_q(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from .errors import DomainError
from .weyl import Perm, apply_set, coxeter_power, longest


@dataclass(frozen=True, order=True)
class IndexSet:
    """Strictly increasing tuple of positive integers."""

    elems: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.elems, self.elems[1:])):
            raise DomainError(f"{self.elems} is not strictly increasing")
        if self.elems and self.elems[0] < 1:
            raise DomainError(f"{self.elems} has an element below 1")

    @classmethod
    def of(cls, items: Iterable[int]) -> "IndexSet":
        return cls(tuple(sorted(set(items))))

    @classmethod
    def interval(cls, lo: int, hi: int) -> "IndexSet":
        """{lo..hi}; empty when hi < lo."""
        return cls(tuple(range(lo, hi + 1)))

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, item: object) -> bool:
        return item in self.elems

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elems) + "}"

    def minus(self, other: Iterable[int]) -> "IndexSet":
        drop = set(other)
        return IndexSet(tuple(x for x in self.elems if x not in drop))

    def shifted(self, offset: int) -> "IndexSet":
        return IndexSet(tuple(x + offset for x in self.elems))

    def image(self, w: Perm) -> "IndexSet":
        return IndexSet(apply_set(w, self.elems))

    def to_json(self) -> List[int]:
        return list(self.elems)


@dataclass(frozen=True, order=True)
class MinorSpec:
    """Row and column index sets of a square minor of an m x n matrix."""

    rows: IndexSet
    cols: IndexSet

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.cols):
            raise DomainError(f"minor {self.rows} x {self.cols} is not square")

    @property
    def size(self) -> int:
        return len(self.rows)

    def sort_key(self) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
        return (self.size, self.rows.elems, self.cols.elems)

    def __str__(self) -> str:
        return f"D[{self.rows};{self.cols}]"

    def to_json(self) -> Dict[str, List[int]]:
        return {"rows": self.rows.to_json(), "cols": self.cols.to_json()}


# --------------------------------------------------------------------
# Orders and splits
# --------------------------------------------------------------------


def subset_leq(a: IndexSet, b: IndexSet) -> bool:
    if len(a) != len(b):
        raise DomainError(f"cannot compare {a} and {b}: sizes differ")
    return all(x <= y for x, y in zip(a.elems, b.elems))


def split(index_set: IndexSet, m: int, n: int) -> Tuple[IndexSet, IndexSet]:
    """(I ∩ {1..m}, I ∩ {m+1..m+n})."""
    if index_set.elems and index_set.elems[-1] > m + n:
        raise DomainError(f"{index_set} is not inside 1..{m + n}")
    p1 = IndexSet(tuple(x for x in index_set.elems if x <= m))
    p2 = IndexSet(tuple(x for x in index_set.elems if x > m))
    return p1, p2


def k_subsets(k: int, size: int) -> List[IndexSet]:
    return [IndexSet(c) for c in combinations(range(1, size + 1), k)]


def demazure_index_sets(w: Perm, k: int, size: int) -> List[IndexSet]:
    """{I : |I| = k, I <= w({1..k})}."""
    top = IndexSet.interval(1, k).image(w)
    return [i for i in k_subsets(k, size) if subset_leq(i, top)]


def complement_index_sets(w: Perm, y: Perm, k: int, size: int) -> List[IndexSet]:
    """{I : I <= w({1..k}), not I >= y({1..k})}."""
    bottom = IndexSet.interval(1, k).image(y)
    return [i for i in demazure_index_sets(w, k, size) if not subset_leq(bottom, i)]


# --------------------------------------------------------------------
# Minors named by index sets
# --------------------------------------------------------------------


def minor_from_index(m: int, n: int, k: int, index_set: IndexSet) -> MinorSpec:
    """
    The minor attached to an admissible (k, I).

    For k <= n the rows are w°_m(p_1(I)) and the columns ({m+1..m+k} minus p_2(I)) - m;
    for k > n the rows are w°_m(p_1(I) minus {1..k-n}) and the columns
    ({m+1..m+n} minus p_2(I)) - m.
    """
    size = m + n
    if not 1 <= k <= size - 1 or len(index_set) != k:
        raise DomainError(f"(k={k}, I={index_set}) is not admissible for m={m}, n={n}")
    top = IndexSet.interval(1, k).image(coxeter_power(size, m))
    if not subset_leq(index_set, top):
        raise DomainError(f"{index_set} is not below c^{m}({{1..{k}}}) = {top}")
    p1, p2 = split(index_set, m, n)
    flip = longest(m, size)
    if k <= n:
        rows = p1.image(flip)
        cols = IndexSet.interval(m + 1, m + k).minus(p2).shifted(-m)
    else:
        head = IndexSet.interval(1, k - n)
        if not set(head) <= set(p1):
            raise DomainError(f"p_1({index_set}) does not contain {head}")
        rows = p1.minus(head).image(flip)
        cols = IndexSet.interval(m + 1, m + n).minus(p2).shifted(-m)
    return MinorSpec(rows, cols)


def admissible_pairs(m: int, n: int) -> List[Tuple[int, IndexSet]]:
    """Every (k, I) with 1 <= k <= m+n-1, |I| = k and I <= c^m({1..k})."""
    size = m + n
    cm = coxeter_power(size, m)
    return [(k, i) for k in range(1, size) for i in demazure_index_sets(cm, k, size)]


def generator_pairs(y: Perm, m: int, n: int) -> List[Tuple[int, IndexSet]]:
    """The (k, I) ranging over the definition of A(y) and A_q(y)."""
    size = m + n
    cm = coxeter_power(size, m)
    return [(k, i) for k in range(1, size) for i in complement_index_sets(cm, y, k, size)]


def generator_minors(y: Perm, m: int, n: int) -> List[MinorSpec]:
    """Deduplicated MinorSpecs of A(y), sorted by (size, rows, cols)."""
    specs = {minor_from_index(m, n, k, i) for k, i in generator_pairs(y, m, n)}
    return sorted(specs, key=MinorSpec.sort_key)
