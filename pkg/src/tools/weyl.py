# src/tools/weyl.py

"""
The symmetric group S_N: one-line permutations, lengths, reduced words,
Bruhat order and the special elements c, c^m, w°_k, w°r_k.

Composition is function composition: compose(u, v)(i) = u(v(i)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .errors import DomainError


@dataclass(frozen=True, order=True)
class Perm:
    """Element of S_N in one-line notation: oneline[i-1] = w(i)."""

    oneline: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.oneline) != list(range(1, len(self.oneline) + 1)):
            raise DomainError(f"{self.oneline} is not a permutation of 1..{len(self.oneline)}")

    @classmethod
    def identity(cls, size: int) -> "Perm":
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def parse(cls, text: str) -> "Perm":
        """Compact one-line notation such as '3412' (one digit per letter)."""
        text = text.strip()
        if not text.isdigit():
            raise DomainError(f"expected compact one-line notation like '3412', got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def size(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __str__(self) -> str:
        if self.size > 9:
            return ",".join(str(x) for x in self.oneline)
        return "".join(str(x) for x in self.oneline)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.oneline, start=1))

    def matrix(self) -> np.ndarray:
        """Permutation matrix with a 1 at row w(j), column j (0-based storage)."""
        mat = np.zeros((self.size, self.size), dtype=np.int64)
        for j, wj in enumerate(self.oneline):
            mat[wj - 1, j] = 1
        return mat


# --------------------------------------------------------------------
# Group operations
# --------------------------------------------------------------------


def _check_same(u: Perm, v: Perm) -> None:
    if u.size != v.size:
        raise DomainError(f"size mismatch: S_{u.size} vs S_{v.size}")


def compose(u: Perm, v: Perm) -> Perm:
    _check_same(u, v)
    return Perm(tuple(u(v(i)) for i in range(1, v.size + 1)))


def compose_all(perms: Sequence[Perm]) -> Perm:
    if not perms:
        raise DomainError("compose_all needs at least one permutation")
    result = perms[-1]
    for p in reversed(perms[:-1]):
        result = compose(p, result)
    return result


def inverse(u: Perm) -> Perm:
    inv = [0] * u.size
    for i, ui in enumerate(u.oneline, start=1):
        inv[ui - 1] = i
    return Perm(tuple(inv))


def length(u: Perm) -> int:
    """Number of inversions."""
    w = u.oneline
    return sum(1 for a, b in combinations(range(len(w)), 2) if w[a] > w[b])


def apply_set(u: Perm, index_set: Iterable[int]) -> Tuple[int, ...]:
    """Sorted image u(I)."""
    return tuple(sorted(u(i) for i in index_set))


def simple(i: int, size: int) -> Perm:
    """The simple transposition s_i = (i, i+1) in S_size."""
    if not 1 <= i < size:
        raise DomainError(f"s_{i} does not exist in S_{size}")
    w = list(range(1, size + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Perm(tuple(w))


# --------------------------------------------------------------------
# Special elements
# --------------------------------------------------------------------


def coxeter(size: int) -> Perm:
    """The cycle c = (1 2 ... N)."""
    return Perm(tuple(list(range(2, size + 1)) + [1]))


def coxeter_power(size: int, m: int) -> Perm:
    return Perm(tuple((i - 1 + m) % size + 1 for i in range(1, size + 1)))


def longest(k: int, size: int) -> Perm:
    """w°_k: the longest element of S({1..k}) inside S_size."""
    if not 1 <= k <= size:
        raise DomainError(f"longest({k}, {size}) needs 1 <= k <= N")
    return Perm(tuple(list(range(k, 0, -1)) + list(range(k + 1, size + 1))))


def longest_rev(k: int, size: int) -> Perm:
    """w°r_k: the longest element of S({N-k+1..N}) inside S_size."""
    if not 1 <= k <= size:
        raise DomainError(f"longest_rev({k}, {size}) needs 1 <= k <= N")
    return Perm(tuple(list(range(1, size - k + 1)) + list(range(size, size - k, -1))))


def reduced_word(w: Perm) -> List[int]:
    """One canonical reduced word [i_1, ..., i_l] with w = s_{i_1} ... s_{i_l}."""
    word: List[int] = []
    current = w
    while not current.is_identity():
        line = current.oneline
        descent = next(i for i in range(1, current.size) if line[i - 1] > line[i])
        word.append(descent)
        current = compose(current, simple(descent, current.size))
    word.reverse()
    return word


def word_product(word: Sequence[int], size: int) -> Perm:
    result = Perm.identity(size)
    for i in word:
        result = compose(result, simple(i, size))
    return result


def coxeter_power_word(m: int, n: int) -> List[int]:
    """(s_m ... s_1)(s_{m+1} ... s_2) ... (s_{m+n-1} ... s_n), a reduced word of c^m."""
    word: List[int] = []
    for block in range(n):
        word.extend(range(m + block, block, -1))
    return word


# --------------------------------------------------------------------
# Bruhat order
# --------------------------------------------------------------------


def _rank_counts(w: Perm) -> np.ndarray:
    """counts[i-1, j-1] = #{a <= i : w(a) >= j}."""
    size = w.size
    hits = np.zeros((size, size), dtype=np.int64)
    for a, wa in enumerate(w.oneline):
        hits[a, :wa] = 1
    return np.cumsum(hits, axis=0)


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Dominance criterion on the counting matrices."""
    _check_same(u, w)
    if length(u) > length(w):
        return False
    return bool(np.all(_rank_counts(u) <= _rank_counts(w)))


def bruhat_leq_subword(u: Perm, w: Perm) -> bool:
    """Subword criterion on one reduced word of w; slow, used as an oracle."""
    _check_same(u, w)
    return u in _subword_products(w)


@lru_cache(maxsize=None)
def _subword_products(w: Perm) -> frozenset:
    word = reduced_word(w)
    found = {Perm.identity(w.size)}
    for letter in word:
        step = simple(letter, w.size)
        found |= {compose(p, step) for p in found}
    return frozenset(found)


def all_perms(size: int) -> List[Perm]:
    return [Perm(p) for p in permutations(range(1, size + 1))]


def _sort_key(w: Perm) -> Tuple[int, Tuple[int, ...]]:
    return (length(w), w.oneline)


def lower_covers(w: Perm) -> List[Perm]:
    """Elements y = w.(a b) with length(y) = length(w) - 1."""
    target = length(w) - 1
    line = w.oneline
    covers: List[Perm] = []
    for a, b in combinations(range(w.size), 2):
        if line[a] > line[b]:
            swapped = list(line)
            swapped[a], swapped[b] = swapped[b], swapped[a]
            y = Perm(tuple(swapped))
            if length(y) == target:
                covers.append(y)
    return covers


@lru_cache(maxsize=None)
def _interval_below(w: Perm) -> Tuple[Perm, ...]:
    seen = {w}
    frontier = [w]
    while frontier:
        nxt: List[Perm] = []
        for y in frontier:
            for z in lower_covers(y):
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return tuple(sorted(seen, key=_sort_key))


def interval_below(w: Perm) -> List[Perm]:
    """W^{<=w}, sorted by (length, one-line)."""
    return list(_interval_below(w))


def interval(u: Perm, w: Perm) -> List[Perm]:
    """{y : u <= y <= w}."""
    return [y for y in interval_below(w) if bruhat_leq(u, y)]


def hasse_edges(elements: Sequence[Perm]) -> List[Tuple[Perm, Perm]]:
    """Covering pairs (y, y') of the Bruhat order restricted to `elements`."""
    lengths = {y: length(y) for y in elements}
    edges: List[Tuple[Perm, Perm]] = []
    for low in elements:
        for high in elements:
            # the order is graded by length, so a length gap of one admits no interpolant
            if lengths[high] == lengths[low] + 1 and bruhat_leq(low, high):
                edges.append((low, high))
    return sorted(edges, key=lambda e: (_sort_key(e[0]), _sort_key(e[1])))


def bruhat_matrix(elements: Sequence[Perm]) -> List[List[int]]:
    return [[int(bruhat_leq(a, b)) for b in elements] for a in elements]


def hasse_dot(elements: Sequence[Perm], name: str = "bruhat") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for y in elements:
        lines.append(f'  "{y}" [label="{y}\\nl={length(y)}"];')
    for low, high in hasse_edges(elements):
        lines.append(f'  "{low}" -> "{high}";')
    lines.append("}")
    return "\n".join(lines)
