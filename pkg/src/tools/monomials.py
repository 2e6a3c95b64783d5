# src/tools/monomials.py

"""
Exponent-vector monomials in the variables x_ij of an m x n matrix.

Variables are numbered row-major: x_11, x_12, ..., x_1n, x_21, ..., x_mn get
indices 0, 1, ..., mn-1. A monomial is a tuple of exponents over that order;
in the quantum algebra it denotes the ordered (PBW) product.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

Mono = Tuple[int, ...]


def var_index(n: int, i: int, j: int) -> int:
    return (i - 1) * n + (j - 1)


def var_pair(n: int, v: int) -> Tuple[int, int]:
    return v // n + 1, v % n + 1


def one_mono(m: int, n: int) -> Mono:
    return (0,) * (m * n)


def unit_mono(m: int, n: int, v: int) -> Mono:
    exps = [0] * (m * n)
    exps[v] = 1
    return tuple(exps)


def mono_add(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_sub(a: Mono, b: Mono) -> Mono:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True if a divides b as exponent vectors."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Mono) -> int:
    return sum(a)


def deglex_key(a: Mono) -> Tuple[int, Mono]:
    """Degree first, then lexicographic with the earlier variable heavier."""
    return (sum(a), a)


def mono_word(a: Mono) -> List[int]:
    """The ordered word of variable indices, with multiplicity."""
    word: List[int] = []
    for v, e in enumerate(a):
        word.extend([v] * e)
    return word


def word_mono(m: int, n: int, word: Sequence[int]) -> Mono:
    exps = [0] * (m * n)
    for v in word:
        exps[v] += 1
    return tuple(exps)


def mono_multidegree(m: int, n: int, a: Mono) -> Tuple[int, ...]:
    """deg x_ij = e_i - f_j in Z^{m+n}."""
    rows = [0] * m
    cols = [0] * n
    for v, e in enumerate(a):
        if e:
            i, j = var_pair(n, v)
            rows[i - 1] += e
            cols[j - 1] -= e
    return tuple(rows + cols)


def mono_str(n: int, a: Mono) -> str:
    parts: List[str] = []
    for v, e in enumerate(a):
        if e:
            i, j = var_pair(n, v)
            name = f"x{i}{j}" if max(i, j) < 10 else f"x{i}_{j}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def mono_json(n: int, a: Mono) -> List[List[int]]:
    return [[*var_pair(n, v), e] for v, e in enumerate(a) if e]
