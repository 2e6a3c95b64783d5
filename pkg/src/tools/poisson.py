# src/tools/poisson.py

"""
The classical side: the quadratic Poisson bracket on M_{m,n}, the classical
minor sets A(y), and the classification of rational matrices into the
torus orbits of symplectic leaves S(y), y <= c^m, by northwest ranks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from .coeff import div_qminus1
from .cpoly import CPoly, determinant
from .errors import DomainError, VerificationError
from .grobner import reduce, right_groebner
from .monomials import var_pair
from .qmatrix import QMPoly, multiply, require_below_coxeter, specialize_q1
from .subsets import generator_minors
from .weyl import Perm, bruhat_leq, coxeter_power, interval, interval_below, longest

__all__ = [
    "CPoly",
    "RatMatrix",
    "a_generators",
    "bracket",
    "classify_square",
    "leaf_of",
    "poisson_ideal_check",
    "semiclassical_check",
    "verify_stratification",
]


# --------------------------------------------------------------------
# Exact matrices
# --------------------------------------------------------------------


def _parse_entry(value: object) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise DomainError(f"matrix entries must be integers or 'p/q' strings, got {value!r}")


@dataclass(frozen=True)
class RatMatrix:
    """Exact rational matrix, stored row by row."""

    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise DomainError("ragged matrix")

    @classmethod
    def of(cls, rows: Sequence[Sequence[object]]) -> "RatMatrix":
        return cls(tuple(tuple(_parse_entry(v) for v in row) for row in rows))

    @classmethod
    def zeros(cls, m: int, n: int) -> "RatMatrix":
        return cls(tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(m)))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "RatMatrix":
        return cls(tuple(tuple(Fraction(v) for v in row) for row in array.tolist()))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def array(self) -> np.ndarray:
        """numpy object array of Fractions; arithmetic on it stays exact."""
        out = np.empty(self.shape, dtype=object)
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                out[i, j] = v
        return out

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape[1] != other.shape[0]:
            raise DomainError(f"cannot multiply {self.shape} by {other.shape}")
        return RatMatrix.from_array(self.array().dot(other.array()))

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(v) for v in row) for row in self.rows) + "]"

    def to_json(self) -> List[List[str]]:
        return [[str(v) for v in row] for row in self.rows]


def diagonal(entries: Sequence[object]) -> RatMatrix:
    size = len(entries)
    return RatMatrix.of([[entries[i] if i == j else 0 for j in range(size)] for i in range(size)])


def exact_rank(matrix: RatMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination after clearing row denominators."""
    rows: List[List[int]] = []
    for row in matrix.rows:
        scale = 1
        for v in row:
            scale = scale * v.denominator // gcd(scale, v.denominator)
        rows.append([int(v * scale) for v in row])
    n_rows, n_cols = matrix.shape
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, n_rows):
            for c in range(col + 1, n_cols):
                rows[r][c] = (rows[r][c] * rows[rank][col] - rows[rank][c] * rows[r][col]) // prev
            rows[r][col] = 0
        prev = rows[rank][col]
        rank += 1
        if rank == n_rows:
            break
    return rank


# --------------------------------------------------------------------
# Bracket
# --------------------------------------------------------------------


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def coordinate_bracket(m: int, n: int, a: int, b: int) -> CPoly:
    """{x_ij, x_kl} = (sign(k - i) + sign(l - j)) x_il x_kj for variable indices a = (i,j), b = (k,l)."""
    i, j = var_pair(n, a)
    k, l = var_pair(n, b)
    factor = _sign(k - i) + _sign(l - j)
    if factor == 0:
        return CPoly.zero(m, n)
    return (CPoly.var(m, n, i, l) * CPoly.var(m, n, k, j)).scale(factor)


def bracket(f: CPoly, g: CPoly) -> CPoly:
    """Bilinear Leibniz extension of the coordinate brackets."""
    if (f.m, f.n) != (g.m, g.n):
        raise DomainError(f"shape mismatch: {f.m}x{f.n} vs {g.m}x{g.n}")
    m, n = f.m, f.n
    total = CPoly.zero(m, n)
    f_parts = [(a, f.derivative(a)) for a in range(m * n)]
    g_parts = [(b, g.derivative(b)) for b in range(m * n)]
    for a, df in f_parts:
        if df.is_zero():
            continue
        for b, dg in g_parts:
            if dg.is_zero() or a == b:
                continue
            total = total + df * dg * coordinate_bracket(m, n, a, b)
    return total


def check_antisymmetry(m: int, n: int) -> List[Dict[str, str]]:
    failures = []
    for a in range(m * n):
        for b in range(m * n):
            lhs = coordinate_bracket(m, n, a, b)
            rhs = -coordinate_bracket(m, n, b, a)
            if lhs != rhs:
                failures.append({"a": str(var_pair(n, a)), "b": str(var_pair(n, b)), "lhs": str(lhs)})
    return failures


def check_jacobi(m: int, n: int) -> List[Dict[str, str]]:
    """Jacobi identity on every triple of coordinates."""
    coords = [CPoly.var(m, n, *var_pair(n, v)) for v in range(m * n)]
    failures = []
    for x, y, z in product(coords, repeat=3):
        total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        if not total.is_zero():
            failures.append({"x": str(x), "y": str(y), "z": str(z), "jacobiator": str(total)})
    return failures


def semiclassical_check(u: QMPoly, v: QMPoly) -> bool:
    """(uv - vu)/(q - 1) at q = 1 against the classical bracket of the specializations."""
    commutator = multiply(u, v) - multiply(v, u)
    limit = QMPoly(u.m, u.n, {a: div_qminus1(c) for a, c in commutator.terms.items()})
    return specialize_q1(limit) == bracket(specialize_q1(u), specialize_q1(v))


def check_semiclassical(m: int, n: int) -> List[Dict[str, str]]:
    gens = [QMPoly.var(m, n, *var_pair(n, v)) for v in range(m * n)]
    return [
        {"u": str(u), "v": str(v)}
        for u in gens for v in gens
        if not semiclassical_check(u, v)
    ]


# --------------------------------------------------------------------
# Minor sets and Poisson ideals
# --------------------------------------------------------------------


def a_generators(y: Perm, m: int, n: int) -> List[CPoly]:
    """A(y): classical minors over the same (k, I) range as the quantum set."""
    require_below_coxeter(y, m, n)
    return [determinant(m, n, spec.rows, spec.cols) for spec in generator_minors(y, m, n)]


def poisson_ideal_check(y: Perm, m: int, n: int) -> bool:
    """{g, x_ij} lies in <A(y)> for every generator g and coordinate x_ij."""
    gens = a_generators(y, m, n)
    if not gens:
        return True
    basis = right_groebner(gens)
    for g in gens:
        for v in range(m * n):
            residue = reduce(bracket(g, CPoly.var(m, n, *var_pair(n, v))), basis)
            if not residue.is_zero():
                logger.error("{{{}, x{}}} leaves <A({})>: residue {}", g, var_pair(n, v), y, residue)
                return False
    return True


# --------------------------------------------------------------------
# Leaves
# --------------------------------------------------------------------


def _permutation_matrix(w: Perm) -> RatMatrix:
    return RatMatrix.from_array(w.matrix())


def embed(x: RatMatrix) -> RatMatrix:
    """f(x) = [[I_m, w°_m x], [0, I_n]]."""
    m, n = x.shape
    size = m + n
    flipped = _permutation_matrix(longest(m, m)).array().dot(x.array())
    out = np.empty((size, size), dtype=object)
    out[:, :] = Fraction(0)
    for d in range(size):
        out[d, d] = Fraction(1)
    out[:m, m:] = flipped
    return RatMatrix.from_array(out)


def northwest_ranks(g: RatMatrix) -> np.ndarray:
    size = g.shape[0]
    arr = g.array()
    ranks = np.zeros((size + 1, size + 1), dtype=np.int64)
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            ranks[i, j] = exact_rank(RatMatrix.from_array(arr[:i, :j]))
    return ranks


def classify_square(g: RatMatrix) -> Perm:
    """The y with #{b <= j : y(b) <= i} = rank g[1..i, 1..j] for every (i, j)."""
    size, width = g.shape
    if size != width:
        raise DomainError(f"expected a square matrix, got {g.shape}")
    ranks = northwest_ranks(g)
    jumps = ranks[1:, 1:] - ranks[:-1, 1:] - ranks[1:, :-1] + ranks[:-1, :-1]
    oneline: List[int] = []
    for b in range(size):
        hits = np.flatnonzero(jumps[:, b])
        if len(hits) != 1 or jumps[hits[0], b] != 1:
            raise VerificationError("rank table is not a permutation table", {"g": g.to_json()})
        oneline.append(int(hits[0]) + 1)
    try:
        return Perm(tuple(oneline))
    except DomainError as err:
        raise VerificationError("rank table is not a permutation table", {"g": g.to_json()}) from err


def leaf_of(x: RatMatrix) -> Perm:
    """y with x in S(y) = f^-1(B_- y B_+ c^-m)."""
    m, n = x.shape
    g = embed(x) @ _permutation_matrix(coxeter_power(m + n, m))
    return classify_square(g)


def torus_scale(x: RatMatrix, left: Sequence[object], right: Sequence[object]) -> RatMatrix:
    """A x B^-1 for diagonal A = diag(left), B = diag(right)."""
    inv_right = [1 / Fraction(v) for v in right]
    return diagonal(left) @ x @ diagonal(inv_right)


# --------------------------------------------------------------------
# Stratification
# --------------------------------------------------------------------


def vanishing_witness(gens: Sequence[CPoly], x: RatMatrix) -> Optional[CPoly]:
    """First generator not vanishing at x, or None."""
    for g in gens:
        if g.evaluate(x.rows) != 0:
            return g
    return None


def closure_violations(
    vanishing: Dict[Perm, bool],
    leq: Callable[[Perm, Perm], bool] = bruhat_leq,
) -> List[Tuple[Perm, Perm]]:
    """Pairs z <= y where A(y) vanishes at a point but A(z) does not."""
    zeros = [y for y, hit in vanishing.items() if hit]
    return [
        (z, y)
        for y in zeros
        for z, hit in vanishing.items()
        if not hit and leq(z, y)
    ]


def verify_stratification(m: int, n: int, samples: Sequence[RatMatrix]) -> Dict[str, object]:
    """
    For every sample x and every y <= c^m: A(y) vanishes at x iff y <= leaf_of(x).

    Independently of the leaf, the zero sets must be nested: A(y) vanishing
    at x forces A(z) to vanish at x for every z <= y.
    """
    cm = coxeter_power(m + n, m)
    elements = interval_below(cm)
    gens = {y: a_generators(y, m, n) for y in elements}
    # [z, c^m] indexes the leaves in the closure of S(z)
    order = {(z, y) for z in elements for y in interval(z, cm)}
    census: Counter = Counter()
    failures: List[Dict[str, object]] = []
    for x in samples:
        if x.shape != (m, n):
            raise DomainError(f"sample of shape {x.shape} in a {m}x{n} run")
        leaf = leaf_of(x)
        census[str(leaf)] += 1
        vanishing: Dict[Perm, bool] = {}
        for y in elements:
            offending = vanishing_witness(gens[y], x)
            vanishing[y] = offending is None
            expected = bruhat_leq(y, leaf)
            if (offending is None) != expected:
                failures.append({
                    "x": x.to_json(),
                    "leaf": str(leaf),
                    "y": str(y),
                    "vanishes": offending is None,
                    "offending_minor": str(offending) if offending is not None else None,
                })
        for z, y in closure_violations(vanishing, lambda z, y: (z, y) in order):
            failures.append({"x": x.to_json(), "closure": {"vanishes": str(y), "survives": str(z)}})
    for failure in failures:
        logger.error("stratification mismatch: {}", failure)
    logger.info("stratification {}x{}: {} samples, {} leaves hit", m, n, len(samples), len(census))
    return {
        "m": m,
        "n": n,
        "samples": len(samples),
        "census": dict(sorted(census.items())),
        "failures": failures,
        "ok": not failures,
    }
