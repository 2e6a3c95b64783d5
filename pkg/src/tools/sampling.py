# src/tools/sampling.py

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Tuple

import numpy as np

from .poisson import RatMatrix


@dataclass
class SampleSpec:
    """Seeded recipe for random rational matrices."""
    m: int
    n: int
    count: int
    seed: int
    max_numerator: int = 5
    max_denominator: int = 4
    zero_probability: float = 0.25


def zero_one_matrices(m: int, n: int) -> List[RatMatrix]:
    """All 2^(mn) matrices with entries in {0, 1}."""
    return [
        RatMatrix.of([list(bits[i * n:(i + 1) * n]) for i in range(m)])
        for bits in product((0, 1), repeat=m * n)
    ]


def _random_entry(rng: np.random.Generator, spec: SampleSpec) -> Fraction:
    if rng.random() < spec.zero_probability:
        return Fraction(0)
    num = int(rng.integers(-spec.max_numerator, spec.max_numerator + 1))
    den = int(rng.integers(1, spec.max_denominator + 1))
    return Fraction(num, den)


def random_matrices(spec: SampleSpec) -> List[RatMatrix]:
    """
    `count` rational matrices drawn from numpy's default generator.

    Some entries are forced to zero so that lower-dimensional leaves are hit
    with positive frequency.
    """
    rng = np.random.default_rng(spec.seed)
    return [
        RatMatrix(tuple(tuple(_random_entry(rng, spec) for _ in range(spec.n)) for _ in range(spec.m)))
        for _ in range(spec.count)
    ]


def random_torus(rng: np.random.Generator, m: int, n: int) -> Tuple[List[Fraction], List[Fraction]]:
    """Nonzero rational diagonals (A, B) for the scaling x -> A x B^-1."""

    def entry() -> Fraction:
        num = 0
        while num == 0:
            num = int(rng.integers(-6, 7))
        return Fraction(num, int(rng.integers(1, 5)))

    return [entry() for _ in range(m)], [entry() for _ in range(n)]


def stratification_samples(m: int, n: int, count: int, seed: int) -> List[RatMatrix]:
    """All zero-one matrices followed by `count` seeded random ones."""
    return zero_one_matrices(m, n) + random_matrices(SampleSpec(m, n, count, seed))
