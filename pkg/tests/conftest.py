# tests/conftest.py

from __future__ import annotations

import random

import pytest

from src.tools.qmatrix import QMPoly


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture
def x2():
    """The four generators of R_q[M_2] as a dict keyed by (i, j)."""
    return {(i, j): QMPoly.var(2, 2, i, j) for i in (1, 2) for j in (1, 2)}
