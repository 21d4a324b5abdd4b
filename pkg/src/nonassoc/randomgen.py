"""Seeded random structures with small integer constants, shared by the
property-test suites and the CLI generator command."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Algebra
from .coalgebra import Coalgebra


def random_constants(rng: random.Random, dim: int, lo: int = -3, hi: int = 3):
    return [
        [[Fraction(rng.randint(lo, hi)) for _ in range(dim)] for _ in range(dim)]
        for _ in range(dim)
    ]


def random_algebra(rng: random.Random, dim: int, lo: int = -3, hi: int = 3) -> Algebra:
    return Algebra(dim, random_constants(rng, dim, lo, hi))


def random_coalgebra(rng: random.Random, dim: int, lo: int = -3, hi: int = 3) -> Coalgebra:
    return Coalgebra(dim, random_constants(rng, dim, lo, hi))
