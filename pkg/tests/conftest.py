import random

import pytest

from nonassoc.randomgen import random_algebra, random_coalgebra


def raw_algebra(a):
    """Library Algebra -> plain nested lists for the brute-force oracle."""
    return [[[x for x in row] for row in plane] for plane in a.c]


def raw_coalgebra(c):
    return [[[x for x in row] for row in plane] for plane in c.d]


@pytest.fixture(scope="session")
def coalgebras_200():
    """The shared 200 seeded coalgebras (n in {2,3,4}, constants in [-3,3])."""
    rng = random.Random(2024)
    return [random_coalgebra(rng, rng.choice([2, 3, 4])) for _ in range(200)]


@pytest.fixture(scope="session")
def algebras_100_n4():
    rng = random.Random(4100)
    return [random_algebra(rng, rng.choice([2, 3, 4])) for _ in range(100)]


@pytest.fixture(scope="session")
def algebras_100_n3():
    rng = random.Random(3100)
    return [random_algebra(rng, rng.choice([2, 3])) for _ in range(100)]


@pytest.fixture(scope="session")
def coalgebras_100_n3():
    rng = random.Random(3200)
    return [random_coalgebra(rng, rng.choice([2, 3])) for _ in range(100)]
