import random
from fractions import Fraction

import pytest

from nonassoc.linalg import (
    format_rational,
    in_span,
    kernel_basis,
    mat_vec,
    parse_rational,
    rank,
    rref,
)


def test_parse_rational_forms():
    assert parse_rational("3") == Fraction(3)
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("+4/6") == Fraction(2, 3)


@pytest.mark.parametrize("bad", ["1/0", "", "1 /2", "1.5", "a", "1/ 2", "--3", "1/-2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_rational_canonical():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 6)) == "2/3"
    # round trip
    for s in ["0", "7", "-7", "5/9", "-22/7"]:
        assert format_rational(parse_rational(s)) == s


def test_rank_examples():
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[0, 0, 0], [0, 0, 0], [0, 0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([]) == 0


def test_in_span_examples():
    assert in_span([0, 0], [])
    assert in_span([1, 1], [[1, 0], [0, 1]])
    assert not in_span([1, 0, 0], [[0, 1, 0]])


def test_in_span_dimension_mismatch():
    with pytest.raises(ValueError):
        in_span([1, 0], [[1, 0, 0]])


def test_kernel_examples():
    assert kernel_basis([[1, 0], [0, 1]]) == []
    two = kernel_basis([[0, 0]])
    assert len(two) == 2 and rank(two) == 2
    (k,) = kernel_basis([[1, -1]])
    assert k[0] == k[1] != 0


def test_kernel_vectors_annihilate():
    rng = random.Random(11)
    for _ in range(50):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        m = [[Fraction(rng.randint(-5, 5)) for _ in range(cols)] for _ in range(rows)]
        for k in kernel_basis(m):
            assert all(x == 0 for x in mat_vec(m, k))


def test_rank_nullity():
    rng = random.Random(7)
    for _ in range(100):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        m = [[Fraction(rng.randint(-5, 5)) for _ in range(cols)] for _ in range(rows)]
        assert rank(m) + len(kernel_basis(m)) == cols


def test_in_span_scale_invariance():
    rng = random.Random(13)
    for _ in range(50):
        dim = rng.randint(1, 6)
        basis = [
            [Fraction(rng.randint(-5, 5)) for _ in range(dim)] for _ in range(rng.randint(1, 4))
        ]
        for b in basis:
            assert in_span(b, basis)
        scale = Fraction(rng.choice([x for x in range(-6, 7) if x]), rng.randint(1, 6))
        scaled = [[scale * x for x in row] for row in basis]
        v = [Fraction(rng.randint(-5, 5)) for _ in range(dim)]
        assert in_span(v, basis) == in_span(v, scaled)


def test_rref_is_reduced():
    m = [[2, 4, 6], [1, 2, 4]]
    reduced, pivots = rref(m)
    assert pivots == [0, 2]
    for r, p in enumerate(pivots):
        assert reduced[r][p] == 1
        assert all(reduced[q][p] == 0 for q in range(len(reduced)) if q != r)
