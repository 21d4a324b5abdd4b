"""Exact rational scalars and small dense linear algebra over the rationals.

Everything in this package reduces to linear algebra over Q at sizes where
fraction-based Gaussian elimination is instant and, unlike floating point,
makes zero-tests sound.  Vectors are tuples of Fraction, matrices tuples of
row tuples.
"""

from __future__ import annotations

import re
from fractions import Fraction

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(s: str) -> Fraction:
    """Parse 'p' or 'p/q' (whitespace-free, q > 0 after reduction)."""
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ValueError(f"malformed rational {s!r}: expected 'p' or 'p/q'")
    if "/" in s:
        p, q = s.split("/")
        if int(q) == 0:
            raise ValueError(f"malformed rational {s!r}: zero denominator")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_rational(x: Fraction) -> str:
    """Canonical form 'p/q' with '/q' omitted when q == 1."""
    return str(Fraction(x))


def vector(entries) -> Vector:
    return tuple(Fraction(e) for e in entries)


def matrix(rows) -> Matrix:
    m = tuple(vector(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def is_zero_vector(v) -> bool:
    return all(x == 0 for x in v)


def rref(rows, ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices).

    Zero rows are dropped.  ``ncols`` is only needed when ``rows`` is empty.
    """
    work = [[Fraction(e) for e in row] for row in rows]
    if not work:
        return [], []
    n = len(work[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        work[r] = [e / pv for e in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows) -> int:
    """Rank over Q by exact elimination; the empty matrix has rank 0."""
    return len(rref(rows)[1])


def in_span(v, basis) -> bool:
    """True iff ``v`` lies in the Q-linear span of ``basis``; exact."""
    v = vector(v)
    basis = [vector(b) for b in basis]
    for b in basis:
        if len(b) != len(v):
            raise ValueError(f"dimension mismatch: {len(b)} vs {len(v)}")
    return rank(basis) == rank(basis + [v])


def kernel_basis(rows, ncols: int | None = None) -> list[Vector]:
    """Basis of the right kernel {x : m @ x = 0}; len = ncols - rank."""
    if not rows and ncols is None:
        raise ValueError("kernel of an empty matrix needs an explicit column count")
    n = len(rows[0]) if rows else ncols
    reduced, pivots = rref(rows, ncols=n)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -reduced[r][f]
        basis.append(tuple(x))
    return basis


def mat_vec(m, v) -> Vector:
    return tuple(sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m)
