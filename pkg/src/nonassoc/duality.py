"""The contravariant dictionary between finite free algebras and
coalgebras: structure constants transpose between the two sides.

The transcription is also recomputed by honest evaluation of dual-basis
functionals; the evaluation routes exist so tests can guard the index
convention independently of the one-line transposition.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra
from .coalgebra import Coalgebra


def dual_coalgebra(a: Algebra) -> Coalgebra:
    """Coproduct on the dual basis: d[k][i][j] = c[i][j][k]."""
    n = a.dim
    return Coalgebra(
        n,
        [[[a.c[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)],
    )


def dual_algebra(c: Coalgebra) -> Algebra:
    """Product on the dual basis: c[i][j][k] = d[k][i][j]."""
    n = c.dim
    return Algebra(
        n,
        [[[c.d[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)],
    )


def roundtrip_check(a: Algebra) -> bool:
    """Transposing twice reproduces the constants exactly."""
    return dual_algebra(dual_coalgebra(a)) == a


def dual_algebra_by_evaluation(c: Coalgebra) -> Algebra:
    """Cross-check route: multiply dual-basis functionals by evaluating
    them against the coproduct, pairing slots and multiplying in Q."""
    n = c.dim

    def functional(i, vec):
        return vec[i]

    constants = []
    for i in range(n):
        plane = []
        for j in range(n):
            row = [Fraction(0)] * n
            for k in range(n):
                m = c.comultiply(c.basis_vector(k))
                total = Fraction(0)
                for p in range(n):
                    for q in range(n):
                        if m[p][q] == 0:
                            continue
                        ep = c.basis_vector(p)
                        eq = c.basis_vector(q)
                        total += m[p][q] * functional(i, ep) * functional(j, eq)
                row[k] = total
            plane.append(row)
        constants.append(plane)
    return Algebra(n, constants)


def dual_coalgebra_by_evaluation(a: Algebra) -> Coalgebra:
    """Cross-check route: the coproduct of the k-th dual functional reads
    off its values on all basis products."""
    n = a.dim
    constants = []
    for k in range(n):
        plane = []
        for i in range(n):
            row = []
            for j in range(n):
                prod = a.multiply(a.basis_vector(i), a.basis_vector(j))
                row.append(prod[k])
            plane.append(row)
        constants.append(plane)
    return Coalgebra(n, constants)
