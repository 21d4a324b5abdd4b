"""Convolution of linear maps from a coalgebra into an algebra, and the
algebra structure it induces on the whole Hom space.

A map C -> A is an n_A x n_C matrix over Q.  The convolution of f and g
sends x to the product of f and g applied to the two coproduct legs of x,
summed over the coproduct terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra
from .coalgebra import Coalgebra


@dataclass(frozen=True)
class HomElement:
    """A linear map from an n_C- into an n_A-dimensional space."""

    rows: int
    cols: int
    matrix: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows_data) -> "HomElement":
        m = tuple(tuple(Fraction(x) for x in row) for row in rows_data)
        if not m or any(len(r) != len(m[0]) for r in m):
            raise ValueError("matrix rows must be nonempty and equal length")
        return cls(len(m), len(m[0]), m)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "HomElement":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "HomElement":
        return cls(
            n, n, tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))
        )

    @classmethod
    def matrix_unit(cls, rows: int, cols: int, p: int, q: int) -> "HomElement":
        """E_pq: sends basis vector q of the source to basis vector p of the
        target; 0-based indices."""
        m = [[Fraction(0)] * cols for _ in range(rows)]
        m[p][q] = Fraction(1)
        return cls(rows, cols, tuple(tuple(r) for r in m))

    def apply(self, x):
        if len(x) != self.cols:
            raise ValueError("vector dimension mismatch")
        return tuple(
            sum((self.matrix[i][j] * x[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return HomElement(
            self.rows,
            self.cols,
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.matrix, other.matrix)
            ),
        )

    def scale(self, c) -> "HomElement":
        c = Fraction(c)
        return HomElement(
            self.rows, self.cols, tuple(tuple(c * x for x in row) for row in self.matrix)
        )


def convolve(f: HomElement, g: HomElement, c: Coalgebra, a: Algebra) -> HomElement:
    """f * g = multiply after (f, g) on the two coproduct legs."""
    if (f.rows, f.cols) != (a.dim, c.dim) or (g.rows, g.cols) != (a.dim, c.dim):
        raise ValueError(
            f"hom elements must have shape ({a.dim}, {c.dim}); "
            f"got {(f.rows, f.cols)} and {(g.rows, g.cols)}"
        )
    columns = []
    for q in range(c.dim):
        m = c.comultiply(c.basis_vector(q))
        out = [Fraction(0)] * a.dim
        for i in range(c.dim):
            for j in range(c.dim):
                if m[i][j] == 0:
                    continue
                prod = a.multiply(f.apply(c.basis_vector(i)), g.apply(c.basis_vector(j)))
                for k in range(a.dim):
                    out[k] += m[i][j] * prod[k]
        columns.append(out)
    return HomElement(
        a.dim, c.dim, tuple(tuple(columns[q][k] for q in range(c.dim)) for k in range(a.dim))
    )


def hom_basis_index(p: int, q: int, n_c: int) -> int:
    """Position of the matrix unit E_pq in the lexicographic (p, q) order."""
    return p * n_c + q


def convolution_algebra(c: Coalgebra, a: Algebra) -> Algebra:
    """The algebra of all maps C -> A under convolution, on the matrix-unit
    basis ordered lexicographically by (target, source) index."""
    n_a, n_c = a.dim, c.dim
    dim = n_a * n_c
    units = [
        HomElement.matrix_unit(n_a, n_c, p, q) for p in range(n_a) for q in range(n_c)
    ]
    constants = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for x in range(dim):
        for y in range(dim):
            conv = convolve(units[x], units[y], c, a)
            for u in range(n_a):
                for v in range(n_c):
                    constants[x][y][hom_basis_index(u, v, n_c)] = conv.matrix[u][v]
    return Algebra(dim, constants)
