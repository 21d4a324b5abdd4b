"""Finite-dimensional coalgebras given by structure constants, the
coassociator, and the coalgebra-side identity predicates.

Constants follow d[k][i][j]: the coproduct of the k-th basis vector has
coefficient d[k][i][j] on e_i (x) e_j.  Identities are linear in the input
vector, so checking the n basis vectors decides them; witnesses name the
first failing basis vector in order.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix, Vector
from .sigma3 import (
    C1,
    C2,
    GroupVector,
    IDENTITY,
    T13,
    Tensor3,
    V,
    alternating_vector,
    phi_perm,
    phi_vector,
    subgroup_elements,
    symmetrizing_vector,
)
from .witness import Witness

GI_NAMES = ["G1", "G2", "G3", "G4", "G5", "G6"]
SHRIEK_NAMES = ["G1!", "G2!", "G3!", "G4!", "G5!", "G6!"]


class Coalgebra:
    """dim n and constants d[k][i][j] describing the coproduct on a basis."""

    __slots__ = ("dim", "d")

    def __init__(self, dim: int, constants):
        if dim < 1:
            raise ValueError("coalgebra dimension must be >= 1")
        d = tuple(
            tuple(
                tuple(x if type(x) is Fraction else Fraction(x) for x in row)
                for row in plane
            )
            for plane in constants
        )
        if len(d) != dim or any(
            len(p) != dim or any(len(r) != dim for r in p) for p in d
        ):
            raise ValueError("structure constants do not match the dimension")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "d", d)

    @classmethod
    def zero(cls, dim: int) -> "Coalgebra":
        z = Fraction(0)
        return cls(dim, [[[z] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: dict) -> "Coalgebra":
        """Build from a sparse {(k, i, j): coeff} dict with 1-based indices."""
        d = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (k, i, j), val in entries.items():
            d[k - 1][i - 1][j - 1] += Fraction(val)
        return cls(dim, d)

    def basis_vector(self, k: int) -> Vector:
        return tuple(Fraction(1 if j == k else 0) for j in range(self.dim))

    def comultiply(self, x) -> Matrix:
        """The coproduct of x as an n x n array; rows index the first slot."""
        if len(x) != self.dim:
            raise ValueError("vector dimension mismatch")
        n = self.dim
        out = [[Fraction(0)] * n for _ in range(n)]
        for k, xk in enumerate(x):
            if xk == 0:
                continue
            for i in range(n):
                for j in range(n):
                    out[i][j] += xk * self.d[k][i][j]
        return tuple(tuple(row) for row in out)

    def iterated_left(self, x) -> Tensor3:
        """(coproduct (x) id) after the coproduct, on x."""
        n = self.dim
        m = self.comultiply(x)
        out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if m[i][j] == 0:
                    continue
                for p in range(n):
                    for q in range(n):
                        out[p][q][j] += m[i][j] * self.d[i][p][q]
        return Tensor3(n, out)

    def iterated_right(self, x) -> Tensor3:
        """(id (x) coproduct) after the coproduct, on x."""
        n = self.dim
        m = self.comultiply(x)
        out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if m[i][j] == 0:
                    continue
                for p in range(n):
                    for q in range(n):
                        out[i][p][q] += m[i][j] * self.d[j][p][q]
        return Tensor3(n, out)

    def coassociator(self, x) -> Tensor3:
        """(coproduct (x) id - id (x) coproduct) after the coproduct."""
        return self.iterated_left(x) - self.iterated_right(x)

    def twist(self) -> "Coalgebra":
        """The coproduct followed by the flip of the two tensor slots."""
        n = self.dim
        return Coalgebra(
            n,
            [[[self.d[k][j][i] for j in range(n)] for i in range(n)] for k in range(n)],
        )

    def __eq__(self, other):
        return isinstance(other, Coalgebra) and self.dim == other.dim and self.d == other.d

    def __hash__(self):
        return hash((self.dim, self.d))

    def __repr__(self):
        n = self.dim
        terms = ",".join(
            f"({k+1};{i+1},{j+1})={self.d[k][i][j]}"
            for k in range(n)
            for i in range(n)
            for j in range(n)
            if self.d[k][i][j] != 0
        )
        return f"Coalgebra(dim={n},{{{terms}}})"


def delta_L(c: Coalgebra) -> Coalgebra:
    """The antisymmetrized coproduct: original minus its flip."""
    n = c.dim
    return Coalgebra(
        n,
        [
            [[c.d[k][i][j] - c.d[k][j][i] for j in range(n)] for i in range(n)]
            for k in range(n)
        ],
    )


def is_lie_coalgebra(c: Coalgebra) -> tuple[bool, Witness | None]:
    """Anticommutativity of the coproduct plus the co-Jacobi identity
    (id + cyclic rotations) on the coassociator."""
    n = c.dim
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if c.d[k][i][j] != -c.d[k][j][i]:
                    m = tuple(
                        tuple(c.d[k][a][b] + c.d[k][b][a] for b in range(n))
                        for a in range(n)
                    )
                    return False, Witness((k + 1,), m, note="anticommutativity")
    for k in range(n):
        t = c.coassociator(c.basis_vector(k))
        total = t + phi_perm(C1, t) + phi_perm(C2, t)
        if not total.is_zero():
            return False, Witness((k + 1,), total, note="co-jacobi")
    return True, None


def is_lie_admissible_coalgebra(c: Coalgebra) -> tuple[bool, Witness | None]:
    """Vanishing of the fully alternated coassociator (the V relation);
    equivalent to the antisymmetrized coproduct being a Lie coproduct."""
    for k in range(c.dim):
        t = phi_vector(V, c.coassociator(c.basis_vector(k)))
        if not t.is_zero():
            return False, Witness((k + 1,), t)
    return True, None


def is_gi_coalgebra(c: Coalgebra, i: int) -> tuple[bool, Witness | None]:
    """Alternated-coassociator identity for the i-th subgroup; i=1 is plain
    coassociativity."""
    v = alternating_vector(i)
    for k in range(c.dim):
        t = phi_vector(v, c.coassociator(c.basis_vector(k)))
        if not t.is_zero():
            return False, Witness((k + 1,), t)
    return True, None


def is_gi_shriek_coalgebra(
    c: Coalgebra, i: int, strict: bool = False
) -> tuple[bool, Witness | None]:
    """Coassociativity plus invariance of the iterated coproduct under the
    i-th subgroup's slot permutations.

    The ``strict`` flag instead checks the literal unnormalized form
    (symmetrizing-vector image equals the iterated coproduct), which for
    subgroups of order > 1 is a strictly stronger and arguably misprinted
    condition; the default invariance form is the one dual to the
    permuted-triple-product identities and the one the convolution theorem
    needs.
    """
    if i not in (1, 2, 3, 4, 5, 6):
        raise ValueError(f"shriek index {i} out of range 1..6")
    ok, wit = is_gi_coalgebra(c, 1)
    if not ok:
        return False, Witness(wit.indices, wit.defect, note="not coassociative")
    for k in range(c.dim):
        x = c.iterated_right(c.basis_vector(k))
        if strict:
            t = phi_vector(symmetrizing_vector(i), x) - x
            if not t.is_zero():
                return False, Witness((k + 1,), t, note="strict")
        else:
            for p in subgroup_elements(i):
                if p == IDENTITY:
                    continue
                t = phi_perm(p, x) - x
                if not t.is_zero():
                    return False, Witness((k + 1,), t, note=p.name)
    return True, None


def twist_coassociator_identity_defect(c: Coalgebra) -> list[Tensor3]:
    """Per basis vector: coassociator of the flipped coproduct plus the
    outer-slot transposition of the coassociator.  Identically zero for
    every coalgebra; kept as a built-in self-test."""
    flipped = c.twist()
    out = []
    for k in range(c.dim):
        x = c.basis_vector(k)
        out.append(flipped.coassociator(x) + phi_perm(T13, c.coassociator(x)))
    return out


def predicate_report(c: Coalgebra, strict_shriek: bool = False):
    """Every coalgebra predicate in fixed order, with witnesses on failure."""
    rows = []
    for i in range(1, 7):
        ok, wit = is_gi_coalgebra(c, i)
        rows.append((GI_NAMES[i - 1], ok, wit))
    ok, wit = is_lie_admissible_coalgebra(c)
    rows.append(("lie-admissible", ok, wit))
    for i in range(1, 7):
        ok, wit = is_gi_shriek_coalgebra(c, i, strict=strict_shriek)
        rows.append((SHRIEK_NAMES[i - 1], ok, wit))
    ok, wit = is_lie_coalgebra(c)
    rows.append(("lie", ok, wit))
    return rows
