"""Finite-dimensional algebras given by structure constants, their
associator, and the identity predicates driven by subgroups of the
symmetric group on three letters.

All identities checked here are multilinear, so exhaustive evaluation on
the n^3 basis triples decides them; witnesses are the lexicographically
first failing triple.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .linalg import Vector, is_zero_vector, zero_vector
from .sigma3 import (
    ALL_ONES,
    GroupVector,
    PERMS,
    alternating_vector,
    subgroup_elements,
)
from .witness import Witness

# Report keys for algebra predicates, in the order the report prints them.
GI_NAMES = ["G1", "G2", "G3", "G4", "G5", "G6"]
SHRIEK_NAMES = ["G2!", "G3!", "G4!", "G5!", "G6!"]


class Algebra:
    """dim n and constants c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k."""

    __slots__ = ("dim", "c")

    def __init__(self, dim: int, constants):
        if dim < 1:
            raise ValueError("algebra dimension must be >= 1")
        c = tuple(
            tuple(
                tuple(x if type(x) is Fraction else Fraction(x) for x in row)
                for row in plane
            )
            for plane in constants
        )
        if len(c) != dim or any(
            len(p) != dim or any(len(r) != dim for r in p) for p in c
        ):
            raise ValueError("structure constants do not match the dimension")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "c", c)

    @classmethod
    def zero(cls, dim: int) -> "Algebra":
        z = Fraction(0)
        return cls(dim, [[[z] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: dict) -> "Algebra":
        """Build from a sparse {(i, j, k): coeff} dict with 1-based indices."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), val in entries.items():
            c[i - 1][j - 1][k - 1] += Fraction(val)
        return cls(dim, c)

    def basis_vector(self, i: int) -> Vector:
        """The i-th basis vector, 0-based."""
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def multiply(self, x, y) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector dimension mismatch")
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                f = xi * yj
                for k in range(self.dim):
                    out[k] += f * self.c[i][j][k]
        return tuple(out)

    def associator(self, x, y, z) -> Vector:
        """(xy)z - x(yz)."""
        left = self.multiply(self.multiply(x, y), z)
        right = self.multiply(x, self.multiply(y, z))
        return tuple(a - b for a, b in zip(left, right))

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.dim == other.dim and self.c == other.c

    def __hash__(self):
        return hash((self.dim, self.c))

    def __repr__(self):
        n = self.dim
        terms = ",".join(
            f"({i+1},{j+1},{k+1})={self.c[i][j][k]}"
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if self.c[i][j][k] != 0
        )
        return f"Algebra(dim={n},{{{terms}}})"


def _basis_associator_table(a: Algebra):
    """t[i][j][k] = associator(e_i, e_j, e_k); computed once per predicate."""
    n = a.dim
    basis = [a.basis_vector(i) for i in range(n)]
    return [
        [[a.associator(basis[i], basis[j], basis[k]) for k in range(n)] for j in range(n)]
        for i in range(n)
    ]


def _alternating_defect(table, triple, v: GroupVector) -> Vector:
    """sum_s v[s] . A(e_{t(s^-1(1))}, e_{t(s^-1(2))}, e_{t(s^-1(3))})."""
    n = len(table)
    out = [Fraction(0)] * n
    for idx, coeff in enumerate(v.coeffs):
        if coeff == 0:
            continue
        inv = PERMS[idx].inverse()
        p = (triple[inv(1) - 1], triple[inv(2) - 1], triple[inv(3) - 1])
        val = table[p[0]][p[1]][p[2]]
        for k in range(n):
            out[k] += coeff * val[k]
    return tuple(out)


def v_relation_defect(a: Algebra, v: GroupVector, x, y, z) -> Vector:
    """The weighted alternated associator on arbitrary vectors."""
    args = (x, y, z)
    out = [Fraction(0)] * a.dim
    for idx, coeff in enumerate(v.coeffs):
        if coeff == 0:
            continue
        inv = PERMS[idx].inverse()
        val = a.associator(args[inv(1) - 1], args[inv(2) - 1], args[inv(3) - 1])
        for k in range(a.dim):
            out[k] += coeff * val[k]
    return tuple(out)


def satisfies_v_relation(a: Algebra, v: GroupVector) -> tuple[bool, Witness | None]:
    """Does the associator, alternated with the group-algebra weights in v,
    vanish identically?  Decided on all basis triples."""
    table = _basis_associator_table(a)
    n = a.dim
    for i, j, k in product(range(n), repeat=3):
        defect = _alternating_defect(table, (i, j, k), v)
        if not is_zero_vector(defect):
            return False, Witness((i + 1, j + 1, k + 1), defect)
    return True, None


def is_gi_associative(a: Algebra, i: int) -> tuple[bool, Witness | None]:
    """Vanishing of the associator alternated over the i-th subgroup;
    i=1 is plain associativity, i=6 Lie-admissibility."""
    return satisfies_v_relation(a, alternating_vector(i))


def is_lie_admissible(a: Algebra) -> tuple[bool, Witness | None]:
    return is_gi_associative(a, 6)


def commutator_algebra(a: Algebra) -> Algebra:
    """The bracket algebra x y - y x on the same space."""
    n = a.dim
    return Algebra(
        n,
        [
            [[a.c[i][j][k] - a.c[j][i][k] for k in range(n)] for j in range(n)]
            for i in range(n)
        ],
    )


def is_lie(a: Algebra) -> tuple[bool, Witness | None]:
    """Antisymmetry of the constants plus the Jacobi identity on basis triples."""
    n = a.dim
    for i, j in product(range(n), repeat=2):
        for k in range(n):
            if a.c[i][j][k] != -a.c[j][i][k]:
                defect = tuple(a.c[i][j][m] + a.c[j][i][m] for m in range(n))
                return False, Witness((i + 1, j + 1), defect, note="antisymmetry")
    basis = [a.basis_vector(i) for i in range(n)]
    for i, j, k in product(range(n), repeat=3):
        x, y, z = basis[i], basis[j], basis[k]
        jac = [
            p + q + r
            for p, q, r in zip(
                a.multiply(a.multiply(x, y), z),
                a.multiply(a.multiply(y, z), x),
                a.multiply(a.multiply(z, x), y),
            )
        ]
        if not is_zero_vector(jac):
            return False, Witness((i + 1, j + 1, k + 1), tuple(jac), note="jacobi")
    return True, None


def cube_vanishes(a: Algebra) -> tuple[bool, Witness | None]:
    """Direct route for third-power associativity: the cube defect (x,x,x)
    of a generic vector vanishes iff, for every multiset {i,j,k}, the sum of
    associators over all its ordered arrangements is zero (characteristic 0
    polarization)."""
    table = _basis_associator_table(a)
    n = a.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                arrangements = {
                    (i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)
                }
                total = [Fraction(0)] * n
                for p, q, r in sorted(arrangements):
                    for m in range(n):
                        total[m] += table[p][q][r][m]
                if not is_zero_vector(total):
                    return False, Witness((i + 1, j + 1, k + 1), tuple(total))
    return True, None


def is_power3_associative(a: Algebra) -> tuple[bool, Witness | None]:
    """Vanishing of (x,x,x) for all x, decided through the all-ones
    group-algebra vector.  ``cube_vanishes`` is the independent direct route;
    in characteristic 0 the two verdicts agree."""
    return satisfies_v_relation(a, ALL_ONES)


def triple_product(a: Algebra, x, y, z) -> Vector:
    """(xy)z; unambiguous once associativity has been established."""
    return a.multiply(a.multiply(x, y), z)


def is_gi_shriek_algebra(a: Algebra, i: int) -> tuple[bool, Witness | None]:
    """Associativity together with the permuted-triple-product identities
    x1 x2 x3 = x_{s(1)} x_{s(2)} x_{s(3)} for every s in the i-th subgroup."""
    if i not in (2, 3, 4, 5, 6):
        raise ValueError(f"shriek index {i} out of range 2..6")
    ok, wit = is_gi_associative(a, 1)
    if not ok:
        return False, Witness(wit.indices, wit.defect, note="not associative")
    n = a.dim
    basis = [a.basis_vector(m) for m in range(n)]
    for i1, j1, k1 in product(range(n), repeat=3):
        args = (basis[i1], basis[j1], basis[k1])
        base = triple_product(a, *args)
        for p in subgroup_elements(i):
            if p.images == (1, 2, 3):
                continue
            permuted = triple_product(a, args[p(1) - 1], args[p(2) - 1], args[p(3) - 1])
            defect = tuple(x - y for x, y in zip(base, permuted))
            if not is_zero_vector(defect):
                return False, Witness((i1 + 1, j1 + 1, k1 + 1), defect, note=p.name)
    return True, None


def predicate_report(a: Algebra) -> list[tuple[str, bool, Witness | None]]:
    """Every algebra predicate in fixed order, with witnesses on failure."""
    rows = []
    for i in range(1, 7):
        ok, wit = is_gi_associative(a, i)
        rows.append((GI_NAMES[i - 1], ok, wit))
    ok, wit = is_lie_admissible(a)
    rows.append(("lie-admissible", ok, wit))
    ok, wit = is_power3_associative(a)
    rows.append(("power3", ok, wit))
    for i in range(2, 7):
        ok, wit = is_gi_shriek_algebra(a, i)
        rows.append((SHRIEK_NAMES[i - 2], ok, wit))
    ok, wit = is_lie(commutator_algebra(a))
    rows.append(("commutator-lie", ok, wit))
    return rows
