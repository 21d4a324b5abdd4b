"""Compatibility checks for candidate bialgebra structures: a product and a
coproduct on the same space, tied together by one of the two published
compatibility identities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import Algebra, is_gi_associative, is_lie_admissible
from .coalgebra import Coalgebra, is_gi_coalgebra, is_lie_admissible_coalgebra
from .sigma3 import PERMS
from .witness import Witness


@dataclass(frozen=True)
class BialgebraCandidate:
    algebra: Algebra
    coalgebra: Coalgebra

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise ValueError(
                f"algebra and coalgebra dimensions differ: "
                f"{self.algebra.dim} vs {self.coalgebra.dim}"
            )

    @property
    def dim(self) -> int:
        return self.algebra.dim


def fully_alternated_associator(a: Algebra, triple) -> tuple[Fraction, ...]:
    """The associator alternated over the whole group, on one basis triple."""
    n = a.dim
    basis = [a.basis_vector(i) for i in range(n)]
    out = [Fraction(0)] * n
    for p in PERMS:
        inv = p.inverse()
        args = (triple[inv(1) - 1], triple[inv(2) - 1], triple[inv(3) - 1])
        val = a.associator(basis[args[0]], basis[args[1]], basis[args[2]])
        for k in range(n):
            out[k] += p.sign * val[k]
    return tuple(out)


def check_lie_admissible_bialgebra(b: BialgebraCandidate) -> tuple[bool, Witness | None]:
    """Both sides Lie-admissible, and the coproduct kills the fully
    alternated associator (which already vanishes when the product side
    passes, so the last clause is a redundancy kept as published)."""
    ok, wit = is_lie_admissible(b.algebra)
    if not ok:
        return False, Witness(wit.indices, wit.defect, note="algebra not lie-admissible")
    ok, wit = is_lie_admissible_coalgebra(b.coalgebra)
    if not ok:
        return False, Witness(wit.indices, wit.defect, note="coalgebra not lie-admissible")
    n = b.dim
    for i, j, k in product(range(n), repeat=3):
        vec = fully_alternated_associator(b.algebra, (i, j, k))
        m = b.coalgebra.comultiply(vec)
        if any(x != 0 for row in m for x in row):
            return False, Witness((i + 1, j + 1, k + 1), m, note="compatibility")
    return True, None


def prelie_compat_defect(b: BialgebraCandidate, i: int, j: int):
    """Defect of the pre-Lie compatibility identity on one basis pair:
    coproduct of the product, minus the two published right-hand terms."""
    a, c = b.algebra, b.coalgebra
    n = b.dim
    ei, ej = a.basis_vector(i), a.basis_vector(j)
    lhs = c.comultiply(a.multiply(ei, ej))
    m = c.comultiply(ei)
    rhs = [[Fraction(0)] * n for _ in range(n)]
    for p in range(n):
        for q in range(n):
            if m[p][q] == 0:
                continue
            # (id (x) product) on e_p (x) e_q (x) e_j
            prod = a.multiply(a.basis_vector(q), ej)
            for k in range(n):
                rhs[p][k] += m[p][q] * prod[k]
            # (product (x) id) after swapping the last two slots
            prod = a.multiply(a.basis_vector(p), ej)
            for k in range(n):
                rhs[k][q] += m[p][q] * prod[k]
    return tuple(
        tuple(lhs[p][q] - rhs[p][q] for q in range(n)) for p in range(n)
    )


def check_prelie_bialgebra_compat(b: BialgebraCandidate) -> tuple[bool, Witness | None]:
    """The pre-Lie compatibility identity on all basis pairs."""
    n = b.dim
    for i, j in product(range(n), repeat=2):
        defect = prelie_compat_defect(b, i, j)
        if any(x != 0 for row in defect for x in row):
            return False, Witness((i + 1, j + 1), defect)
    return True, None


def check_prelie_bialgebra(b: BialgebraCandidate):
    """Combined verdict: product side pre-Lie, coproduct side pre-Lie, and
    the compatibility identity; returns (overall, component dict)."""
    parts = {}
    parts["algebra-g3"] = is_gi_associative(b.algebra, 3)
    parts["coalgebra-g3"] = is_gi_coalgebra(b.coalgebra, 3)
    parts["compatibility"] = check_prelie_bialgebra_compat(b)
    overall = all(ok for ok, _ in parts.values())
    return overall, parts
