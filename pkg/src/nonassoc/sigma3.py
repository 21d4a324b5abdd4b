"""The symmetric group on {1,2,3}, its rational group algebra, and the
permutation action on third tensor powers.

The six permutations are kept in the fixed order (id, t12, t13, t23, c1, c2)
everywhere: group-algebra coordinates, orbits, echelon bases and serialized
output all use it.  c1 is the cycle 1->2->3->1 and c2 its inverse; the choice
is symmetric, but it is pinned so results are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import (
    Vector,
    in_span,
    kernel_basis,
    parse_rational,
    format_rational,
    rref,
)


class Perm:
    """A permutation of {1,2,3} stored by its one-line images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of (1,2,3): {images!r}")
        object.__setattr__(self, "images", images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def compose(self, other: "Perm") -> "Perm":
        """(p.compose(q))(x) == p(q(x)); makes phi_perm a left action."""
        return PERM_BY_IMAGES[tuple(self(other(x)) for x in (1, 2, 3))]

    def inverse(self) -> "Perm":
        inv = [0, 0, 0]
        for x in (1, 2, 3):
            inv[self(x) - 1] = x
        return PERM_BY_IMAGES[tuple(inv)]

    @property
    def sign(self) -> int:
        s = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if self.images[i] > self.images[j]:
                    s = -s
        return s

    @property
    def name(self) -> str:
        return _PERM_NAMES[self.images]

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({self.name})"


IDENTITY = Perm((1, 2, 3))
T12 = Perm((2, 1, 3))
T13 = Perm((3, 2, 1))
T23 = Perm((1, 3, 2))
C1 = Perm((2, 3, 1))  # 1->2, 2->3, 3->1
C2 = Perm((3, 1, 2))

PERMS: tuple[Perm, ...] = (IDENTITY, T12, T13, T23, C1, C2)
PERM_BY_IMAGES = {p.images: p for p in PERMS}
PERM_INDEX = {p: i for i, p in enumerate(PERMS)}
_PERM_NAMES = {
    IDENTITY.images: "id",
    T12.images: "t12",
    T13.images: "t13",
    T23.images: "t23",
    C1.images: "c1",
    C2.images: "c2",
}

SUBGROUPS: dict[int, tuple[Perm, ...]] = {
    1: (IDENTITY,),
    2: (IDENTITY, T12),
    3: (IDENTITY, T23),
    4: (IDENTITY, T13),
    5: (IDENTITY, C1, C2),
    6: PERMS,
}


def subgroup_elements(i: int) -> tuple[Perm, ...]:
    """The i-th subgroup of the fixed list, 1 = trivial ... 6 = whole group."""
    if i not in SUBGROUPS:
        raise ValueError(f"subgroup index {i} out of range 1..6")
    return SUBGROUPS[i]


class GroupVector:
    """An element of the rational group algebra of the six permutations."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != 6:
            raise ValueError("a group vector has exactly six coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> "GroupVector":
        return cls((0,) * 6)

    @classmethod
    def unit(cls, p: Perm, c=1) -> "GroupVector":
        v = [Fraction(0)] * 6
        v[PERM_INDEX[p]] = Fraction(c)
        return cls(v)

    def __getitem__(self, p: Perm) -> Fraction:
        return self.coeffs[PERM_INDEX[p]]

    def __add__(self, other):
        return GroupVector(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return GroupVector(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return GroupVector(-a for a in self.coeffs)

    def scale(self, c) -> "GroupVector":
        c = Fraction(c)
        return GroupVector(c * a for a in self.coeffs)

    def __mul__(self, other):
        """Product induced by group multiplication, extended bilinearly."""
        out = [Fraction(0)] * 6
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                out[PERM_INDEX[PERMS[i].compose(PERMS[j])]] += a * b
        return GroupVector(out)

    def right_translate(self, p: Perm) -> "GroupVector":
        """v -> v . p under right multiplication in the group algebra."""
        out = [Fraction(0)] * 6
        for i, a in enumerate(self.coeffs):
            out[PERM_INDEX[PERMS[i].compose(p)]] = a
        return GroupVector(out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, GroupVector) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"GroupVector({format_group_vector(self)})"


def parse_group_vector(s: str) -> GroupVector:
    parts = s.split(",")
    if len(parts) != 6:
        raise ValueError(f"expected six comma-separated rationals, got {len(parts)}")
    return GroupVector(parse_rational(p) for p in parts)


def format_group_vector(v: GroupVector) -> str:
    return ",".join(format_rational(c) for c in v.coeffs)


def alternating_vector(i: int) -> GroupVector:
    """Sum of sign(s).s over the i-th subgroup; i = 6 gives V."""
    v = [Fraction(0)] * 6
    for p in subgroup_elements(i):
        v[PERM_INDEX[p]] = Fraction(p.sign)
    return GroupVector(v)


def symmetrizing_vector(i: int) -> GroupVector:
    """Sum of the inverses of the i-th subgroup's elements."""
    v = [Fraction(0)] * 6
    for p in subgroup_elements(i):
        v[PERM_INDEX[p.inverse()]] += 1
    return GroupVector(v)


V = alternating_vector(6)
ALL_ONES = GroupVector((1,) * 6)


class Tensor3:
    """An element of the third tensor power of an n-dimensional space,
    stored densely as t[a][b][c] with 0-based indices."""

    __slots__ = ("dim", "data")

    def __init__(self, dim: int, data):
        data = tuple(
            tuple(
                tuple(c if type(c) is Fraction else Fraction(c) for c in row)
                for row in plane
            )
            for plane in data
        )
        if len(data) != dim or any(
            len(plane) != dim or any(len(row) != dim for row in plane) for plane in data
        ):
            raise ValueError("tensor data does not match the declared dimension")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "data", data)

    @classmethod
    def zero(cls, dim: int) -> "Tensor3":
        z = Fraction(0)
        return cls(dim, tuple(tuple((z,) * dim for _ in range(dim)) for _ in range(dim)))

    @classmethod
    def basis(cls, dim: int, a: int, b: int, c: int) -> "Tensor3":
        t = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        t[a][b][c] = Fraction(1)
        return cls(dim, t)

    def __getitem__(self, abc):
        a, b, c = abc
        return self.data[a][b][c]

    def _check(self, other):
        if self.dim != other.dim:
            raise ValueError(f"tensor dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return Tensor3(
            self.dim,
            tuple(
                tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(p1, p2))
                for p1, p2 in zip(self.data, other.data)
            ),
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, f) -> "Tensor3":
        f = Fraction(f)
        return Tensor3(
            self.dim,
            [[[f * c for c in row] for row in plane] for plane in self.data],
        )

    def is_zero(self) -> bool:
        return all(c == 0 for plane in self.data for row in plane for c in row)

    def entries(self):
        """Nonzero entries as ((a, b, c), coeff), lexicographic."""
        for a in range(self.dim):
            for b in range(self.dim):
                for c in range(self.dim):
                    if self.data[a][b][c] != 0:
                        yield (a, b, c), self.data[a][b][c]

    def __eq__(self, other):
        return (
            isinstance(other, Tensor3)
            and self.dim == other.dim
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.dim, self.data))

    def __repr__(self):
        parts = ",".join(f"{idx}:{format_rational(c)}" for idx, c in self.entries())
        return f"Tensor3(dim={self.dim},{{{parts}}})"


def phi_perm(p: Perm, t: Tensor3) -> Tensor3:
    """Slot permutation: output slot i carries input slot p^-1(i)."""
    inv = p.inverse()
    n = t.dim
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                coeff = t.data[a][b][c]
                if coeff == 0:
                    continue
                idx = (a, b, c)
                out[idx[inv(1) - 1]][idx[inv(2) - 1]][idx[inv(3) - 1]] += coeff
    return Tensor3(n, out)


def phi_vector(v: GroupVector, t: Tensor3) -> Tensor3:
    """Linear combination sum_s v[s] . phi_perm(s, t)."""
    out = Tensor3.zero(t.dim)
    for i, c in enumerate(v.coeffs):
        if c != 0:
            out = out + phi_perm(PERMS[i], t).scale(c)
    return out


def right_orbit(v: GroupVector) -> list[GroupVector]:
    """The six right translates v.s in the fixed s order, duplicates kept."""
    return [v.right_translate(p) for p in PERMS]


def invariant_subspace(v: GroupVector) -> list[GroupVector]:
    """Reduced echelon basis of the span of the right orbit of v."""
    rows = [w.coeffs for w in right_orbit(v)]
    reduced, _ = rref(rows)
    return [GroupVector(row) for row in reduced]


# Central idempotents of the group algebra, one per irreducible character.
P_TRIVIAL = GroupVector([Fraction(1, 6)] * 6)
P_SIGN = GroupVector([Fraction(p.sign, 6) for p in PERMS])
P_STANDARD = GroupVector.unit(IDENTITY) - P_TRIVIAL - P_SIGN


def isotypic_dimensions(basis: list[GroupVector]) -> tuple[int, int, int]:
    """Dimensions of the trivial, sign and standard isotypic pieces of a
    right-invariant subspace given by ``basis``.

    Raises ValueError naming a violating permutation if the span is not
    closed under right multiplication.
    """
    rows = [b.coeffs for b in basis]
    for b in basis:
        for p in PERMS:
            if not in_span(b.right_translate(p).coeffs, rows):
                raise ValueError(
                    f"basis is not right-invariant: translate by {p.name} leaves the span"
                )
    dims = []
    for proj in (P_TRIVIAL, P_SIGN, P_STANDARD):
        projected = [(b * proj).coeffs for b in basis]
        dims.append(len(rref(projected)[1]))
    return tuple(dims)


def _right_mult_matrix(p: Perm):
    cols = [GroupVector.unit(q).right_translate(p).coeffs for q in PERMS]
    return [[cols[j][i] for j in range(6)] for i in range(6)]


def one_dimensional_invariants() -> list[GroupVector]:
    """The two lines of the group algebra fixed (up to character) by right
    multiplication: the all-ones vector and the alternating vector V.

    Computed by solving v.s = chi(s)v for the two linear characters on the
    generators t12 and c1, not hardcoded.
    """
    out = []
    for chi_t12, chi_c1 in ((1, 1), (-1, 1)):
        rows = []
        for p, chi in ((T12, chi_t12), (C1, chi_c1)):
            m = _right_mult_matrix(p)
            for i in range(6):
                row = list(m[i])
                row[i] -= chi
                rows.append(row)
        kernel = kernel_basis(rows)
        if len(kernel) != 1:
            raise AssertionError("each linear character must fix exactly one line")
        vec = kernel[0]
        lead = next(c for c in vec if c != 0)
        out.append(GroupVector(c / lead for c in vec))
    return out
