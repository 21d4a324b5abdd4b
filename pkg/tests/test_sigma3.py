import random
from fractions import Fraction
from itertools import product

import pytest

from nonassoc.linalg import in_span
from nonassoc.sigma3 import (
    ALL_ONES,
    C1,
    C2,
    GroupVector,
    IDENTITY,
    PERMS,
    T12,
    T13,
    T23,
    Tensor3,
    V,
    alternating_vector,
    format_group_vector,
    invariant_subspace,
    isotypic_dimensions,
    one_dimensional_invariants,
    parse_group_vector,
    phi_perm,
    phi_vector,
    right_orbit,
    subgroup_elements,
    symmetrizing_vector,
)


def random_tensor(rng, n):
    return Tensor3(
        n,
        [
            [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
            for _ in range(n)
        ],
    )


def test_group_table():
    assert T12.compose(T12) == IDENTITY
    assert C1.inverse() == C2
    assert C1.compose(C1) == C2
    assert C1.compose(C2) == IDENTITY
    for p in PERMS:
        assert p.compose(p.inverse()) == IDENTITY
        assert p.inverse().compose(p) == IDENTITY


def test_signs():
    assert T12.sign == -1
    assert T13.sign == -1
    assert T23.sign == -1
    assert C1.sign == 1
    assert C2.sign == 1
    assert IDENTITY.sign == 1


def test_sign_multiplicative_all_36_pairs():
    for p in PERMS:
        for q in PERMS:
            assert p.compose(q).sign == p.sign * q.sign


def test_phi_perm_identity():
    t = Tensor3.basis(3, 0, 1, 2)
    assert phi_perm(IDENTITY, t) == t


def test_phi_perm_c1_on_decomposable():
    # x1 (x) x2 (x) x3 with x_i = e_i goes to x3 (x) x1 (x) x2
    t = Tensor3.basis(3, 0, 1, 2)
    assert phi_perm(C1, t) == Tensor3.basis(3, 2, 0, 1)


def test_phi_perm_t13_swaps_outer():
    t = Tensor3.basis(3, 0, 1, 2)
    assert phi_perm(T13, t) == Tensor3.basis(3, 2, 1, 0)


def test_phi_left_action_law():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 3)
        t = random_tensor(rng, n)
        p = rng.choice(PERMS)
        q = rng.choice(PERMS)
        assert phi_perm(p.compose(q), t) == phi_perm(p, phi_perm(q, t))


def test_phi_vector_identity_coefficient():
    t = Tensor3.basis(2, 0, 1, 1)
    assert phi_vector(GroupVector.unit(IDENTITY), t) == t


def test_phi_vector_v_kills_symmetric_tensor():
    # x (x) x (x) x for a basis x is fixed by every slot permutation
    t = Tensor3.basis(2, 0, 0, 0)
    assert phi_vector(V, t).is_zero()


def test_phi_vector_all_ones_sums_slots():
    t = Tensor3.basis(3, 0, 1, 2)
    total = phi_vector(ALL_ONES, t)
    expected = Tensor3.zero(3)
    for p in PERMS:
        expected = expected + phi_perm(p, t)
    assert total == expected
    # six distinct slot arrangements of three distinct letters
    assert len(list(total.entries())) == 6


def test_phi_vector_matches_signed_sum_of_phi_perm():
    rng = random.Random(17)
    for i in range(1, 7):
        v = alternating_vector(i)
        for _ in range(10):
            n = rng.randint(1, 3)
            t = random_tensor(rng, n)
            expected = Tensor3.zero(n)
            for p in subgroup_elements(i):
                expected = expected + phi_perm(p, t).scale(p.sign)
            assert phi_vector(v, t) == expected


def test_subgroups():
    assert subgroup_elements(1) == (IDENTITY,)
    assert set(subgroup_elements(2)) == {IDENTITY, T12}
    assert set(subgroup_elements(3)) == {IDENTITY, T23}
    assert set(subgroup_elements(4)) == {IDENTITY, T13}
    assert set(subgroup_elements(5)) == {IDENTITY, C1, C2}
    assert set(subgroup_elements(6)) == set(PERMS)
    with pytest.raises(ValueError):
        subgroup_elements(0)
    with pytest.raises(ValueError):
        subgroup_elements(7)


def test_alternating_vectors():
    assert alternating_vector(2) == GroupVector([1, -1, 0, 0, 0, 0])
    assert alternating_vector(5) == GroupVector([1, 0, 0, 0, 1, 1])
    assert alternating_vector(6) == GroupVector([1, -1, -1, -1, 1, 1])
    assert V == alternating_vector(6)


def test_symmetrizing_vectors():
    assert symmetrizing_vector(1) == GroupVector.unit(IDENTITY)
    # inverses of {id, c1, c2} are {id, c2, c1}: same support
    assert symmetrizing_vector(5) == GroupVector([1, 0, 0, 0, 1, 1])
    assert symmetrizing_vector(6) == ALL_ONES


def test_right_orbit_of_identity_unit():
    orbit = right_orbit(GroupVector.unit(IDENTITY))
    assert orbit == [GroupVector.unit(p) for p in PERMS]


def test_right_orbit_of_all_ones():
    assert right_orbit(ALL_ONES) == [ALL_ONES] * 6


def test_right_orbit_of_g2_vector():
    for w in right_orbit(alternating_vector(2)):
        nonzero = [c for c in w.coeffs if c != 0]
        assert sorted(nonzero) == [Fraction(-1), Fraction(1)]


def test_invariant_subspace_examples():
    assert invariant_subspace(GroupVector.zero()) == []
    ones_basis = invariant_subspace(ALL_ONES)
    assert len(ones_basis) == 1
    assert in_span(ALL_ONES.coeffs, [b.coeffs for b in ones_basis])
    v_basis = invariant_subspace(V)
    assert len(v_basis) == 1
    assert in_span(V.coeffs, [b.coeffs for b in v_basis])


def test_v_orbit_is_sign_line():
    # V . s = sign(s) V
    for p, w in zip(PERMS, right_orbit(V)):
        assert w == V.scale(p.sign)


def test_orbit_members_stay_in_invariant_subspace():
    rng = random.Random(23)
    for _ in range(20):
        v = GroupVector([Fraction(rng.randint(-3, 3)) for _ in range(6)])
        basis = [b.coeffs for b in invariant_subspace(v)]
        for w in right_orbit(v):
            assert in_span(w.coeffs, basis)
        # closure under right multiplication
        for b in invariant_subspace(v):
            for p in PERMS:
                assert in_span(b.right_translate(p).coeffs, basis)


def test_isotypic_dimensions_regular():
    basis = [GroupVector.unit(p) for p in PERMS]
    assert isotypic_dimensions(basis) == (1, 1, 4)


def test_isotypic_dimensions_sign_line():
    assert isotypic_dimensions([V]) == (0, 1, 0)


def test_isotypic_dimensions_trivial_line():
    assert isotypic_dimensions([ALL_ONES]) == (1, 0, 0)


def test_isotypic_dimensions_sum():
    rng = random.Random(31)
    for _ in range(20):
        v = GroupVector([Fraction(rng.randint(-2, 2)) for _ in range(6)])
        basis = invariant_subspace(v)
        dims = isotypic_dimensions(basis)
        assert sum(dims) == len(basis)


def test_isotypic_rejects_non_invariant():
    with pytest.raises(ValueError, match="t12|t13|t23|c1|c2"):
        isotypic_dimensions([GroupVector.unit(IDENTITY)])


def test_one_dimensional_invariants():
    lines = one_dimensional_invariants()
    assert len(lines) == 2
    assert lines[0] == ALL_ONES
    assert lines[1] == V


def test_v_in_every_alternating_invariant_subspace():
    for i in range(1, 7):
        basis = invariant_subspace(alternating_vector(i))
        assert in_span(V.coeffs, [b.coeffs for b in basis])


def test_group_vector_product_associative():
    rng = random.Random(41)
    for _ in range(30):
        a, b, c = (
            GroupVector([Fraction(rng.randint(-2, 2)) for _ in range(6)]) for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)


def test_group_vector_parse_format_roundtrip():
    s = "1,-1,-1,-1,1,1"
    assert format_group_vector(parse_group_vector(s)) == s
    assert parse_group_vector(s) == V
    with pytest.raises(ValueError):
        parse_group_vector("1,2,3")
    with pytest.raises(ValueError):
        parse_group_vector("1,2,3,4,5,1/0")
