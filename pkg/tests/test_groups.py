from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from crossedcat.errors import AssocViolation, ModulusTooSmall, NoInverse, NoIdentity
from crossedcat.groups import (cyclic, dihedral, direct_product, enumerate_characters,
                               find_isomorphism, group_hom, identity_hom, kernel,
                               product_projections, subgroup_from_generators, symmetric,
                               trivial_group, validate_group)
from crossedcat.scalars import UnitScalar


def brute_force_s3_table():
    """Compose permutations of {0,1,2} directly and tabulate."""
    perms = sorted(itertools.permutations(range(3)))
    return [[perms.index(tuple(p[q[i]] for i in range(3))) for q in perms] for p in perms]


def test_validate_group_s3_from_permutations():
    G = validate_group(brute_force_s3_table(), name="S3")
    assert G.order == 6
    assert not G.is_abelian()
    # all three laws on every triple
    for a in G.elements():
        assert G.mul(a, G.inv(a)) == G.identity
        for b in G.elements():
            for c in G.elements():
                assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


def test_validate_group_trivial():
    G = validate_group([[0]], 0)
    assert G.order == 1 and G.identity == 0


def test_validate_group_perturbed_s3_reports_witness():
    table = brute_force_s3_table()
    # swap one interior entry; re-check exhaustively via the validator
    table[2][3], table[2][4] = table[2][4], table[2][3]
    with pytest.raises((AssocViolation, NoInverse, NoIdentity)) as exc:
        validate_group(table, 0)
    assert getattr(exc.value, "witness", None) is not None


def test_direct_product_z2_z3_is_z6():
    P = direct_product(cyclic(2), cyclic(3))
    assert P.order == 6
    iso = find_isomorphism(P, cyclic(6))
    assert iso is not None and iso.is_bijective()


def test_direct_product_with_trivial_is_same_table():
    G = symmetric(3)
    P = direct_product(G, trivial_group())
    assert P.table == G.table


def test_direct_product_klein_all_self_inverse():
    P = direct_product(cyclic(2), cyclic(2))
    assert all(P.mul(a, a) == P.identity for a in P.elements())


def test_product_projections_are_homs():
    G, H = symmetric(3), cyclic(4)
    P = direct_product(G, H)
    p1, p2 = product_projections(G, H, P)
    assert len(kernel(p1)) == H.order
    assert len(kernel(p2)) == G.order


def test_subgroup_from_generators():
    S3 = symmetric(3)
    perms = sorted(itertools.permutations(range(3)))
    t12 = perms.index((1, 0, 2))
    c3 = perms.index((1, 2, 0))
    assert len(subgroup_from_generators(S3, [t12])) == 2
    assert len(subgroup_from_generators(S3, [c3])) == 3
    assert subgroup_from_generators(S3, []) == [S3.identity]


def test_kernel_cases():
    Z4, Z2 = cyclic(4), cyclic(2)
    assert kernel(identity_hom(Z4)) == [0]
    mod2 = group_hom(Z4, Z2, [a % 2 for a in range(4)])
    assert kernel(mod2) == [0, 2]
    const = group_hom(Z4, trivial_group(), [0] * 4)
    assert kernel(const) == [0, 1, 2, 3]


def test_characters_z2_mod4():
    Z2 = cyclic(2)
    chars = enumerate_characters(Z2, [0, 1], 4)
    assert [chi[1] for chi in chars] == [0, 2]


def test_characters_trivial_group():
    T = trivial_group()
    assert len(enumerate_characters(T, [0], 5)) == 1


def test_characters_s3_mod6_factor_through_sign():
    S3 = symmetric(3)
    chars = enumerate_characters(S3, list(S3.elements()), 6)
    assert len(chars) == 2  # trivial and sign, through the abelianization Z2
    for chi in chars:
        for a in S3.elements():
            for b in S3.elements():
                assert (chi[a] + chi[b]) % 6 == chi[S3.mul(a, b)]
    assert any(all(v == 0 for v in chi.values()) for chi in chars)
    assert len({tuple(sorted(c.items())) for c in chars}) == 2


def test_characters_modulus_too_small():
    with pytest.raises(ModulusTooSmall):
        enumerate_characters(cyclic(4), [0, 1, 2, 3], 6)


def test_characters_count_is_abelianization_order():
    D4 = dihedral(4)
    chars = enumerate_characters(D4, list(D4.elements()), 4)
    assert len(chars) == 4  # D4^ab = Z2 x Z2


def test_find_isomorphism_negative_and_identity():
    assert find_isomorphism(cyclic(4), direct_product(cyclic(2), cyclic(2))) is None
    G = dihedral(4)
    iso = find_isomorphism(G, G)
    assert iso is not None
    for a in G.elements():
        for b in G.elements():
            assert iso(G.mul(a, b)) == G.mul(iso(a), iso(b))


@given(st.integers(1, 12), st.integers(), st.integers(), st.integers())
def test_unit_scalar_algebra(m, a, b, c):
    x, y, z = UnitScalar(m, a), UnitScalar(m, b), UnitScalar(m, c)
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * UnitScalar.one(m) == x
    assert (x * x.inverse()).is_one
    zero = UnitScalar.zero(m)
    assert (x * zero).is_zero


@given(st.integers(1, 12), st.integers())
def test_unit_scalar_idempotent_root_is_one(m, a):
    x = UnitScalar(m, a)
    if x * x == x:
        assert x.exponent == 0
