from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from common.errors import DomainTooLarge, HypothesisViolation, NotInvertible
from permtools import bsgs_build, compose, enumerate_elements
from symplectic import (
    ResidueMatrix,
    ResidueVector,
    SymplecticSpace,
    all_vectors,
    center_scalars,
    chain_pairings,
    chain_vectors,
    classical_order,
    is_symplectic,
    matrix_action_perm,
    projective_count,
    projective_domain,
    projective_points,
    transvection_matrix,
    transvection_perms,
)


@st.composite
def space_and_vector(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    modulus = draw(st.sampled_from([2, 3, 4, 5, 6, 12]))
    entries = draw(st.lists(st.integers(min_value=0, max_value=modulus - 1), min_size=2 * n, max_size=2 * n))
    lam = draw(st.integers(min_value=0, max_value=modulus - 1))
    return SymplecticSpace(2 * n, modulus), ResidueVector(entries, modulus), lam


@given(space_and_vector())
def test_transvections_preserve_the_form(case):
    space, v, lam = case
    m = transvection_matrix(space, v, lam)
    assert is_symplectic(space, m)
    assert m.T @ space.gram @ m == space.gram


def test_transvection_examples():
    space = SymplecticSpace(2, 2)
    e1, f1 = space.e(1), space.f(1)
    assert transvection_matrix(space, ResidueVector.zero(2, 2)).is_identity()
    assert transvection_matrix(space, e1, 0).is_identity()
    m = transvection_matrix(space, e1)
    assert m.apply(e1) == e1
    assert m.apply(f1) == f1 + e1


def test_transvection_formula():
    space = SymplecticSpace(4, 5)
    v = ResidueVector([1, 2, 0, 3], 5)
    m = transvection_matrix(space, v, 2)
    for x in itertools.product(range(5), repeat=4):
        x = ResidueVector(x, 5)
        pairing = int(x.as_array() @ space.gram.array @ v.as_array())
        assert m.apply(x) == x + v.scale(2 * pairing)


def test_gram_matrix():
    gram = SymplecticSpace(6, 7).gram
    assert gram.T == ResidueMatrix(-gram.array, 7)
    assert not np.any(np.diag(gram.array))
    assert gram.det_unit()


@pytest.mark.parametrize("dimension", [2, 4, 6])
@pytest.mark.parametrize("modulus", [2, 3, 5, 12])
def test_chain_pairing_pattern(dimension, modulus):
    space = SymplecticSpace(dimension, modulus)
    chain = chain_vectors(dimension, dimension + 1, modulus)
    assert all(v.is_unimodular() for v in chain)
    gram = chain_pairings(space, chain)
    for i, j in itertools.product(range(len(chain)), repeat=2):
        if abs(i - j) == 1:
            assert gram[i][j] in (1, modulus - 1)
        else:
            assert gram[i][j] == 0


def test_chain_in_dimension_two():
    space = SymplecticSpace(2, 2)
    assert chain_vectors(2, 3, 2) == [space.e(1), space.f(1), space.e(1)]
    with pytest.raises(HypothesisViolation):
        chain_vectors(2, 4, 2)


@pytest.mark.parametrize("dimension,modulus", [(2, 2), (2, 5), (4, 2), (4, 3)])
def test_chain_transvections_braid(dimension, modulus):
    space = SymplecticSpace(dimension, modulus)
    t = [transvection_matrix(space, v) for v in chain_vectors(dimension, dimension + 1, modulus)]
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            if j == i + 1:
                assert t[i] @ t[j] @ t[i] == t[j] @ t[i] @ t[j]
            else:
                assert t[i] @ t[j] == t[j] @ t[i]


@pytest.mark.parametrize(
    "kind,dimension,modulus,order",
    [
        ("Sp", 2, 2, 6),
        ("Sp", 2, 4, 48),
        ("Sp", 2, 5, 120),
        ("Sp", 4, 2, 720),
        ("Sp", 4, 3, 51840),
        ("PSp", 2, 5, 60),
        ("PSp", 4, 3, 25920),
        ("PSp", 6, 3, 4585351680),
        ("Sp", 2, 6, 6 * 24),
    ],
)
def test_classical_orders(kind, dimension, modulus, order):
    assert classical_order(kind, dimension, modulus) == order


@pytest.mark.parametrize("modulus,order", [(2, 6), (4, 48)])
def test_sp2_by_brute_force(modulus, order):
    # every 2x2 matrix over Z/modulus
    space = SymplecticSpace(2, modulus)
    found = 0
    for entries in itertools.product(range(modulus), repeat=4):
        m = ResidueMatrix(np.array(entries).reshape(2, 2), modulus)
        found += is_symplectic(space, m)
    assert found == order == classical_order("Sp", 2, modulus)


def test_center_scalars():
    assert center_scalars(2) == [1]
    assert center_scalars(5) == [1, 4]
    assert center_scalars(12) == [1, 5, 7, 11]


@pytest.mark.parametrize("length,modulus,count", [(2, 2, 3), (4, 3, 40), (2, 4, 6), (4, 2, 15), (2, 5, 6), (2, 6, 12)])
def test_projective_points(length, modulus, count):
    points = projective_points(length, modulus)
    assert len(points) == count == projective_count(length - 1, modulus)
    assert all(p.is_unimodular() for p in points)
    assert len({p.entries for p in points}) == count


def test_projective_count_is_multiplicative():
    assert projective_count(3, 10) == projective_count(3, 2) * projective_count(3, 5)
    assert projective_count(5, 12) == projective_count(5, 4) * projective_count(5, 3)


def test_matrix_action_examples():
    domain = projective_domain(4, 2)
    assert matrix_action_perm(ResidueMatrix.identity(4, 2), domain).is_identity()

    space = SymplecticSpace(4, 2)
    t = matrix_action_perm(transvection_matrix(space, space.e(1)), domain)
    assert len(domain) == 15
    assert t.cycle_type() == ((1, 7), (2, 4))

    minus_one = ResidueMatrix.scalar(2, -1, 3)
    assert matrix_action_perm(minus_one, projective_domain(2, 3)).is_identity()
    assert not matrix_action_perm(minus_one, all_vectors(2, 3)).is_identity()

    with pytest.raises(NotInvertible):
        matrix_action_perm(ResidueMatrix([[1, 1], [1, 1]], 3), all_vectors(2, 3))


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4), st.sampled_from([2, 3, 4, 5]))
def test_matrix_action_is_a_homomorphism(i, j, modulus):
    space = SymplecticSpace(4, modulus)
    chain = chain_vectors(4, 5, modulus)
    m, n = transvection_matrix(space, chain[i]), transvection_matrix(space, chain[j], -1)
    for domain in (all_vectors(4, modulus), projective_domain(4, modulus)):
        assert matrix_action_perm(m @ n, domain) == compose(matrix_action_perm(m, domain), matrix_action_perm(n, domain))


def test_residue_matrix_inverse():
    space = SymplecticSpace(4, 6)
    m = transvection_matrix(space, ResidueVector([1, 5, 2, 3], 6), 4)
    assert (m @ m.inverse()).is_identity()
    assert (m ** -2) @ (m**2) == ResidueMatrix.identity(4, 6)
    with pytest.raises(NotInvertible):
        ResidueMatrix([[2, 0], [0, 1]], 4).inverse()


def test_domain_limits():
    assert len(all_vectors(4, 3)) == 81
    assert all_vectors(2, 3).index_of([1, 2]) == 5
    with pytest.raises(DomainTooLarge):
        all_vectors(10, 3)


def test_sp22_chain_group_by_closure():
    space = SymplecticSpace(2, 2)
    domain = all_vectors(2, 2)
    perms = transvection_perms(space, chain_vectors(2, 3, 2), domain)
    assert len(enumerate_elements(perms, len(domain))) == 6


def test_sp43_on_81_vectors():
    space = SymplecticSpace(4, 3)
    domain = all_vectors(4, 3)
    perms = transvection_perms(space, chain_vectors(4, 5, 3), domain)
    assert bsgs_build(perms, len(domain)).order == 51840


def test_psp43_on_40_points():
    space = SymplecticSpace(4, 3)
    domain = projective_domain(4, 3)
    perms = transvection_perms(space, chain_vectors(4, 5, 3), domain)
    assert bsgs_build(perms, len(domain)).factored_order == classical_order("PSp", 4, 3)
