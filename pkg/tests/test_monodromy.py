from __future__ import annotations

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from common.errors import BudgetExceeded, DomainTooLarge, EquivarianceError, HypothesisViolation
from monodromy import (
    BraidWord,
    H2StarContext,
    analyze,
    b_to_genus,
    braid_perms,
    braid_relations_hold,
    branch_count,
    chain_rep_check,
    chain_transvection_group,
    check_equivariance,
    commutator_witness,
    coset_representation,
    cube_closure_check,
    fiber_restrict,
    full_twist,
    genus_to_b,
    h2star_contains,
    nielsen_setup,
    omega_transvection_crosscheck,
    predict,
    seed_omega_class,
    sphere_word,
)
from nielsen import enumerate_classes
from permtools import FactoredInteger, compose, inverse, power
from symplectic import classical_order

PSP43 = classical_order("PSp", 4, 3)

# beta_1 and beta_3 .. beta_5 fix the seed class at b=6
h2_words = st.lists(st.sampled_from([1, -1, 3, -3, 4, -4, 5, -5]), max_size=10).map(BraidWord.of)


def test_genus_and_branch_points():
    assert genus_to_b(0) == 6
    assert genus_to_b(1) == 8
    assert b_to_genus(10) == 2
    assert all(branch_count(4, g) == genus_to_b(g) for g in range(5))
    assert branch_count(3, 0) == 4
    for b in (4, 7):
        with pytest.raises(HypothesisViolation):
            b_to_genus(b)
    with pytest.raises(HypothesisViolation):
        genus_to_b(-1)


def test_braid_word_parsing():
    assert BraidWord.parse("1 -2 3").letters == (1, -2, 3)
    assert BraidWord.parse("1,2").letters == (1, 2)
    assert str(BraidWord()) == "1"
    assert BraidWord.of([1, 2]).inverse() == BraidWord((-2, -1))
    assert (BraidWord((1,)) ** -2).letters == (-1, -1)
    for text in ("0", "1 0 2", "b1"):
        with pytest.raises(HypothesisViolation):
            BraidWord.parse(text)


def test_braid_perms_on_sym3(sym3):
    cs = enumerate_classes(sym3, 4)
    perms = braid_perms(cs)
    assert len(perms) == 3
    assert all(p.degree == 4 for p in perms)
    assert braid_relations_hold(perms)
    assert sphere_word(4).evaluate(perms).is_identity()


def test_braid_words_evaluate_as_a_homomorphism(g0_setup):
    perms = g0_setup.sigma_perms
    u, v = BraidWord.parse("1 2 -3"), BraidWord.parse("5 -1 4 4")
    assert (u * v).evaluate(perms) == compose(u.evaluate(perms), v.evaluate(perms))
    assert (u * u.inverse()).evaluate(perms).is_identity()
    assert BraidWord.parse("1 1 1").evaluate(perms) == power(perms[0], 3)
    with pytest.raises(HypothesisViolation):
        BraidWord.parse("6").evaluate(perms)


def test_g0_setup(g0_setup):
    assert len(g0_setup.sigma) == 120
    assert len(g0_setup.omega) == 40
    assert g0_setup.b == 6
    for perms in (g0_setup.sigma_perms, g0_setup.omega_perms):
        assert braid_relations_hold(perms)
        assert sphere_word(6).evaluate(perms).is_identity()
        assert full_twist(6).evaluate(perms).is_identity()
    check_equivariance(g0_setup.projection, g0_setup.sigma_perms, g0_setup.omega_perms)


def test_equivariance_failure_is_reported(g0_setup):
    swapped = [g0_setup.sigma_perms[1], g0_setup.sigma_perms[0], *g0_setup.sigma_perms[2:]]
    with pytest.raises(EquivarianceError):
        check_equivariance(g0_setup.projection, swapped, g0_setup.omega_perms)


def test_g0_analysis(g0_setup):
    s = g0_setup
    report = analyze(s.sigma, s.omega, s.projection, sigma_perms=s.sigma_perms, omega_perms=s.omega_perms)
    assert report.transitive
    assert report.omega_transitive
    assert report.omega_primitive
    assert report.omega_order == PSP43
    assert report.kernel_order == FactoredInteger({3: 40, 2: 16})
    assert report.group_order == predict("thm1-exceptional-g0").total
    assert report.fiber_sizes == {3: 40}
    results = report.to_results()
    assert results["omega_image"]["order_decimal"] == "25920"
    assert results["fiber_sizes"] == {"3": 40}


def test_fiber_restrictions(g0_setup):
    s = g0_setup
    w = seed_omega_class(s.omega)
    first, last = fiber_restrict(
        s.sigma, s.omega, s.projection, [power(s.sigma_perms[0], 3), power(s.sigma_perms[-1], 3)], w
    )
    assert first.degree == 3
    assert first.is_identity()
    assert not last.is_identity()
    with pytest.raises(HypothesisViolation):
        fiber_restrict(s.sigma, s.omega, s.projection, [s.sigma_perms[1]], w)
    with pytest.raises(HypothesisViolation):
        fiber_restrict(s.sigma, s.omega, s.projection, [], len(s.omega))


def test_h2star_membership(g0_setup):
    context = H2StarContext(g0_setup)
    assert context.S.order == 6
    assert context.A.order == 3
    assert len(context.fiber) == 3
    assert h2star_contains(g0_setup.sigma_perms[0], context)
    assert not h2star_contains(g0_setup.sigma_perms[-1], context)
    assert not h2star_contains(g0_setup.sigma_perms[1], context)
    assert h2star_contains(power(g0_setup.sigma_perms[-1], 2), context)


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(h2_words, h2_words)
def test_h2star_is_closed_and_of_index_two(g0_setup, g0_h2star, u, v):
    x, y = u.evaluate(g0_setup.sigma_perms), v.evaluate(g0_setup.sigma_perms)
    assert g0_h2star.omega_image(x) == g0_h2star.omega_class
    x_in, y_in = h2star_contains(x, g0_h2star), h2star_contains(y, g0_h2star)
    assert h2star_contains(inverse(x), g0_h2star) == x_in
    assert h2star_contains(compose(x, y), g0_h2star) == (x_in == y_in)
    assert h2star_contains(compose(x, x), g0_h2star)


def test_g0_cosets(g0_setup):
    rep = coset_representation(H2StarContext(g0_setup))
    assert rep.degree == 80
    assert len(rep.words) == 80
    assert rep.image.factored_order == FactoredInteger({2: 16}) * PSP43
    assert rep.image.is_transitive()
    assert rep.generators[0](0) == 0
    assert braid_relations_hold(rep.generators)
    assert rep.to_results()["degree"] == 80


def test_coset_budget(g0_setup):
    with pytest.raises(BudgetExceeded) as info:
        coset_representation(H2StarContext(g0_setup), budget=10)
    assert info.value.partial["coset_budget"] == 10


def test_commutator_witness_at_g0(g0_setup):
    witness = commutator_witness(g0_setup)
    assert witness.in_omega_kernel
    assert witness.to_results()["holds"] == witness.holds


@pytest.mark.parametrize("g,modulus", [(0, 2), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3)])
def test_chain_representation(g, modulus):
    check = chain_rep_check(g, modulus)
    assert check.passed
    assert check.degree == modulus ** (2 * g + 2)
    assert check.expected == classical_order("Sp", 2 * g + 2, modulus)


def test_chain_representation_limits():
    with pytest.raises(DomainTooLarge):
        chain_rep_check(2, 5)
    with pytest.raises(HypothesisViolation):
        chain_transvection_group(-1, 2)


@pytest.mark.parametrize("g,modulus,full", [(0, 2, True), (0, 4, True), (0, 5, True), (1, 2, True), (0, 3, False)])
def test_cube_closures(g, modulus, full):
    check = cube_closure_check(g, modulus)
    assert check.full is full
    assert check.passed


def test_omega_crosscheck_at_g0():
    check = omega_transvection_crosscheck(0)
    assert check.points == 40
    assert check.matrix_order == check.nielsen_order == PSP43
    assert check.cycle_types_agree
    assert check.passed


def test_predictions():
    g0 = predict("thm1-exceptional-g0")
    assert (g0.omega_size, g0.fiber_size) == (40, 3)
    assert g0.total == 3**40 * 2**16 * 25920

    thm2 = predict("thm2", g=0, modulus=5)
    assert thm2.fiber_size == 25
    assert thm2.total == 120**40 * 25920

    thm3 = predict("thm3", b=6, modulus=5)
    assert thm3.sigma_degree == 240
    assert thm3.total == 60**40 * 25920

    g1 = predict("thm1-exceptional-g1")
    assert g1.omega_size == 364
    assert g1.left == FactoredInteger.from_int(360) ** 364 * FactoredInteger({2: 168})
    assert g1.right == classical_order("PSp", 6, 3)

    thm1 = predict("thm1", g=2)
    assert thm1.omega_size == 3280
    assert thm1.fiber_size == 63
    assert thm1.right == classical_order("PSp", 8, 3)


@pytest.mark.parametrize(
    "tag,params,message",
    [
        ("thm1", {"g": 1}, "g>1"),
        ("thm2", {"g": 2, "modulus": 3}, "3 does not divide N"),
        ("thm2", {"g": 1, "modulus": 4}, "g>1 if N is even"),
        ("thm3", {"b": 6, "modulus": 2}, "b>8 if N is even"),
        ("thm3", {"b": 4, "modulus": 5}, "b>4"),
        ("thm2", {"g": 1}, "needs --N"),
        ("thm4", {}, "unknown theorem"),
    ],
)
def test_prediction_hypotheses(tag, params, message):
    with pytest.raises(HypothesisViolation, match=message):
        predict(tag, **params)


def test_failed_hypothesis_names_values():
    with pytest.raises(HypothesisViolation) as info:
        predict("thm3", b=6, modulus=2)
    assert str(info.value) == "hypothesis b>8 if N is even fails for b=6, N=2"


@pytest.mark.slow
def test_g1_restrictions_cosets_and_witness(g1_setup):
    assert len(g1_setup.sigma) == 5460
    context = H2StarContext(g1_setup)
    assert len(context.fiber) == 15
    assert context.S.order == 720
    assert context.A.order == 360
    witness = commutator_witness(g1_setup)
    assert witness.holds
    rep = coset_representation(context)
    assert rep.degree == 728
    assert rep.image.factored_order == FactoredInteger({2: 168}) * classical_order("PSp", 6, 3)


@pytest.mark.slow
def test_x5_monodromy_matches_prediction():
    s = nielsen_setup("xn", 6, 5)
    report = analyze(s.sigma, s.omega, s.projection, sigma_perms=s.sigma_perms, omega_perms=s.omega_perms)
    expected = predict("thm3", b=6, modulus=5)
    assert report.degree == expected.sigma_degree
    assert report.fiber_sizes == {6: 40}
    assert report.group_order == expected.total
    assert report.omega_order == PSP43
    assert report.kernel_order == classical_order("PSp", 2, 5) ** 40 == expected.left
