import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringprob import CommutativeRingError, ZeroTargetError, catalog, random_rings
from ringprob.commutators import (
    AdditiveSubgroup,
    Coset,
    additive_closure,
    center,
    centralizer,
    check_bounds,
    check_dominance,
    check_lower_bound,
    check_prime_upper_bound,
    commutator_image,
    commutator_subgroup,
    pr_bruteforce,
    pr_formula,
    pr_spectrum,
    pr_spectrum_bruteforce,
    smallest_prime_divisor,
    solution_set,
)

A, B, AB = (1, 0), (0, 1), (1, 1)


def brute_centralizer(ring, x):
    """Definition-level oracle: all y with xy = yx."""
    return sorted(y for y in ring.elements if ring.multiply(x, y) == ring.multiply(y, x))


def brute_center(ring):
    return sorted(
        x
        for x in ring.elements
        if all(ring.multiply(x, y) == ring.multiply(y, x) for y in ring.elements)
    )


# -- subgroup machinery ---------------------------------------------------------

def test_additive_closure_z2z2():
    sub = additive_closure((2, 2), [(1, 1)])
    assert sub.members == ((0, 0), (1, 1))
    assert sub.is_subgroup()


def test_additive_closure_needs_fixpoint():
    # a single generator of order 4 forces multiples into the closure
    sub = additive_closure((4,), [(1,)])
    assert len(sub) == 4


def test_subgroup_and_coset_types(e4):
    sub = AdditiveSubgroup((2, 2), [(0, 0), (1, 1)])
    assert sub.is_subgroup()
    assert not AdditiveSubgroup((2, 2), [(0, 0), (1, 0), (1, 1)]).is_subgroup()
    coset = Coset((1, 0), sub)
    assert coset.members == ((0, 1), (1, 0))
    assert coset.representative == (0, 1)  # canonical, lexicographically least
    assert Coset((0, 1), sub) == coset


# -- centralizers and centers ----------------------------------------------------

def test_centralizer_e4(e4):
    assert centralizer(e4, A).members == ((0, 0), (1, 0))
    assert centralizer(e4, B).members == ((0, 0), (0, 1))


def test_centralizer_matches_brute_oracle(catalog_rings):
    for ring in catalog_rings:
        for x in ring.elements:
            assert list(centralizer(ring, x).members) == brute_centralizer(ring, x)


def test_centralizer_of_zero_is_everything(catalog_rings):
    for ring in catalog_rings:
        assert centralizer(ring, ring.zero).members == ring.elements


def test_center_examples(e4, tri22, tri32, zero5):
    assert center(e4).members == ((0, 0),)
    assert center(zero5).members == zero5.elements
    assert center(tri22).members == ((0, 0, 0), (1, 0, 1))
    assert len(center(tri32)) == 3


def test_center_matches_brute_oracle(catalog_rings):
    for ring in catalog_rings:
        assert list(center(ring).members) == brute_center(ring)


def test_centralizers_are_subgroups(noncommutative_rings):
    for ring in noncommutative_rings:
        for x in ring.elements:
            assert centralizer(ring, x).is_subgroup()
        assert center(ring).is_subgroup()


# -- commutator value sets ---------------------------------------------------------

def test_commutator_image_e4(e4):
    assert commutator_image(e4, A).members == ((0, 0), (1, 1))
    assert commutator_image(e4, e4.zero).members == ((0, 0),)


def test_commutator_image_is_already_closed(catalog_rings, e4_x_tri22):
    # the raw value set is a subgroup without any closure pass
    for ring in list(catalog_rings) + [e4_x_tri22]:
        for x in ring.elements:
            image = commutator_image(ring, x)
            assert image.is_subgroup()
            raw = {ring.commutator(x, y) for y in ring.elements}
            assert set(image.members) == raw


def test_image_size_times_centralizer_size(catalog_rings):
    for ring in catalog_rings:
        for x in ring.elements:
            assert len(commutator_image(ring, x)) * len(centralizer(ring, x)) == ring.order


def test_commutator_subgroup_examples(e4, tri32, zero5, cyclic6):
    assert commutator_subgroup(e4).members == ((0, 0), (1, 1))
    assert len(commutator_subgroup(tri32)) == 3
    assert commutator_subgroup(zero5).members == ((0,),)
    assert commutator_subgroup(cyclic6).members == ((0,),)


def test_commutator_subgroup_contains_all_commutators(noncommutative_rings):
    for ring in noncommutative_rings:
        sub = commutator_subgroup(ring)
        assert sub.is_subgroup()
        for x in ring.elements:
            for y in ring.elements:
                assert ring.commutator(x, y) in sub


def test_commutator_additive_in_second_argument(catalog_rings):
    # y -> [x, y] is an additive homomorphism with kernel the centralizer
    for ring in catalog_rings:
        if ring.order > 32:
            continue
        for x in ring.elements:
            for y in ring.elements:
                for z in ring.elements:
                    assert ring.commutator(x, ring.add(y, z)) == ring.add(
                        ring.commutator(x, y), ring.commutator(x, z)
                    )


# -- solution sets -----------------------------------------------------------------

def test_solution_set_e4(e4):
    sol = solution_set(e4, A, AB)
    assert sol is not None
    assert sol.members == ((0, 1), (1, 1))
    assert len(sol) == len(centralizer(e4, A))
    assert solution_set(e4, A, A) is None


def test_solution_set_zero_target_is_centralizer(catalog_rings):
    for ring in catalog_rings:
        for x in ring.elements:
            sol = solution_set(ring, x, ring.zero)
            assert sol is not None
            assert sol.members == centralizer(ring, x).members


def test_solution_set_structure(catalog_rings):
    for ring in catalog_rings:
        for x in ring.elements:
            image = commutator_image(ring, x)
            cent = centralizer(ring, x)
            for r in ring.elements:
                sol = solution_set(ring, x, r)
                brute = sorted(y for y in ring.elements if ring.commutator(x, y) == r)
                if r not in image:
                    assert sol is None and not brute
                    continue
                assert sol is not None
                assert list(sol.members) == brute
                assert len(sol) == len(cent)
                # the solutions are exactly one centralizer coset
                assert sol == Coset(brute[0], cent)


# -- probabilities ------------------------------------------------------------------

def test_pr_bruteforce_e4_hand_values(e4):
    # 10 of the 16 ordered pairs commute
    assert pr_bruteforce(e4, e4.zero) == Fraction(5, 8)
    assert pr_bruteforce(e4, AB) == Fraction(3, 8)
    assert pr_bruteforce(e4, A) == 0
    assert pr_bruteforce(e4, B) == 0


def test_pr_bruteforce_commutative(zero5, cyclic6):
    assert pr_bruteforce(zero5, zero5.zero) == 1
    assert pr_bruteforce(cyclic6, cyclic6.zero) == 1


def test_pr_formula_restricted_sum_e4(e4):
    # only the three non-central elements admit the nonzero target
    assert pr_formula(e4, AB) == Fraction(2 + 2 + 2, 16)
    assert pr_formula(e4, e4.zero) == Fraction(4 + 2 + 2 + 2, 16)
    assert pr_formula(e4, A) == 0


def test_formula_equals_bruteforce_on_catalog(catalog_rings, e4_x_tri22):
    for ring in list(catalog_rings) + [e4_x_tri22]:
        for r in ring.elements:
            assert pr_formula(ring, r) == pr_bruteforce(ring, r)


def test_spectrum_e4(e4):
    sp = pr_spectrum(e4)
    assert sp == {
        (0, 0): Fraction(5, 8),
        (0, 1): Fraction(0),
        (1, 0): Fraction(0),
        (1, 1): Fraction(3, 8),
    }


def test_spectrum_zero_ring(zero5):
    sp = pr_spectrum(zero5)
    assert sp[(0,)] == 1
    assert all(v == 0 for r, v in sp.items() if r != (0,))


def test_spectrum_properties(catalog_rings, e4_x_tri22):
    for ring in list(catalog_rings) + [e4_x_tri22]:
        sp = pr_spectrum(ring)
        assert sum(sp.values()) == 1
        assert sp == pr_spectrum_bruteforce(ring)
        realized = commutator_subgroup(ring)
        for r, v in sp.items():
            assert v >= 0
            if v > 0:
                assert r in realized  # support sits inside the closure


def test_probabilities_are_reduced_fractions(catalog_rings):
    for ring in catalog_rings:
        for r in ring.elements:
            v = pr_bruteforce(ring, r)
            assert 0 <= v <= 1
            assert v.denominator > 0  # Fraction keeps gcd(num, den) = 1


def test_negation_symmetry(catalog_rings, e4_x_tri22):
    for ring in list(catalog_rings) + [e4_x_tri22]:
        sp = pr_spectrum(ring)
        for r in ring.elements:
            assert sp[r] == sp[ring.neg(r)]


def test_product_probabilities_factor(e4, tri22, e4_x_tri22):
    sp1, sp2 = pr_spectrum(e4), pr_spectrum(tri22)
    spp = pr_spectrum(e4_x_tri22)
    for r1 in e4.elements:
        for r2 in tri22.elements:
            assert spp[r1 + r2] == sp1[r1] * sp2[r2]
    assert spp[(0, 0, 0, 0, 0)] == Fraction(5, 8) * Fraction(5, 8)


def test_dominance_equality_only_at_zero(noncommutative_rings):
    for ring in noncommutative_rings:
        pr0 = pr_bruteforce(ring, ring.zero)
        for r in ring.elements:
            v = pr_bruteforce(ring, r)
            assert v <= pr0
            assert (v == pr0) == (r == ring.zero)


# -- bounds -------------------------------------------------------------------------

def test_smallest_prime_divisor():
    assert smallest_prime_divisor(8) == 2
    assert smallest_prime_divisor(27) == 3
    assert smallest_prime_divisor(35) == 5
    assert smallest_prime_divisor(13) == 13


def test_bounds_e4_nonzero_target(e4):
    report = check_bounds(e4, AB)
    lower, dominance, upper = report.checks
    assert (lower.status, lower.lhs, lower.rhs) == ("pass", Fraction(3, 8), Fraction(3, 16))
    assert (dominance.status, dominance.lhs, dominance.rhs) == (
        "pass", Fraction(3, 8), Fraction(5, 8))
    assert (upper.status, upper.lhs, upper.rhs) == ("pass", Fraction(3, 8), Fraction(3, 8))
    assert upper.note == "attained"
    assert report.passed


def test_bounds_zero_target(e4, zero5):
    for ring in (e4, zero5):
        report = check_bounds(ring, ring.zero)
        lower, dominance, upper = report.checks
        assert lower.status == "skipped"
        assert upper.status == "skipped"
        assert dominance.status == "pass"
        assert dominance.lhs == dominance.rhs


def test_bounds_unrealized_target_is_gated(e4):
    report = check_bounds(e4, A)
    lower = report.checks[0]
    assert lower.status == "skipped"
    assert "not a realized commutator" in lower.note
    assert report.passed


def test_bound_preconditions_raise(e4, zero5):
    with pytest.raises(CommutativeRingError):
        check_lower_bound(zero5, (1,))
    with pytest.raises(CommutativeRingError):
        check_prime_upper_bound(zero5, (1,))
    with pytest.raises(ZeroTargetError):
        check_lower_bound(e4, e4.zero)
    with pytest.raises(ZeroTargetError):
        check_prime_upper_bound(e4, e4.zero)
    assert check_dominance(zero5, (2,)).status == "pass"


def test_lower_bound_on_realized_targets(noncommutative_rings):
    for ring in noncommutative_rings:
        index = ring.order // len(center(ring))
        for r in ring.elements:
            if r == ring.zero:
                continue
            pr = pr_bruteforce(ring, r)
            if pr > 0:
                assert pr >= Fraction(3, index * index)


def test_prime_upper_bound_all_nonzero(noncommutative_rings):
    for ring in noncommutative_rings:
        p = smallest_prime_divisor(ring.order)
        bound = Fraction(ring.order - len(center(ring)), p * ring.order)
        assert bound < Fraction(1, p)
        for r in ring.elements:
            if r != ring.zero:
                assert pr_bruteforce(ring, r) <= bound


# -- randomized presentations ------------------------------------------------------

@pytest.fixture(scope="module")
def random_corpus():
    return random_rings(20260810, 20)


def test_random_corpus_is_deterministic(random_corpus):
    again = random_rings(20260810, 20)
    assert [(r.moduli, r.constants) for r in again] == [
        (r.moduli, r.constants) for r in random_corpus
    ]


def test_random_corpus_formula_equals_bruteforce(random_corpus):
    for ring in random_corpus:
        assert ring.order <= 64
        assert pr_spectrum(ring) == pr_spectrum_bruteforce(ring)
        for r in ring.elements:
            assert pr_formula(ring, r) == pr_bruteforce(ring, r)


def test_random_corpus_coset_structure(random_corpus):
    for ring in random_corpus:
        for x in ring.elements:
            image = commutator_image(ring, x)
            cent = centralizer(ring, x)
            assert len(image) * len(cent) == ring.order
            for r in ring.elements:
                sol = solution_set(ring, x, r)
                if r not in image:
                    assert sol is None
                else:
                    assert sol is not None and len(sol) == len(cent)


def test_random_corpus_negation_symmetry(random_corpus):
    for ring in random_corpus:
        sp = pr_spectrum_bruteforce(ring)
        for r in ring.elements:
            assert sp[r] == sp[ring.neg(r)]


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_centralizer_is_kernel(data):
    ring = data.draw(st.sampled_from([
        catalog("E4"),
        catalog("triangular", 2, 2),
        catalog("full_matrix", 2, 2),
    ]))
    x = data.draw(st.sampled_from(ring.elements))
    y = data.draw(st.sampled_from(ring.elements))
    in_kernel = ring.commutator(x, y) == ring.zero
    assert (y in centralizer(ring, x)) == in_kernel
