import pytest

from ringprob import (
    OrderOverflow,
    SearchBudgetExceeded,
    WitnessInvalid,
    catalog,
    direct_product,
)
from ringprob.commutators import center, commutator_subgroup
from ringprob.isoclinism import (
    FiniteAbelianGroup,
    IsoclinismWitness,
    find_isoclinism,
    invariant_factors,
    quotient_by_center,
    subgroup_group,
    verify_invariance,
    verify_witness,
)


def group_of_ring_addition(ring):
    return FiniteAbelianGroup(ring.elements, ring.add, ring.neg, ring.zero)


# -- invariant factors -----------------------------------------------------------

def test_invariant_factors_klein():
    group = group_of_ring_addition(catalog("zero_ring", 2))
    assert invariant_factors(group) == (2,)
    klein = FiniteAbelianGroup(
        [(a, b) for a in range(2) for b in range(2)],
        lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2),
        lambda x: ((-x[0]) % 2, (-x[1]) % 2),
        (0, 0),
    )
    assert invariant_factors(klein) == (2, 2)


def test_invariant_factors_cyclic():
    z4 = group_of_ring_addition(catalog("zero_ring", 4))
    assert invariant_factors(z4) == (4,)
    z6 = group_of_ring_addition(catalog("zero_ring", 6))
    assert invariant_factors(z6) == (6,)


def test_invariant_factors_mixed():
    elems = [(a, b) for a in range(2) for b in range(4)]
    group = FiniteAbelianGroup(
        elems,
        lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 4),
        lambda x: ((-x[0]) % 2, (-x[1]) % 4),
        (0, 0),
    )
    assert invariant_factors(group) == (2, 4)


def test_invariant_factors_triangular_addition(tri22):
    assert invariant_factors(group_of_ring_addition(tri22)) == (2, 2, 2)


def test_basis_spans(tri32):
    group = group_of_ring_addition(tri32)
    basis = group.basis()
    assert sorted(f for _, f in basis) == sorted(group.invariant_factors())
    span = {group.zero}
    for g, f in basis:
        span = group.extend_span(frozenset(span), g, f)
        assert span is not None
    assert len(span) == group.order


# -- central quotients -------------------------------------------------------------

def test_quotient_e4(e4):
    q = quotient_by_center(e4)
    assert len(q) == 4
    assert q.as_group().invariant_factors() == (2, 2)


def test_quotient_commutative(zero5):
    assert len(quotient_by_center(zero5)) == 1


def test_quotient_of_null_extension_matches(e4, zero2):
    prod = direct_product(e4, zero2)
    assert len(quotient_by_center(prod)) == 4
    assert (
        quotient_by_center(prod).as_group().invariant_factors()
        == quotient_by_center(e4).as_group().invariant_factors()
    )


def test_quotient_representatives(tri22):
    q = quotient_by_center(tri22)
    assert len(q) == tri22.order // len(center(tri22))
    seen = set()
    for rep in q.reps:
        # canonical rep is minimal in its coset, and cosets do not overlap
        coset = {tri22.add(rep, z) for z in center(tri22)}
        assert rep == min(coset)
        assert not (coset & seen)
        seen |= coset
    assert len(seen) == tri22.order


def test_coset_commutator_well_defined(catalog_rings):
    for ring in catalog_rings:
        if ring.order > 32:
            continue
        z = center(ring)
        for x in ring.elements:
            for y in ring.elements:
                base = ring.commutator(x, y)
                for zx in z:
                    for zy in z:
                        assert ring.commutator(ring.add(x, zx), ring.add(y, zy)) == base


# -- the search ----------------------------------------------------------------------

def test_reflexive_witness(noncommutative_rings, zero2):
    for ring in list(noncommutative_rings) + [zero2]:
        witness = find_isoclinism(ring, ring)
        assert witness is not None
        assert verify_witness(ring, ring, witness)


def test_identity_witness_verifies(e4):
    q = quotient_by_center(e4)
    d = commutator_subgroup(e4)
    identity = IsoclinismWitness(
        alpha={rep: rep for rep in q.reps},
        beta={u: u for u in d.members},
    )
    assert verify_witness(e4, e4, identity)


def test_zero_map_beta_fails(e4):
    q = quotient_by_center(e4)
    d = commutator_subgroup(e4)
    broken = IsoclinismWitness(
        alpha={rep: rep for rep in q.reps},
        beta={u: e4.zero for u in d.members},
    )
    assert not verify_witness(e4, e4, broken)


def test_null_extension_witness_and_invariance(e4, zero2):
    prod = direct_product(e4, zero2)
    witness = find_isoclinism(e4, prod)
    assert witness is not None
    assert verify_witness(e4, prod, witness)
    report = verify_invariance(e4, prod, witness)
    assert report.holds
    assert report.index_left == report.index_right == 4
    assert {(e.source, str(e.lhs)) for e in report.entries} == {
        ((0, 0), "5/8"),
        ((1, 1), "3/8"),
    }


def test_null_extension_with_odd_commutative_factor(e4):
    prod = direct_product(e4, catalog("cyclic_ring", 3))
    witness = find_isoclinism(e4, prod)
    assert witness is not None
    assert verify_invariance(e4, prod, witness).holds


def test_witness_serialization_golden(e4, zero2):
    witness = find_isoclinism(e4, direct_product(e4, zero2))
    assert witness.serialize() == (
        "alpha:\n"
        "0,0 -> 0,0,0\n"
        "0,1 -> 0,1,0\n"
        "1,0 -> 1,0,0\n"
        "1,1 -> 1,1,0\n"
        "beta:\n"
        "0,0 -> 0,0,0\n"
        "1,1 -> 1,1,0\n"
    )


def test_search_is_stable_across_runs(e4, tri22):
    first = find_isoclinism(e4, tri22)
    second = find_isoclinism(e4, tri22)
    assert (first is None) == (second is None)
    if first is not None:
        assert first.alpha == second.alpha
        assert first.beta == second.beta
        assert verify_invariance(e4, tri22, first).holds


def test_search_symmetry(e4, tri22, m22):
    for r1, r2 in [(e4, tri22), (e4, m22), (tri22, m22)]:
        assert (find_isoclinism(r1, r2) is None) == (find_isoclinism(r2, r1) is None)


def test_not_isoclinic_different_commutator_subgroups(e4):
    assert find_isoclinism(e4, catalog("zero_ring", 8)) is None


def test_not_isoclinic_different_quotients(e4, m22):
    # quotient orders 4 vs 8 fail the invariant-factor pre-filter
    assert find_isoclinism(e4, m22) is None


def test_budget_exceeded_is_distinct(e4, zero2):
    prod = direct_product(e4, zero2)
    with pytest.raises(SearchBudgetExceeded):
        find_isoclinism(e4, prod, node_budget=0)


def test_search_gate(e4):
    # quotient of order 256 sits far above the search gate
    big = direct_product(direct_product(e4, e4), direct_product(e4, e4))
    with pytest.raises(OrderOverflow):
        find_isoclinism(big, big)


def test_invariance_rejects_invalid_witness(e4, zero2):
    prod = direct_product(e4, zero2)
    witness = find_isoclinism(e4, prod)
    broken = IsoclinismWitness(alpha=dict(witness.alpha), beta={u: prod.zero for u in witness.beta})
    with pytest.raises(WitnessInvalid):
        verify_invariance(e4, prod, broken)


def test_subgroup_group_factors(e4, m22):
    assert invariant_factors(subgroup_group(commutator_subgroup(e4))) == (2,)
    assert invariant_factors(subgroup_group(commutator_subgroup(m22))) == (2, 2, 2)
