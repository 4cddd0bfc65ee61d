import itertools

import pytest
from hypothesis import given

import oracle
from kideals.core import Budget, bits, make_boolean, mask_of
from kideals.errors import BudgetExceededError, ContractViolation, NotApplicableError
from kideals.ideals import (
    IdealSet,
    colon_ideal,
    enumerate_ideal_masks,
    enumerate_ideal_masks_exhaustive,
    enumerate_ideals,
    enumerate_k_ideals,
    enumerate_mult_sets,
    generate_ideal,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_ideal,
    is_k_ideal,
    is_k_mask,
    is_strong_ideal,
    k_closure,
    k_ideal_masks,
    k_maximal_masks,
    k_prime_masks,
    k_radical,
    kclosure_mask,
    lattice_analysis,
    maximal_k_ideals_disjoint_from,
    mult_set,
    principal_mask,
    product_mask,
    radical_mask,
    saturated_closure,
)
from strategies import semiring_with_ideal, semiring_with_ideals, semirings

# counts of (ideals, k-ideals, k-primes, k-strongly irreducible, k-irreducible,
# k-primary, k-maximal, congruences, multiplicative sets avoiding zero),
# derived with the subset-scanning reference in tests/oracle.py
FROZEN_COUNTS = {
    "N1": (2, 2, 1, 1, 1, 1, 1, 2, 1), "N2": (3, 2, 1, 1, 1, 1, 1, 3, 2),
    "N3": (4, 2, 1, 1, 1, 1, 1, 4, 3), "N4": (6, 2, 1, 1, 1, 1, 1, 5, 5),
    "N5": (8, 2, 1, 1, 1, 1, 1, 6, 7), "N6": (13, 2, 1, 1, 1, 1, 1, 7, 13),
    "C2": (2, 2, 1, 1, 1, 1, 1, 2, 1), "C3": (3, 3, 2, 2, 2, 2, 1, 4, 2),
    "C4": (4, 4, 3, 3, 3, 3, 1, 8, 4), "C5": (5, 5, 4, 4, 4, 4, 1, 16, 8),
    "B1xB1": (4, 4, 2, 2, 2, 2, 2, 4, 3), "B1xC3": (6, 6, 3, 3, 3, 3, 2, 8, 9),
    "B1xN2": (6, 4, 2, 2, 2, 2, 2, 6, 9), "C3xC3": (9, 9, 4, 4, 4, 4, 2, 16, 39),
    "C3xN2": (9, 6, 3, 3, 3, 3, 2, 12, 39), "N2xN2": (9, 4, 2, 2, 2, 2, 2, 9, 39),
    "Z2": (2, 2, 1, 1, 1, 1, 1, 2, 1), "Z3": (2, 2, 1, 1, 1, 1, 1, 2, 2),
    "Z4": (3, 3, 1, 2, 2, 2, 1, 3, 2), "Z6": (4, 4, 2, 2, 2, 2, 2, 4, 7),
    "T1[inf=1]": (2, 2, 1, 1, 1, 1, 1, 2, 1), "T2[inf=2]": (3, 3, 1, 2, 2, 2, 1, 3, 1),
    "T3[inf=3]": (4, 4, 1, 3, 3, 3, 1, 4, 1), "T4[inf=4]": (5, 5, 1, 4, 4, 4, 1, 5, 1),
    "T5[inf=5]": (6, 6, 1, 5, 5, 5, 1, 6, 1),
}


def test_frozen_counts(corpus):
    from kideals.classify import k_irreducible_masks, k_primary_masks, k_si_masks
    from kideals.congruence import enumerate_congruences
    assert sorted(FROZEN_COUNTS) == sorted(S.name for S in corpus)
    for S in corpus:
        got = (len(enumerate_ideal_masks(S)), len(k_ideal_masks(S)), len(k_prime_masks(S)),
               len(k_si_masks(S)), len(k_irreducible_masks(S)), len(k_primary_masks(S)),
               len(k_maximal_masks(S)), len(enumerate_congruences(S)), len(enumerate_mult_sets(S)))
        assert got == FROZEN_COUNTS[S.name], S.name


@pytest.mark.parametrize("name", ["N2", "C3", "B1xB1", "Z4", "T2[inf=2]", "B1xN2"])
def test_ideal_lists_match_reference(by_name, name):
    S = by_name[name]
    assert {frozenset(bits(m)) for m in enumerate_ideal_masks(S)} == set(oracle.ideals(S))
    assert {frozenset(bits(m)) for m in k_ideal_masks(S)} == set(oracle.k_ideals(S))


def test_generate_examples(by_name):
    N2, C3 = by_name["N2"], by_name["C3"]
    assert generate_ideal(N2, [2]).members == (0, 2)
    assert generate_ideal(N2).members == (0,)
    assert generate_ideal(C3, [1]).members == (0, 1)


def test_kness_examples(by_name):
    N2, C3 = by_name["N2"], by_name["C3"]
    assert is_ideal(N2, [0, 2]) and not is_k_ideal(N2, [0, 2])
    assert is_strong_ideal(C3, [0, 1])
    for S in (N2, C3, by_name["B1xB1"]):
        assert is_k_ideal(S, [S.zero])


def test_closure_examples(by_name):
    N2, C3 = by_name["N2"], by_name["C3"]
    assert k_closure(N2, [0, 2]).members == (0, 1, 2)
    assert k_closure(C3, [0, 1]).members == (0, 1)
    with pytest.raises(ContractViolation):
        k_closure(C3, [0, 2])


def test_saturation_examples(by_name):
    C3, BB = by_name["C3"], by_name["B1xB1"]
    assert saturated_closure(C3, [0, 1]).members == (0, 1)
    assert saturated_closure(make_boolean(), [0]).members == (0,)
    # (1,0) is index 2 in B1xB1
    assert saturated_closure(BB, generate_ideal(BB, [2]).members).members == (0, 2)
    with pytest.raises(NotApplicableError):
        saturated_closure(by_name["N2"], [0])


def test_arithmetic_examples(by_name):
    BB, C3, N5 = by_name["B1xB1"], by_name["C3"], by_name["N5"]
    a = generate_ideal(BB, [2])
    b = generate_ideal(BB, [1])
    assert ideal_product(a, b).members == (0,)
    m = generate_ideal(C3, [1])
    assert ideal_intersection(m, m) == m
    two, three = generate_ideal(N5, [2]), generate_ideal(N5, [3])
    expect = {x for x in N5.elements if x in two and x in three}
    assert set(ideal_intersection(two, three).members) == expect == {0, 5}
    assert ideal_sum(a, b).members == tuple(BB.elements) and len(ideal_sum(a, b)) == 4
    with pytest.raises(ContractViolation):
        ideal_sum(a, m)


def test_colon(by_name):
    BB = by_name["B1xB1"]
    a = generate_ideal(BB, [2])
    zero = generate_ideal(BB)
    assert colon_ideal(zero, a).members == (0, 1)


def test_enumeration_examples(by_name):
    B = make_boolean()
    assert [I.members for I in enumerate_ideals(B)] == [(0,), (0, 1)]
    N2 = by_name["N2"]
    assert [I.members for I in enumerate_ideals(N2)] == [(0,), (0, 2), (0, 1, 2)]
    assert [I.members for I in enumerate_k_ideals(N2)] == [(0,), (0, 1, 2)]
    assert len(enumerate_k_ideals(by_name["C3"])) == 3


def test_enumeration_budget(by_name):
    S = by_name["C3xC3"].__class__(by_name["C3xC3"].add, by_name["C3xC3"].mul,
                                    by_name["C3xC3"].zero, by_name["C3xC3"].one, name="fresh")
    with pytest.raises(BudgetExceededError):
        enumerate_ideal_masks(S, Budget(5))


def test_radical_examples(by_name):
    C3, N2 = by_name["C3"], by_name["N2"]
    assert k_radical(C3, [0]).members == (0,)
    assert k_radical(N2, [0]).members == (0,)
    for S in (C3, N2, by_name["B1xC3"]):
        for P in k_prime_masks(S):
            assert radical_mask(S, P) == P
    with pytest.raises(ContractViolation):
        k_radical(N2, [0, 2])


def test_radical_of_whole_is_whole(by_name):
    # no k-prime contains S, so the empty intersection convention gives S back
    S = by_name["Z6"]
    assert k_radical(S, list(S.elements)).members == tuple(S.elements)


def test_lattice_examples(by_name):
    C3, BB, N2 = (lattice_analysis(by_name[n]) for n in ("C3", "B1xB1", "N2"))
    assert C3.strongly_subtractive and C3.distributive
    assert BB.distributive
    assert not N2.subtractive
    assert C3.ideal_count == 3 and N2.k_ideal_count == 2


def test_krull_examples(by_name):
    N2, C3, BB = by_name["N2"], by_name["C3"], by_name["B1xB1"]
    assert [I.members for I in maximal_k_ideals_disjoint_from(N2, mult_set(N2, [1]))] == [(0,)]
    assert [I.members for I in maximal_k_ideals_disjoint_from(C3, mult_set(C3, [2]))] == [(0, 1)]
    got = [I.members for I in maximal_k_ideals_disjoint_from(BB, mult_set(BB, [3]))]
    assert got == [(0, 1), (0, 2)]
    with pytest.raises(ContractViolation):
        maximal_k_ideals_disjoint_from(N2, mult_set(N2, [0]))


def test_mult_set_contains_one(by_name):
    S = by_name["Z6"]
    T = mult_set(S, [])
    assert T.members == (S.one,)
    assert all(S.one in ms.members for ms in enumerate_mult_sets(S))


def test_idealset_value_semantics(by_name):
    S = by_name["C3"]
    a, b = IdealSet(S, 0b011), generate_ideal(S, [1])
    assert a == b and hash(a) == hash(b) and a <= IdealSet(S, 0b111) and a.is_proper
    with pytest.raises(ContractViolation):
        IdealSet(S, 0b101)


def test_enumeration_equals_exhaustive_scan(corpus):
    for S in corpus:
        if S.size <= 6:
            assert enumerate_ideal_masks(S) == enumerate_ideal_masks_exhaustive(S), S.name


# ---------------------------------------------------------------------------
# properties


@given(semiring_with_ideal())
def test_closure_is_least_k_ideal(case):
    S, I = case
    c = kclosure_mask(S, I)
    assert c & I == I and is_k_mask(S, c) and kclosure_mask(S, c) == c
    assert all(c & ~K == 0 for K in k_ideal_masks(S) if K & I == I)
    assert frozenset(bits(c)) == oracle.closure(S, frozenset(bits(I)))


@given(semiring_with_ideals(2))
def test_closure_commutes_with_intersection(case):
    S, I, J = case
    assert kclosure_mask(S, I & J) == kclosure_mask(S, I) & kclosure_mask(S, J)
    if I & J == I:
        assert kclosure_mask(S, I) & ~kclosure_mask(S, J) == 0


@given(semiring_with_ideals(2, k=True))
def test_radical_product_law(case):
    S, I, J = case
    r = radical_mask(S, I) & radical_mask(S, J)
    assert radical_mask(S, product_mask(S, I, J)) == radical_mask(S, I & J) == r


@given(semiring_with_ideals(2))
def test_sum_and_product_are_ideals(case):
    S, I, J = case
    from kideals.ideals import is_ideal_mask, sum_mask
    assert is_ideal_mask(S, sum_mask(S, I, J)) and is_ideal_mask(S, product_mask(S, I, J))
    assert frozenset(bits(product_mask(S, I, J))) == oracle.product(S, frozenset(bits(I)), frozenset(bits(J)))


@given(semirings())
def test_enumeration_matches_reference(S):
    assert {frozenset(bits(m)) for m in enumerate_ideal_masks(S)} == set(oracle.ideals(S))


@given(semirings())
def test_unit_closure_iff_outside_k_maximal(S):
    kmax = k_maximal_masks(S)
    for x in S.elements:
        unit = bool(kclosure_mask(S, principal_mask(S, x)) >> S.one & 1)
        assert unit == (not any(P >> x & 1 for P in kmax))


@given(semirings())
def test_strongly_subtractive_implies_distributive(S):
    L = lattice_analysis(S)
    assert not L.strongly_subtractive or L.distributive
    assert not L.distributive or L.modular


def test_triples_commute_with_closure(corpus):
    for S in corpus:
        ids = enumerate_ideal_masks(S)
        for I, J, K in itertools.combinations(ids, 3):
            lhs = kclosure_mask(S, I & J & K)
            assert lhs == kclosure_mask(S, I) & kclosure_mask(S, J) & kclosure_mask(S, K)


def test_mask_helpers():
    assert bits(mask_of([0, 3])) == [0, 3]
