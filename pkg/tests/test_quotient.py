import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from kideals.core import bits, enumerate_homs, identity_hom, is_additively_idempotent
from kideals.errors import ContractViolation
from kideals.ideals import enumerate_mult_sets, k_ideal_masks, k_prime_masks, mult_set
from kideals.quotient import (
    bourne_quotient,
    contract,
    contracted_set,
    extend,
    hom_contraction_findings,
    ideal_of_fractions,
    lift_ideal,
    localisation_theorems_check,
    localize,
    quotient_theorems_check,
    sp_equivalence_sides,
    spectral_map,
)
from strategies import semirings

# sizes of T^-1 S from the pair-scanning reference in tests/oracle.py
FROZEN_LOCALISATIONS = [
    ("N2xN2", [4], 9), ("B1xB1", [1], 2), ("Z6", [2, 4], 3),
    ("Z6", [3], 2), ("C3xN2", [7], 9), ("N6", [2], 2), ("N2", [2], 2),
]


def test_truncated_nat_localisation_is_boolean(by_name):
    N2 = by_name["N2"]
    L = localize(N2, mult_set(N2, [2]))
    assert L.canonical.map == (0, 1, 1)
    assert L.localized.A == ((0, 1), (1, 1)) and L.localized.M == ((0, 0), (0, 1))


@pytest.mark.parametrize("name,gens,size", FROZEN_LOCALISATIONS)
def test_frozen_localisation_sizes(by_name, name, gens, size):
    S = by_name[name]
    T = mult_set(S, gens)
    assert localize(S, T).localized.size == size
    assert oracle.localisation_size(S, T.members) == size


def test_localisation_sizes_match_reference(corpus):
    for S in corpus:
        if S.size > 6:
            continue
        for T in enumerate_mult_sets(S):
            assert localize(S, T).localized.size == oracle.localisation_size(S, T.members), (S.name, T.members)


def test_chain_quotient_is_boolean(by_name):
    Q = bourne_quotient(by_name["C3"], [0, 1])
    assert Q.quotient.size == 2 and Q.labels == (0, 0, 1)
    assert Q.classes == ((0, 1), (2,))
    assert Q.to_dict()["projection"] == [0, 0, 1]


def test_non_k_ideal_quotient_collapses(by_name):
    # the k-closure of {0,2} in N2 is everything, so the quotient is trivial
    Q = bourne_quotient(by_name["N2"], [0, 2])
    assert Q.quotient.size == 1


def test_lift_ideal(by_name):
    C3 = by_name["C3"]
    Q = bourne_quotient(C3, [0])
    assert bits(lift_ideal(Q, [0, 1]).mask) == [Q.labels[0], Q.labels[1]]
    with pytest.raises(ContractViolation):
        lift_ideal(bourne_quotient(C3, [0, 1]), [0])


def test_quotient_theorems_on_corpus(corpus):
    for S in corpus:
        for key, found in quotient_theorems_check(S).items():
            assert found == [], (S.name, key)


def test_localisation_rejects_zero(by_name):
    N2 = by_name["N2"]
    with pytest.raises(ContractViolation):
        localize(N2, mult_set(N2, [0]))
    with pytest.raises(ContractViolation):
        localize(N2, [1])


def test_trivial_localisation_is_isomorphic(by_name):
    S = by_name["C4"]
    L = localize(S, mult_set(S, []))
    assert L.localized.size == S.size and L.canonical.surjective


def test_fractions_and_extension(by_name):
    BB = by_name["B1xB1"]
    L = localize(BB, mult_set(BB, [1]))
    # T = {(0,1), (1,1)} kills the first factor
    assert ideal_of_fractions(L, [0, 2]).mask == 1 << L.localized.zero
    assert extend(L.canonical, [0, 1]).mask == L.localized.full
    assert contract(L.canonical, [L.localized.zero]).members == (0, 2)


def test_contraction_requires_k_ideal(by_name):
    N2 = by_name["N2"]
    with pytest.raises(ContractViolation):
        contract(identity_hom(N2), [0, 2])
    with pytest.raises(ContractViolation):
        extend(identity_hom(N2), [0, 2])


def test_localisation_theorems_on_corpus(corpus):
    for S in corpus:
        if S.size > 6:
            continue
        for T in enumerate_mult_sets(S):
            for key, found in localisation_theorems_check(S, T).items():
                assert found == [], (S.name, T.members, key)


def test_contracted_set_fixed_by_fractions(corpus):
    for S in corpus:
        if S.size > 6:
            continue
        for T in enumerate_mult_sets(S):
            L = localize(S, T)
            for I in contracted_set(L):
                assert I in k_ideal_masks(S)


def test_spectral_map_identity(by_name):
    S = by_name["B1xC3"]
    sm = spectral_map(identity_hom(S))
    assert sm.surjective and sm.injective and not sm.findings
    assert [q for q, _ in sm.table] == list(k_prime_masks(S))


def test_hom_contractions(by_name):
    for a in ("C3", "B1xB1", "N2", "Z4"):
        for b in ("C3", "B1xB1", "C2", "Z2"):
            for h in enumerate_homs(by_name[a], by_name[b]):
                assert hom_contraction_findings(h) == []
                assert spectral_map(h).findings == ()


def test_sp_equivalence(corpus):
    for S in corpus:
        assert len(set(sp_equivalence_sides(S))) == 1, S.name


@given(semirings(max_size=9), st.data())
def test_canonical_map_is_hom(S, data):
    T = data.draw(st.sampled_from(enumerate_mult_sets(S)))
    L = localize(S, T)
    h, R = L.canonical, L.localized
    for x in S.elements:
        for y in S.elements:
            assert h(S.plus(x, y)) == R.plus(h(x), h(y)) and h(S.times(x, y)) == R.times(h(x), h(y))
    for t in T.members:
        assert any(R.times(h(t), u) == R.one for u in R.elements)


@given(semirings(max_size=9))
def test_quotient_by_k_ideal_recovers_it(S):
    for m in k_ideal_masks(S):
        Q = bourne_quotient(S, m)
        assert Q.projection.preimage(1 << Q.quotient.zero) == m
        if is_additively_idempotent(S):
            assert is_additively_idempotent(Q.quotient)
