import pytest
from hypothesis import given

import oracle
from kideals.congruence import (
    Congruence,
    absolute_sandwich_findings,
    bourne_congruence,
    congruence_profile,
    congruence_theorems_check,
    enumerate_congruences,
    enumerate_congruences_bruteforce,
    excellent_congruence,
    generated_congruence,
    identity_congruence,
    is_absolutely_k_prime,
    is_saturated,
    total_congruence,
)
from kideals.core import bits, is_additively_idempotent
from kideals.errors import ContractViolation, NotApplicableError
from kideals.ideals import enumerate_ideal_masks, k_ideal_masks, k_maximal_masks, k_prime_masks, saturation_mask
from strategies import semiring_with_ideal, semirings


def _partition(c):
    return sorted(frozenset(b) for b in c.classes)


def test_chain_has_four_congruences(by_name):
    C3 = by_name["C3"]
    got = sorted(c.labels for c in enumerate_congruences(C3))
    assert got == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2)]


def test_counts_match_partition_scan(corpus):
    for S in corpus:
        if S.size <= 7:
            ours = sorted(_partition(c) for c in enumerate_congruences(S))
            ref = sorted(sorted(P) for P in oracle.congruences(S))
            assert ours == ref, S.name


def test_bruteforce_agrees(corpus):
    for S in corpus:
        if S.size <= 6:
            assert set(enumerate_congruences(S)) == set(enumerate_congruences_bruteforce(S)), S.name


def test_bourne_classes_match_reference(corpus):
    for S in corpus:
        for m in enumerate_ideal_masks(S):
            ours = sorted((frozenset(b) for b in bourne_congruence(S, m).classes), key=min)
            assert ours == oracle.bourne_classes(S, frozenset(bits(m))), (S.name, bits(m))


def test_congruence_value_type(by_name):
    C3 = by_name["C3"]
    assert identity_congruence(C3).is_identity and total_congruence(C3).is_total
    c = generated_congruence(C3, [(0, 1)])
    assert c.labels == (0, 0, 1) and c.related(0, 1) and not c.related(1, 2)
    assert identity_congruence(C3) <= c <= total_congruence(C3)
    assert c.meet(generated_congruence(C3, [(1, 2)])) == identity_congruence(C3)
    assert c.join(generated_congruence(C3, [(1, 2)])).is_total
    with pytest.raises(ContractViolation):
        Congruence(C3, (0, 1, 0))


def test_bourne_zero_class_is_closure(by_name):
    N2 = by_name["N2"]
    assert bourne_congruence(N2, [0, 2]).is_total
    assert bits(bourne_congruence(by_name["C3"], [0, 1]).zero_class) == [0, 1]


def test_excellent_congruence(by_name):
    C3 = by_name["C3"]
    assert excellent_congruence(C3, [0, 1]) == bourne_congruence(C3, [0, 1])
    with pytest.raises(NotApplicableError):
        excellent_congruence(by_name["N2"], [0])


def test_profile(by_name):
    C3 = by_name["C3"]
    p = congruence_profile(C3, bourne_congruence(C3, [0, 1]))
    assert p.is_k_congruence and p.k_ideal == (0, 1) and p.is_prime and p.is_k_maximal
    assert p.is_excellent and p.to_dict()["labels"] == [0, 0, 1]
    q = congruence_profile(by_name["N2"], identity_congruence(by_name["N2"]))
    assert q.is_excellent is None and q.k_ideal == (0,)


def test_saturated_iff_k_ideal(corpus):
    for S in corpus:
        if not is_additively_idempotent(S):
            continue
        kids = set(k_ideal_masks(S))
        for m in enumerate_ideal_masks(S):
            assert is_saturated(S, m) == (m in kids), (S.name, bits(m))
            assert saturation_mask(S, m) & m == m


def test_absolute_examples(by_name):
    C3, BB = by_name["C3"], by_name["B1xB1"]
    assert is_absolutely_k_prime(C3, [0, 1])
    assert is_absolutely_k_prime(BB, [0, 2])
    assert not is_absolutely_k_prime(BB, [0])
    with pytest.raises(ContractViolation):
        is_absolutely_k_prime(C3, [0, 1, 2])


def test_absolute_sandwich_on_corpus(corpus):
    for S in corpus:
        if is_additively_idempotent(S):
            assert absolute_sandwich_findings(S) == [], S.name
            for m in k_maximal_masks(S):
                assert is_absolutely_k_prime(S, m)
            for m in k_ideal_masks(S):
                if m != S.full and is_absolutely_k_prime(S, m):
                    assert m in k_prime_masks(S)


def test_theorems_on_corpus(corpus):
    for S in corpus:
        out = congruence_theorems_check(S)
        for key, found in out.items():
            if key != "converse-observations":
                assert found == [], (S.name, key)
        assert ("excellent-equals-bourne" in out) == is_additively_idempotent(S)


@given(semiring_with_ideal())
def test_bourne_is_congruence_containing_ideal_in_zero_class(case):
    S, I = case
    c = bourne_congruence(S, I)
    z = c.labels[S.zero]
    assert all(c.labels[a] == z for a in bits(I))
    assert Congruence(S, c.labels) == c


@given(semirings(max_size=6))
def test_generated_congruence_is_least(S):
    for c in enumerate_congruences(S):
        pairs = [(x, y) for x in S.elements for y in S.elements if c.related(x, y)]
        assert generated_congruence(S, pairs) == c
