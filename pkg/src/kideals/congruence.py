"""Congruences on finite semirings.

A congruence is stored as a tuple of class labels numbered by first
appearance, so two congruences are equal exactly when their label tuples are.

Conventions: prime, k-maximal, irreducible and excellent-irreducible
congruences are all required to be proper (different from ``S × S``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .core import Budget, FiniteSemiring, _budget, bits, is_additively_idempotent, mask_of
from .errors import ContractViolation, NotApplicableError
from .ideals import (
    _ideal_arg,
    enumerate_ideal_masks,
    k_ideal_masks,
    k_maximal_masks,
    k_witness,
    kclosure_mask,
    saturation_mask,
)
from .classify import k_irreducible_masks, prime_witness


def canonical_labels(labels: Iterable[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(v, len(seen)) for v in labels)


def _compatible(S: FiniteSemiring, lab: np.ndarray) -> Optional[tuple]:
    """None if ``lab`` is compatible with both operations, else a witness (x, y, z)."""
    rep = np.zeros(lab.max() + 1, dtype=np.int64)
    for x in range(S.size - 1, -1, -1):
        rep[lab[x]] = x
    r = rep[lab]
    for table in (S.add, S.mul):
        L = lab[table]
        bad = L != L[r]
        if bad.any():
            x, z = (int(v) for v in np.argwhere(bad)[0])
            return (int(r[x]), x, z)
    return None


@dataclass(frozen=True, eq=False)
class Congruence:
    semiring: FiniteSemiring
    labels: tuple[int, ...]

    def __post_init__(self):
        S = self.semiring
        if len(self.labels) != S.size:
            raise ContractViolation("label array must cover the carrier")
        object.__setattr__(self, "labels", canonical_labels(self.labels))
        w = _compatible(S, np.asarray(self.labels))
        if w is not None:
            raise ContractViolation(f"partition is not compatible with the operations at {w}")

    def __eq__(self, other):
        return isinstance(other, Congruence) and other.semiring is self.semiring and other.labels == self.labels

    def __hash__(self):
        return hash((id(self.semiring), self.labels))

    def related(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    @property
    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.labels) + 1)]
        for x, c in enumerate(self.labels):
            out[c].append(x)
        return out

    @property
    def is_total(self) -> bool:
        return max(self.labels) == 0

    @property
    def is_identity(self) -> bool:
        return max(self.labels) == self.semiring.size - 1

    def class_mask(self, x: int) -> int:
        c = self.labels[x]
        return mask_of(y for y, d in enumerate(self.labels) if d == c)

    @property
    def zero_class(self) -> int:
        return self.class_mask(self.semiring.zero)

    def __le__(self, other: "Congruence") -> bool:
        """Refinement: every pair related here is related in ``other``."""
        seen: dict[int, int] = {}
        for a, b in zip(self.labels, other.labels):
            if seen.setdefault(a, b) != b:
                return False
        return True

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence(self.semiring, canonical_labels(zip(self.labels, other.labels)))

    def join(self, other: "Congruence") -> "Congruence":
        return generated_congruence(self.semiring, _pairs_of(self) + _pairs_of(other))

    def to_list(self) -> list[int]:
        return list(self.labels)


def _pairs_of(c: Congruence) -> list[tuple[int, int]]:
    first: dict[int, int] = {}
    out = []
    for x, lab in enumerate(c.labels):
        if lab in first:
            out.append((first[lab], x))
        else:
            first[lab] = x
    return out


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.p[rb] = ra
        return True

    def labels(self):
        return canonical_labels(self.find(x) for x in range(len(self.p)))


def generated_congruence(S: FiniteSemiring, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence relating every given pair."""
    uf = _UnionFind(S.size)
    for a, b in pairs:
        uf.union(a, b)
    A, M = S.A, S.M
    changed = True
    while changed:
        changed = False
        for x in S.elements:
            r = uf.find(x)
            if r == x:
                continue
            ax, ar, mx, mr = A[x], A[r], M[x], M[r]
            for z in S.elements:
                changed |= uf.union(ax[z], ar[z])
                changed |= uf.union(mx[z], mr[z])
    return Congruence(S, uf.labels())


def identity_congruence(S: FiniteSemiring) -> Congruence:
    return Congruence(S, tuple(S.elements))


def total_congruence(S: FiniteSemiring) -> Congruence:
    return Congruence(S, (0,) * S.size)


def _relation_congruence(S: FiniteSemiring, related) -> Congruence:
    uf = _UnionFind(S.size)
    for x in S.elements:
        for y in range(x + 1, S.size):
            if related(x, y):
                uf.union(x, y)
    labels = uf.labels()
    # the defining relation must already be transitive
    for x in S.elements:
        for y in range(x + 1, S.size):
            if (labels[x] == labels[y]) != bool(related(x, y)):
                raise AssertionError(f"relation is not transitive at ({x}, {y})")
    return Congruence(S, labels)


def bourne_mask_labels(S: FiniteSemiring, I: int) -> tuple[int, ...]:
    """Bourne classes of ``I``: x ~ y iff x + i1 = y + i2 for some i1, i2 in I."""
    def build():
        shifts = [mask_of(S.A[x][i] for i in bits(I)) for x in S.elements]
        return _relation_congruence(S, lambda x, y: shifts[x] & shifts[y]).labels
    return S.cached(("bourne", I), build)


def bourne_congruence(S: FiniteSemiring, I) -> Congruence:
    """``K_I``."""
    m = _ideal_arg(S, I)
    return Congruence(S, bourne_mask_labels(S, m))


def excellent_congruence(S: FiniteSemiring, J) -> Congruence:
    """``ρ_J``: x ~ y iff x + z = y + z for some z in J."""
    if not is_additively_idempotent(S):
        raise NotApplicableError(f"{S.name}: excellent congruences need idempotent addition")
    m = _ideal_arg(S, J)
    return Congruence(S, excellent_mask_labels(S, m))


def excellent_mask_labels(S: FiniteSemiring, J: int) -> tuple[int, ...]:
    def build():
        zs = bits(J)
        return _relation_congruence(S, lambda x, y: any(S.A[x][z] == S.A[y][z] for z in zs)).labels
    return S.cached(("excellent", J), build)


def enumerate_congruences(S: FiniteSemiring, budget: Budget | None = None) -> list[Congruence]:
    """All congruences, sorted by label tuple.

    Every congruence is a join of principal congruences, so closing the set
    of principal congruences under joins reaches all of them.
    """
    key = "congruences"
    if key not in S._cache:
        budget = _budget(budget)
        principal = {generated_congruence(S, [(a, b)]) for a in S.elements for b in range(a + 1, S.size)}
        principal = sorted(principal, key=lambda c: c.labels)
        start = identity_congruence(S)
        seen = {start.labels: start}
        frontier = [start]
        while frontier:
            nxt = []
            for c in frontier:
                for p in principal:
                    if p <= c:
                        continue
                    budget.spend(S.size * S.size, "congruence enumeration")
                    j = c.join(p)
                    if j.labels not in seen:
                        seen[j.labels] = j
                        nxt.append(j)
            frontier = nxt
        S._cache[key] = tuple(seen[k] for k in sorted(seen))
    return list(S._cache[key])


def _set_partitions(n: int):
    """Restricted growth strings of length n."""
    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            yield from rec(prefix + [v], max(top, v))
    if n == 0:
        yield ()
        return
    yield from rec([0], 0)


def enumerate_congruences_bruteforce(S: FiniteSemiring) -> list[Congruence]:
    """Cross-check oracle: scan every set partition (limited to 8 elements)."""
    if S.size > 8:
        raise NotApplicableError("partition scan is limited to 8 elements")
    out = [Congruence(S, p) for p in _set_partitions(S.size)
           if _compatible(S, np.asarray(p)) is None]
    return sorted(out, key=lambda c: c.labels)


# ---------------------------------------------------------------------------
# classes of congruences


def k_congruence_table(S: FiniteSemiring) -> dict[tuple, int]:
    """Label tuple of each k-congruence mapped to its (unique) k-ideal."""
    def build():
        table: dict[tuple, int] = {}
        for I in k_ideal_masks(S):
            table.setdefault(bourne_mask_labels(S, I), I)
        return table
    return S.cached("k_congruences", build)


def excellent_table(S: FiniteSemiring) -> dict[tuple, int]:
    """Label tuple of each excellent congruence mapped to the least ideal inducing it."""
    def build():
        table: dict[tuple, int] = {}
        for J in enumerate_ideal_masks(S):
            table.setdefault(excellent_mask_labels(S, J), J)
        return table
    return S.cached("excellent_congruences", build)


def _is_prime_labels(S: FiniteSemiring, lab) -> bool:
    if max(lab) == 0:
        return False
    z = lab[S.zero]
    for a in S.elements:
        if lab[a] == z:
            continue
        for b in S.elements:
            if lab[b] != z and lab[S.M[a][b]] == z:
                return False
    return True


def _meet_labels(a, b):
    return canonical_labels(zip(a, b))


def _refines(a, b) -> bool:
    seen: dict = {}
    return all(seen.setdefault(x, y) == y for x, y in zip(a, b))


def _irreducible_in(lab, family) -> bool:
    if max(lab) == 0 or lab not in family:
        return False
    fam = list(family)
    for r1, r2 in itertools.combinations_with_replacement(fam, 2):
        if r1 != lab and r2 != lab and _meet_labels(r1, r2) == lab:
            return False
    return True


def _k_maximal_labels(S, lab) -> bool:
    table = k_congruence_table(S)
    if lab not in table or max(lab) == 0:
        return False
    return not any(o != lab and max(o) > 0 and _refines(lab, o) for o in table)


@dataclass(frozen=True)
class CongruenceProfile:
    labels: tuple[int, ...]
    is_k_congruence: bool
    k_ideal: Optional[tuple[int, ...]]
    is_prime: bool
    is_k_maximal: bool
    is_irreducible: bool
    is_excellent: Optional[bool]
    excellent_ideal: Optional[tuple[int, ...]]
    is_excellent_irreducible: Optional[bool]

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["labels"] = list(self.labels)
        for k in ("k_ideal", "excellent_ideal"):
            if d[k] is not None:
                d[k] = list(d[k])
        return d


def congruence_profile(S: FiniteSemiring, theta: Congruence) -> CongruenceProfile:
    if theta.semiring is not S:
        raise ContractViolation("congruence belongs to a different semiring")
    lab = theta.labels
    table = k_congruence_table(S)
    kI = table.get(lab)
    idem = is_additively_idempotent(S)
    if idem:
        ex = excellent_table(S)
        eJ = ex.get(lab)
        is_ex: Optional[bool] = eJ is not None
        ex_irr: Optional[bool] = _irreducible_in(lab, ex)
    else:
        eJ, is_ex, ex_irr = None, None, None
    return CongruenceProfile(
        labels=lab,
        is_k_congruence=kI is not None,
        k_ideal=tuple(bits(kI)) if kI is not None else None,
        is_prime=_is_prime_labels(S, lab),
        is_k_maximal=_k_maximal_labels(S, lab),
        is_irreducible=_irreducible_in(lab, table),
        is_excellent=is_ex,
        excellent_ideal=tuple(bits(eJ)) if eJ is not None else None,
        is_excellent_irreducible=ex_irr,
    )


def is_saturated(S: FiniteSemiring, J) -> bool:
    if not is_additively_idempotent(S):
        raise NotApplicableError(f"{S.name}: saturation needs idempotent addition")
    m = _ideal_arg(S, J)
    return saturation_mask(S, m) == m


def absolutely_prime_witness(S: FiniteSemiring, I: int):
    """None when ``(ab) ρ_I (ac)`` always forces ``a ∈ Ī`` or ``b ρ_I c``."""
    lab = excellent_mask_labels(S, I)
    bar = saturation_mask(S, I)
    M = S.M
    for a in S.elements:
        if bar >> a & 1:
            continue
        row = M[a]
        for b in S.elements:
            for c in range(b + 1, S.size):
                if lab[row[b]] == lab[row[c]] and lab[b] != lab[c]:
                    return (a, b, c)
    return None


def is_absolutely_k_prime(S: FiniteSemiring, I) -> bool:
    """k-ideal, proper, and absolutely prime with respect to ``ρ_I``."""
    if not is_additively_idempotent(S):
        raise NotApplicableError(f"{S.name}: absolute primeness needs idempotent addition")
    m = _ideal_arg(S, I)
    if m == S.full:
        raise ContractViolation("absolutely prime ideals are proper by definition")
    return k_witness(S, m) is None and absolutely_prime_witness(S, m) is None


# ---------------------------------------------------------------------------
# theorem checks


def congruence_theorems_check(S: FiniteSemiring, budget: Budget | None = None) -> dict:
    """Findings for each congruence theorem on ``S``; empty lists mean it holds.

    ``kmax-congruence-kprime`` is checked on every semiring, the rest only
    when addition is idempotent (otherwise they are absent from the result).
    ``converse-observations`` lists k-ideals I with ``K_I`` irreducible but
    I not k-irreducible; it records observations and asserts nothing.
    """
    enumerate_ideal_masks(S, budget)
    table = k_congruence_table(S)
    kmax = set(k_maximal_masks(S))
    kirr = set(k_irreducible_masks(S))
    out: dict[str, list] = {}

    out["kmax-congruence-kprime"] = [
        ("k-maximal-not-prime", list(lab)) for lab in table
        if _k_maximal_labels(S, lab) and not _is_prime_labels(S, lab)
    ]
    corr = []
    for lab, I in table.items():
        if kclosure_mask(S, I) != I or _zero_class(S, lab) != I:
            corr.append(("zero-class", bits(I)))
    if len(table) != len(k_ideal_masks(S)):
        corr.append(("not-injective", len(table), len(k_ideal_masks(S))))
    out["kcongruence-correspondence"] = corr
    if not is_additively_idempotent(S):
        return out

    out["kmax-ideal-iff-kmax-congruence"] = [
        ("mismatch", bits(I)) for I in k_ideal_masks(S)
        if _k_maximal_labels(S, bourne_mask_labels(S, I)) != (I in kmax)
    ]
    out["kprime-congruence-irreducible"] = [
        ("prime-not-irreducible", list(lab)) for lab in table
        if _is_prime_labels(S, lab) and not _irreducible_in(lab, table)
    ]
    out["kirreducible-ideal-congruence"] = [
        ("congruence-reducible", bits(I)) for I in kirr
        if not _irreducible_in(bourne_mask_labels(S, I), table)
    ]
    ex = excellent_table(S)
    out["excellent-irreducible"] = [
        ("not-excellent-irreducible", bits(J)) for J in enumerate_ideal_masks(S)
        if saturation_mask(S, J) in kirr and not _irreducible_in(excellent_mask_labels(S, J), ex)
    ]
    out["excellent-equals-bourne"] = [
        ("differ", bits(J)) for J in enumerate_ideal_masks(S)
        if excellent_mask_labels(S, J) != bourne_mask_labels(S, J)
    ]
    out["converse-observations"] = [
        bits(I) for I in k_ideal_masks(S)
        if _irreducible_in(bourne_mask_labels(S, I), table) and I not in kirr
    ]
    return out


def _zero_class(S, lab) -> int:
    z = lab[S.zero]
    return mask_of(x for x, v in enumerate(lab) if v == z)


def absolute_sandwich_findings(S: FiniteSemiring) -> list:
    """k-maximal ⇒ absolutely k-prime ⇒ k-prime, over all proper k-ideals."""
    kmax = set(k_maximal_masks(S))
    out = []
    for I in k_ideal_masks(S):
        if I == S.full:
            continue
        absolute = absolutely_prime_witness(S, I) is None
        kprime = prime_witness(S, I) is None
        if I in kmax and not absolute:
            out.append(("k-maximal-not-absolute", bits(I), absolutely_prime_witness(S, I)))
        if absolute and not kprime:
            out.append(("absolute-not-k-prime", bits(I)))
    return out
