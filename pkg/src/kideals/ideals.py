"""Ideal algebra over a finite semiring.

Ideals are handled as bitsets internally.  The public functions accept either
an :class:`IdealSet` or a raw ``int`` bitmask wherever an ideal is expected,
and return :class:`IdealSet` values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import Budget, FiniteSemiring, _budget, bits, is_additively_idempotent, mask_of
from .errors import ContractViolation, NotApplicableError

# ---------------------------------------------------------------------------
# mask level primitives


def as_mask(S: FiniteSemiring, I) -> int:
    if isinstance(I, (IdealSet, MultSet)):
        if I.semiring is not S:
            raise ContractViolation("ideal belongs to a different semiring")
        return I.mask
    if isinstance(I, int):
        if I < 0 or I >> S.size:
            raise ContractViolation(f"bitmask {I:#x} exceeds the carrier")
        return I
    elems = list(I)
    if any(not 0 <= x < S.size for x in elems):
        raise ContractViolation(f"elements {elems} not all in the carrier")
    return mask_of(elems)


def add_closure(S: FiniteSemiring, mask: int) -> int:
    A = S.A
    while True:
        els = bits(mask)
        new = mask
        for i, x in enumerate(els):
            row = A[x]
            for y in els[i:]:
                new |= 1 << row[y]
        if new == mask:
            return mask
        mask = new


def gen_mask(S: FiniteSemiring, gens: int) -> int:
    """Least ideal containing ``gens``."""
    m = 1 << S.zero
    for g in bits(gens):
        m |= S.multiples(g)
    return add_closure(S, m)


def principal_mask(S: FiniteSemiring, x: int) -> int:
    table = S.cached("principal", lambda: tuple(gen_mask(S, 1 << y) for y in S.elements))
    return table[x]


def is_ideal_mask(S: FiniteSemiring, mask: int) -> bool:
    if not mask >> S.zero & 1:
        return False
    els = bits(mask)
    for x in els:
        if S.multiples(x) & ~mask:
            return False
        row = S.A[x]
        for y in els:
            if not mask >> row[y] & 1:
                return False
    return True


def is_k_mask(S: FiniteSemiring, mask: int) -> bool:
    """Subtractive: x+y in I and y in I force x in I (ideal-ness assumed)."""
    return k_witness(S, mask) is None


def k_witness(S: FiniteSemiring, mask: int):
    inside = bits(mask)
    for x in S.elements:
        if mask >> x & 1:
            continue
        row = S.A[x]
        for y in inside:
            if mask >> row[y] & 1:
                return (x, y)
    return None


def strong_witness(S: FiniteSemiring, mask: int):
    for a in S.elements:
        row = S.A[a]
        for b in S.elements:
            if mask >> row[b] & 1 and not (mask >> a & 1 and mask >> b & 1):
                return (a, b)
    return None


def kclosure_mask(S: FiniteSemiring, mask: int) -> int:
    inside = bits(mask)
    return mask_of(s for s in S.elements if any(mask >> S.A[s][x] & 1 for x in inside))


def saturation_mask(S: FiniteSemiring, mask: int) -> int:
    inside = bits(mask)
    return mask_of(x for x in S.elements if any(S.A[x][z] == z for z in inside))


def sum_mask(S: FiniteSemiring, I: int, J: int) -> int:
    memo = S.cached("sum_memo", dict)
    key = (I, J) if I <= J else (J, I)
    r = memo.get(key)
    if r is None:
        A = S.A
        jj = bits(J)
        m = 0
        for i in bits(I):
            row = A[i]
            for j in jj:
                m |= 1 << row[j]
        r = memo[key] = gen_mask(S, m)
    return r


def product_mask(S: FiniteSemiring, I: int, J: int) -> int:
    memo = S.cached("prod_memo", dict)
    key = (I, J) if I <= J else (J, I)
    r = memo.get(key)
    if r is None:
        M = S.M
        jj = bits(J)
        m = 0
        for i in bits(I):
            row = M[i]
            for j in jj:
                m |= 1 << row[j]
        r = memo[key] = gen_mask(S, m)
    return r


def colon_mask(S: FiniteSemiring, I: int, J: int) -> int:
    """``(I : J) = {s | sJ ⊆ I}``."""
    jj = bits(J)
    return mask_of(s for s in S.elements if all(I >> S.M[s][j] & 1 for j in jj))


def colon_element_mask(S: FiniteSemiring, I: int, s: int) -> int:
    """``(I : s) = {x | xs ∈ I}``."""
    return mask_of(x for x in S.elements if I >> S.M[x][s] & 1)


def prime_witness(S: FiniteSemiring, mask: int):
    """Element-wise primeness; ``(one,)`` signals an improper ideal."""
    if mask >> S.one & 1:
        return (S.one,)
    for a in S.elements:
        if mask >> a & 1:
            continue
        row = S.M[a]
        for b in range(a, S.size):
            if not mask >> b & 1 and mask >> row[b] & 1:
                return (a, b)
    return None


def enumerate_ideal_masks(S: FiniteSemiring, budget: Budget | None = None) -> tuple[int, ...]:
    """All ideals, sorted by bitset value.

    Breadth-first closure: every ideal of a finite semiring is reached from
    the zero ideal by repeatedly adjoining one element and regenerating.
    """
    if "ideals" in S._cache:
        return S._cache["ideals"]
    budget = _budget(budget)
    start = 1 << S.zero
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for I in frontier:
            for x in S.elements:
                if I >> x & 1:
                    continue
                budget.spend(S.size, "ideal enumeration")
                J = sum_mask(S, I, principal_mask(S, x))
                if J not in seen:
                    seen.add(J)
                    nxt.append(J)
        frontier = nxt
    out = S._cache["ideals"] = tuple(sorted(seen))
    return out


def enumerate_ideal_masks_exhaustive(S: FiniteSemiring, budget: Budget | None = None) -> tuple[int, ...]:
    """Cross-check oracle: test every subset that contains zero."""
    if S.size > 20:
        raise NotApplicableError("exhaustive subset scan is limited to 20 elements")
    budget = _budget(budget)
    others = [x for x in S.elements if x != S.zero]
    out = []
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            budget.spend(1, "subset scan")
            m = mask_of(combo) | 1 << S.zero
            if is_ideal_mask(S, m):
                out.append(m)
    return tuple(sorted(out))


def k_ideal_masks(S: FiniteSemiring) -> tuple[int, ...]:
    return S.cached("k_ideals", lambda: tuple(m for m in enumerate_ideal_masks(S) if is_k_mask(S, m)))


def k_prime_masks(S: FiniteSemiring) -> tuple[int, ...]:
    """Spec_k(S): proper k-ideals that are prime element-wise."""
    return S.cached("k_primes", lambda: tuple(m for m in k_ideal_masks(S) if prime_witness(S, m) is None))


def k_maximal_masks(S: FiniteSemiring) -> tuple[int, ...]:
    def build():
        proper = [m for m in k_ideal_masks(S) if m != S.full]
        return tuple(m for m in proper if not any(o != m and o & m == m for o in proper))
    return S.cached("k_maximal", build)


def radical_mask(S: FiniteSemiring, I: int) -> int:
    """Intersection of the k-primes above ``I``; the full carrier if there are none."""
    r = S.full
    for P in k_prime_masks(S):
        if P & I == I:
            r &= P
    return r


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class IdealSet:
    """An ideal of ``semiring`` stored as a bitset."""

    semiring: FiniteSemiring
    mask: int

    def __post_init__(self):
        if not is_ideal_mask(self.semiring, self.mask):
            raise ContractViolation(f"{self.members} is not an ideal of {self.semiring.name}")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.members)

    def __le__(self, other: "IdealSet") -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "IdealSet") -> bool:
        return self <= other and self.mask != other.mask

    @property
    def is_proper(self) -> bool:
        return self.mask != self.semiring.full

    def __repr__(self):
        return f"IdealSet({self.semiring.name}, {list(self.members)})"


@dataclass(frozen=True)
class MultSet:
    """Multiplicatively closed subset containing one."""

    semiring: FiniteSemiring
    mask: int

    def __post_init__(self):
        S = self.semiring
        if not self.mask >> S.one & 1:
            raise ContractViolation("multiplicative sets must contain one")
        els = bits(self.mask)
        for a in els:
            for b in els:
                if not self.mask >> S.M[a][b] & 1:
                    raise ContractViolation(f"{els} is not closed under multiplication ({a}*{b})")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __repr__(self):
        return f"MultSet({self.semiring.name}, {list(self.members)})"


def mult_set(S: FiniteSemiring, elements: Iterable[int]) -> MultSet:
    """Multiplicative closure of ``elements`` together with one."""
    m = mask_of(elements) | 1 << S.one
    while True:
        els = bits(m)
        new = m
        for a in els:
            for b in els:
                new |= 1 << S.M[a][b]
        if new == m:
            return MultSet(S, m)
        m = new


def enumerate_mult_sets(S: FiniteSemiring, include_zero: bool = False) -> list[MultSet]:
    """Every multiplicatively closed subset containing one (and, by default, not zero)."""
    def build():
        others = [x for x in S.elements if x != S.one]
        out = []
        for r in range(len(others) + 1):
            for combo in itertools.combinations(others, r):
                m = mask_of(combo) | 1 << S.one
                els = bits(m)
                if all(m >> S.M[a][b] & 1 for a in els for b in els):
                    out.append(m)
        return tuple(sorted(out))
    masks = S.cached("mult_sets", build)
    return [MultSet(S, m) for m in masks if include_zero or not m >> S.zero & 1]


def _wrap(S: FiniteSemiring, mask: int) -> IdealSet:
    return IdealSet(S, mask)


# ---------------------------------------------------------------------------
# public operations


def generate_ideal(S: FiniteSemiring, gens: Iterable[int] = ()) -> IdealSet:
    return _wrap(S, gen_mask(S, as_mask(S, gens)))


def is_ideal(S: FiniteSemiring, A) -> bool:
    return is_ideal_mask(S, as_mask(S, A))


def is_k_ideal(S: FiniteSemiring, A) -> bool:
    m = as_mask(S, A)
    return is_ideal_mask(S, m) and is_k_mask(S, m)


def is_strong_ideal(S: FiniteSemiring, A) -> bool:
    m = as_mask(S, A)
    return is_ideal_mask(S, m) and strong_witness(S, m) is None


def _ideal_arg(S: FiniteSemiring, I) -> int:
    m = as_mask(S, I)
    if not is_ideal_mask(S, m):
        raise ContractViolation(f"{bits(m)} is not an ideal of {S.name}")
    return m


def _k_ideal_arg(S: FiniteSemiring, I) -> int:
    m = _ideal_arg(S, I)
    if not is_k_mask(S, m):
        raise ContractViolation(f"{bits(m)} is not a k-ideal of {S.name}")
    return m


def k_closure(S: FiniteSemiring, I) -> IdealSet:
    """``C_k(I) = {s | s + x ∈ I for some x ∈ I}``, the least k-ideal above I."""
    return _wrap(S, kclosure_mask(S, _ideal_arg(S, I)))


def saturated_closure(S: FiniteSemiring, J) -> IdealSet:
    """``{x | x + z = z for some z ∈ J}``; idempotent addition only."""
    if not is_additively_idempotent(S):
        raise NotApplicableError(f"{S.name}: saturation needs idempotent addition")
    return _wrap(S, saturation_mask(S, _ideal_arg(S, J)))


def ideal_sum(I: IdealSet, J: IdealSet) -> IdealSet:
    S = _same(I, J)
    return _wrap(S, sum_mask(S, I.mask, J.mask))


def ideal_product(I: IdealSet, J: IdealSet) -> IdealSet:
    S = _same(I, J)
    return _wrap(S, product_mask(S, I.mask, J.mask))


def ideal_intersection(I: IdealSet, J: IdealSet) -> IdealSet:
    S = _same(I, J)
    return _wrap(S, I.mask & J.mask)


def colon_ideal(I: IdealSet, J: IdealSet) -> IdealSet:
    """``(I : J)``.  Use :func:`is_k_ideal` on the result for the k-flag."""
    S = _same(I, J)
    return _wrap(S, colon_mask(S, I.mask, J.mask))


def _same(I: IdealSet, J: IdealSet) -> FiniteSemiring:
    if I.semiring is not J.semiring:
        raise ContractViolation("ideals live in different semirings")
    return I.semiring


def enumerate_ideals(S: FiniteSemiring, budget: Budget | None = None) -> list[IdealSet]:
    return [_wrap(S, m) for m in enumerate_ideal_masks(S, budget)]


def enumerate_k_ideals(S: FiniteSemiring, budget: Budget | None = None) -> list[IdealSet]:
    enumerate_ideal_masks(S, budget)
    return [_wrap(S, m) for m in k_ideal_masks(S)]


def k_radical(S: FiniteSemiring, I) -> IdealSet:
    """Intersection of the k-prime ideals containing the k-ideal ``I``.

    With no such k-prime the empty intersection is taken to be ``S``.
    """
    return _wrap(S, radical_mask(S, _k_ideal_arg(S, I)))


def maximal_k_ideals_disjoint_from(S: FiniteSemiring, T: MultSet) -> list[IdealSet]:
    if T.semiring is not S:
        raise ContractViolation("multiplicative set belongs to a different semiring")
    if T.mask >> S.zero & 1:
        raise ContractViolation("T contains zero, which lies in every ideal")
    return [_wrap(S, m) for m in maximal_disjoint_masks(S, T.mask)]


def maximal_disjoint_masks(S: FiniteSemiring, T: int) -> list[int]:
    cands = [m for m in k_ideal_masks(S) if not m & T]
    return [m for m in cands if not any(o != m and o & m == m for o in cands)]


# ---------------------------------------------------------------------------
# lattice analysis


@dataclass(frozen=True)
class LatticeProfile:
    ideal_count: int
    k_ideal_count: int
    modular: bool
    distributive: bool
    subtractive: bool
    strongly_subtractive: bool
    arithmetic: bool
    principal_criterion: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def lattice_analysis(S: FiniteSemiring, budget: Budget | None = None) -> LatticeProfile:
    """Exhaustive triple scans over the ideal lattice ``(Id(S), +, ∩)``.

    ``distributive`` is decided from ``A∩(B+C) = (A∩B)+(A∩C)`` and
    ``arithmetic`` from the dual ``A+(B∩C) = (A+B)∩(A+C)``, separately.
    """
    def build():
        b = _budget(budget)
        ids = enumerate_ideal_masks(S, b)
        s = lambda x, y: sum_mask(S, x, y)  # noqa: E731
        modular = distributive = arithmetic = True
        for A, B, C in itertools.product(ids, repeat=3):
            b.spend(1, "lattice triples")
            if distributive and A & s(B, C) != s(A & B, A & C):
                distributive = False
            if arithmetic and s(A, B & C) != s(A, B) & s(A, C):
                arithmetic = False
            if modular and A & C == A and s(A, B & C) != s(A, B) & C:
                modular = False
            if not (modular or distributive or arithmetic):
                break
        P = [principal_mask(S, x) for x in S.elements]
        principal = all(
            P[a] & s(P[b], P[c]) == s(P[a] & P[b], P[a] & P[c])
            for a in S.elements for b in S.elements for c in S.elements
        )
        kids = k_ideal_masks(S)
        return LatticeProfile(
            ideal_count=len(ids),
            k_ideal_count=len(kids),
            modular=modular,
            distributive=distributive,
            subtractive=len(kids) == len(ids),
            strongly_subtractive=all(strong_witness(S, m) is None for m in ids),
            arithmetic=arithmetic,
            principal_criterion=principal,
        )
    return S.cached("lattice", build)
