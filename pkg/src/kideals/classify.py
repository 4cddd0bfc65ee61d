"""Membership of an ideal in each of the classical and subtractive classes.

Plain classes (``prime``, ``irreducible`` ...) follow their usual definitions
over all ideals or elements; the ``k_`` classes are decided independently by
quantifying over k-ideals, so comparing the two sides is a real check.

Conventions: prime, primary, irreducible, strongly irreducible and maximal
(plain and k) are proper by definition; semiprime is not.  Primary uses
exponents ``1 <= n <= |S|`` and that bound is exact for a finite semiring.
A witness ``(one,)`` on a proper-only flag means the ideal is all of S.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .core import Budget, FiniteSemiring, _budget, bits, is_additively_idempotent, natural_order
from .errors import ContractViolation, NotApplicableError
from .ideals import (
    _ideal_arg,
    as_mask,
    colon_mask,
    enumerate_ideal_masks,
    k_ideal_masks,
    k_witness,
    kclosure_mask,
    principal_mask,
    prime_witness,
    product_mask,
    radical_mask,
    strong_witness,
)

FLAGS = (
    "ideal", "k_ideal", "strong", "prime", "semiprime", "primary", "irreducible",
    "strongly_irreducible", "maximal", "k_prime", "k_semiprime", "k_primary",
    "k_irreducible", "k_strongly_irreducible", "k_maximal", "k_cancellation",
)


@dataclass(frozen=True)
class Flag:
    value: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.value


@dataclass(frozen=True)
class ClassProfile:
    semiring: FiniteSemiring
    mask: int
    flags: dict = field(default_factory=dict)
    findings: tuple = ()

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name].value
        raise AttributeError(name)

    def witness(self, name):
        return self.flags[name].witness

    def to_dict(self) -> dict:
        out: dict = {"semiring": self.semiring.name, "members": bits(self.mask)}
        for k in FLAGS:
            f = self.flags[k]
            out[k] = f.value
            if f.witness is not None:
                out[k + "_witness"] = _jsonable(f.witness)
        out["primary_exponent_bound"] = self.semiring.size
        out["exchange_findings"] = [list(x) for x in self.findings]
        return out


def _jsonable(w):
    if isinstance(w, (tuple, list)):
        return [_jsonable(v) for v in w]
    return w


def _members(S, m):
    return bits(m)


# ---------------------------------------------------------------------------
# individual deciders on bitmasks; each returns None (holds) or a witness


def semiprime_witness(S: FiniteSemiring, I: int):
    for a in S.elements:
        if not I >> a & 1 and I >> S.M[a][a] & 1:
            return (a,)
    return None


def primary_witness(S: FiniteSemiring, I: int):
    """``ab ∈ I`` and ``a ∉ I`` force ``b^n ∈ I`` for some ``1 <= n <= |S|``."""
    if I >> S.one & 1:
        return (S.one,)
    n = S.size
    for a in S.elements:
        if I >> a & 1:
            continue
        row = S.M[a]
        for b in S.elements:
            if I >> row[b] & 1:
                p, hit = b, False
                for _ in range(n):
                    if I >> p & 1:
                        hit = True
                        break
                    p = S.M[p][b]
                if not hit:
                    return (a, b)
    return None


def _pairs(universe):
    return itertools.combinations_with_replacement(universe, 2)


def strongly_irreducible_witness(S: FiniteSemiring, I: int, universe):
    if I == S.full:
        return (S.one,)
    for A, B in _pairs(universe):
        if A & B & ~I == 0 and A & ~I and B & ~I:
            return (tuple(bits(A)), tuple(bits(B)))
    return None


def irreducible_witness(S: FiniteSemiring, I: int, universe):
    if I == S.full:
        return (S.one,)
    for A, B in _pairs(universe):
        if A & B == I and A != I and B != I:
            return (tuple(bits(A)), tuple(bits(B)))
    return None


def maximal_witness(S: FiniteSemiring, I: int, universe):
    if I == S.full:
        return (S.one,)
    for A in universe:
        if A & I == I and A != I and A != S.full:
            return (tuple(bits(A)),)
    return None


def ideal_prime_witness(S: FiniteSemiring, I: int, universe):
    """``AB ⊆ I`` forces ``A ⊆ I`` or ``B ⊆ I`` for A, B in ``universe``."""
    if I == S.full:
        return (S.one,)
    for A, B in _pairs(universe):
        if product_mask(S, A, B) & ~I == 0 and A & ~I and B & ~I:
            return (tuple(bits(A)), tuple(bits(B)))
    return None


def ideal_semiprime_witness(S: FiniteSemiring, I: int, universe):
    for A in universe:
        if product_mask(S, A, A) & ~I == 0 and A & ~I:
            return (tuple(bits(A)),)
    return None


def k_cancellation_witness(S: FiniteSemiring, I: int):
    if I == 1 << S.zero:
        return ("zero-ideal",)
    kids = k_ideal_masks(S)
    for J, K in itertools.combinations(kids, 2):
        if product_mask(S, I, J) == product_mask(S, I, K):
            return (tuple(bits(J)), tuple(bits(K)))
    return None


# ---------------------------------------------------------------------------
# public API


def classify_ideal(S: FiniteSemiring, I, budget: Budget | None = None) -> ClassProfile:
    """Decide every class flag for the ideal ``I`` of ``S``.

    ``findings`` lists any disagreement between a ``k_X`` flag and
    ``k_ideal and X``; on a correct build it is always empty.
    """
    budget = _budget(budget)
    m = _ideal_arg(S, I)
    ids = enumerate_ideal_masks(S, budget)
    kids = k_ideal_masks(S)
    budget.spend(len(kids) ** 2 + len(ids) ** 2, "classification")

    def flag(w):
        return Flag(w is None, w)

    kw = k_witness(S, m)
    is_k = kw is None
    not_k = Flag(False, ("not-k-ideal",) + tuple(kw or ()))

    f: dict[str, Flag] = {"ideal": Flag(True)}
    f["k_ideal"] = flag(kw)
    f["strong"] = flag(strong_witness(S, m))
    f["prime"] = flag(prime_witness(S, m))
    f["semiprime"] = flag(semiprime_witness(S, m))
    f["primary"] = flag(primary_witness(S, m))
    f["irreducible"] = flag(irreducible_witness(S, m, ids))
    f["strongly_irreducible"] = flag(strongly_irreducible_witness(S, m, ids))
    f["maximal"] = flag(maximal_witness(S, m, ids))
    if is_k:
        f["k_prime"] = flag(ideal_prime_witness(S, m, kids))
        f["k_semiprime"] = flag(ideal_semiprime_witness(S, m, kids))
        f["k_primary"] = f["primary"]
        f["k_irreducible"] = flag(irreducible_witness(S, m, kids))
        f["k_strongly_irreducible"] = flag(strongly_irreducible_witness(S, m, kids))
        f["k_maximal"] = flag(maximal_witness(S, m, kids))
        f["k_cancellation"] = flag(k_cancellation_witness(S, m))
    else:
        for k in ("k_prime", "k_semiprime", "k_primary", "k_irreducible",
                  "k_strongly_irreducible", "k_maximal", "k_cancellation"):
            f[k] = not_k

    findings = []
    for x in ("prime", "semiprime", "irreducible", "strongly_irreducible"):
        if f["k_" + x].value != (is_k and f[x].value):
            findings.append(("exchange", x, tuple(bits(m))))
    return ClassProfile(S, m, f, tuple(findings))


def is_ik_system(S: FiniteSemiring, A) -> bool:
    """Every pair a, b of A has ``C_k(<a>) ∩ C_k(<b>)`` meeting A."""
    m = as_mask(S, A)
    if m == 0:
        raise ContractViolation("an i_k-system must be non-empty")
    cl = closed_principals(S)
    els = bits(m)
    return all(cl[a] & cl[b] & m for a in els for b in els)


def closed_principals(S: FiniteSemiring) -> tuple[int, ...]:
    """``C_k(<x>)`` for every element x."""
    return S.cached("closed_principals",
                    lambda: tuple(kclosure_mask(S, principal_mask(S, x)) for x in S.elements))


def ik_system_sides(S: FiniteSemiring, I) -> tuple[bool, bool, bool]:
    """(k-strongly irreducible, principal-closure condition, complement is i_k-system)."""
    m = _ideal_arg(S, I)
    if k_witness(S, m) is not None or m == S.full:
        raise ContractViolation("expects a proper k-ideal")
    side1 = strongly_irreducible_witness(S, m, k_ideal_masks(S)) is None
    cl = closed_principals(S)
    side2 = all(m >> a & 1 or m >> b & 1
                for a in S.elements for b in S.elements if cl[a] & cl[b] & ~m == 0)
    side3 = is_ik_system(S, S.full & ~m)
    return side1, side2, side3


def ik_system_equivalence_check(S: FiniteSemiring, I) -> bool:
    """True iff the three equivalent conditions agree for this k-ideal."""
    return len(set(ik_system_sides(S, I))) == 1


def _idempotent_k_arg(S, I):
    if not is_additively_idempotent(S):
        raise NotApplicableError(f"{S.name}: order criteria need idempotent addition")
    m = _ideal_arg(S, I)
    if k_witness(S, m) is not None:
        raise ContractViolation("expects a k-ideal")
    return m


def order_k_prime(S: FiniteSemiring, I) -> bool:
    """``xy <= z ∈ I`` forces ``x ∈ I`` or ``y ∈ I`` (I proper)."""
    m = _idempotent_k_arg(S, I)
    if m == S.full:
        return False
    leq = natural_order(S).leq
    zs = bits(m)
    for x in S.elements:
        for y in S.elements:
            if m >> x & 1 or m >> y & 1:
                continue
            xy = S.M[x][y]
            if any(leq[xy, z] for z in zs):
                return False
    return True


def order_k_semiprime(S: FiniteSemiring, I) -> bool:
    """``x² <= z ∈ I`` forces ``x ∈ I``."""
    m = _idempotent_k_arg(S, I)
    leq = natural_order(S).leq
    zs = bits(m)
    return all(m >> x & 1 or not any(leq[S.M[x][x], z] for z in zs) for x in S.elements)


def lcm_oracle(S: FiniteSemiring):
    """Least common multiple for semirings whose divisibility is known in closed form.

    In the min-plus models ``y | x`` iff ``x >= y`` numerically, so the
    l.c.m. is the numeric maximum.
    """
    if S.family == "tropical":
        return max
    raise NotApplicableError(f"{S.name}: no l.c.m. oracle for family {S.family!r}")


def order_k_strongly_irreducible_lcm(S: FiniteSemiring, I) -> bool:
    """``lcm{x,y} <= z ∈ I`` forces ``x ∈ I`` or ``y ∈ I`` (I proper)."""
    m = _idempotent_k_arg(S, I)
    lcm = lcm_oracle(S)
    if m == S.full:
        return False
    leq = natural_order(S).leq
    zs = bits(m)
    for x in S.elements:
        for y in S.elements:
            if m >> x & 1 or m >> y & 1:
                continue
            if any(leq[lcm(x, y), z] for z in zs):
                return False
    return True


def is_k_cancellation(S: FiniteSemiring, I) -> bool:
    """``IJ = IK`` forces ``J = K`` over all k-ideals J, K."""
    m = _ideal_arg(S, I)
    if m == 1 << S.zero:
        raise ContractViolation("k-cancellation ideals are non-zero by definition")
    if k_witness(S, m) is not None:
        raise ContractViolation("expects a k-ideal")
    return k_cancellation_witness(S, m) is None


def k_cancellation_conditions(S: FiniteSemiring, I) -> tuple[bool, bool, bool]:
    """(cancellation, ``(IJ : I) = J`` for all J, ``IJ ⊆ IK ⇒ J ⊆ K``)."""
    m = _ideal_arg(S, I)
    c1 = is_k_cancellation(S, m)
    kids = k_ideal_masks(S)
    c2 = all(colon_mask(S, product_mask(S, m, J), m) == J for J in kids)
    c3 = all(J & K == J for J in kids for K in kids
             if product_mask(S, m, J) & ~product_mask(S, m, K) == 0)
    return c1, c2, c3


def k_primary_decomposition(S: FiniteSemiring, I, budget: Budget | None = None):
    """A smallest list of k-primary ideals intersecting to ``I``, or None.

    ``I = S`` is the empty intersection and decomposes as ``[]``.
    """
    from .ideals import IdealSet

    budget = _budget(budget)
    m = _ideal_arg(S, I)
    if k_witness(S, m) is not None:
        raise ContractViolation("expects a k-ideal")
    if m == S.full:
        return []
    cands = [P for P in k_primary_masks(S) if P & m == m]
    for r in range(1, len(cands) + 1):
        for combo in itertools.combinations(cands, r):
            budget.spend(1, "primary decomposition")
            acc = S.full
            for P in combo:
                acc &= P
            if acc == m:
                return [IdealSet(S, P) for P in combo]
    return None


def k_primary_masks(S: FiniteSemiring) -> tuple[int, ...]:
    return S.cached("k_primary",
                    lambda: tuple(P for P in k_ideal_masks(S) if primary_witness(S, P) is None))


def k_si_masks(S: FiniteSemiring) -> tuple[int, ...]:
    def build():
        kids = k_ideal_masks(S)
        return tuple(P for P in kids if strongly_irreducible_witness(S, P, kids) is None)
    return S.cached("k_si", build)


def k_irreducible_masks(S: FiniteSemiring) -> tuple[int, ...]:
    def build():
        kids = k_ideal_masks(S)
        return tuple(P for P in kids if irreducible_witness(S, P, kids) is None)
    return S.cached("k_irr", build)


def is_laskerian(S: FiniteSemiring, budget: Budget | None = None) -> bool:
    return all(k_primary_decomposition(S, J, budget) is not None for J in k_ideal_masks(S))


def k_radical_mask(S: FiniteSemiring, I: int) -> int:
    return radical_mask(S, I)
