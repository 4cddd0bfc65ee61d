"""Symbolic models of (ℕ, +, ·) and the tropical semiring (ℕ ∪ {∞}, min, +).

Ideals of ℕ are written ``dℕ`` and carried by the generator ``d``; ``d = 0``
is the zero ideal and ``d = 1`` is all of ℕ.  Tropical ideals are up-sets
``{x >= t} ∪ {∞}``; threshold ``None`` stands for ``t = ∞`` (the zero ideal)
and ``t = 0`` is the whole semiring.

Closed forms live in :func:`nat_classify` and :func:`trop_classify`; the
:class:`BoundedOracle` re-derives every flag from the element-wise
definitions with quantifiers confined to ``{0..N}``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Optional

import numpy as np

from .errors import ContractViolation, NotApplicableError

NAT_FLAGS = ("k_ideal", "prime", "semiprime", "primary", "irreducible", "strongly_irreducible",
             "maximal", "k_prime", "k_semiprime", "k_primary", "k_irreducible",
             "k_strongly_irreducible", "k_maximal", "k_cancellation")
ORACLE_FLAGS = ("k_ideal", "prime", "semiprime", "primary", "irreducible", "strongly_irreducible", "maximal")


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (n >= 1)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for e in factorize(n).values())


def rad(n: int) -> int:
    if n == 0:
        return 0
    return math.prod(factorize(n))


def lcm(a: int, b: int) -> int:
    return 0 if a == 0 or b == 0 else a * b // math.gcd(a, b)


@dataclass(frozen=True)
class NatIdeal:
    generator: int

    def __post_init__(self):
        if not isinstance(self.generator, int) or self.generator < 0:
            raise ContractViolation(f"generator must be a natural number, got {self.generator!r}")

    def __contains__(self, x: int) -> bool:
        d = self.generator
        return x == 0 if d == 0 else x % d == 0

    @property
    def is_proper(self) -> bool:
        return self.generator != 1

    def __str__(self):
        return f"{self.generator}N"


@dataclass(frozen=True)
class TropIdeal:
    threshold: Optional[int]

    def __post_init__(self):
        t = self.threshold
        if t is not None and (not isinstance(t, int) or t < 0):
            raise ContractViolation(f"threshold must be a natural number or None, got {t!r}")

    def __contains__(self, x) -> bool:
        if x is None:
            return True
        return self.threshold is not None and x >= self.threshold

    @property
    def is_proper(self) -> bool:
        return self.threshold != 0

    def __str__(self):
        return "{inf}" if self.threshold is None else f"[{self.threshold},inf]"


def parse_trop(spec: str) -> TropIdeal:
    s = str(spec).strip().lower()
    if s in ("inf", "∞", "infinity"):
        return TropIdeal(None)
    try:
        return TropIdeal(int(s))
    except ValueError:
        raise ContractViolation(f"tropical threshold must be an integer or 'inf', got {spec!r}") from None


@dataclass(frozen=True)
class SymbolicProfile:
    model: str
    ideal: str
    flags: dict = field(default_factory=dict)
    notes: tuple = ()

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        raise AttributeError(name)

    def to_dict(self) -> dict:
        d = {"model": self.model, "ideal": self.ideal}
        d.update(self.flags)
        d["notes"] = list(self.notes)
        return d


# ---------------------------------------------------------------------------
# ℕ closed forms


def nat_ops(I: NatIdeal, J: NatIdeal) -> dict:
    """Closed-form ideal arithmetic on generators."""
    d, e = I.generator, J.generator
    return {
        "sum_k_closure": NatIdeal(math.gcd(d, e)),
        "product": NatIdeal(d * e),
        "intersection": NatIdeal(lcm(d, e)),
        "radical": (NatIdeal(rad(d)), NatIdeal(rad(e))),
    }


def nat_radical(I: NatIdeal) -> NatIdeal:
    return NatIdeal(rad(I.generator))


def nat_classify(I: NatIdeal) -> SymbolicProfile:
    d = I.generator
    proper = d != 1
    pp = d == 0 or is_prime_power(d)
    f = {
        "k_ideal": True,
        "prime": d == 0 or is_prime(d),
        "semiprime": d == 0 or is_squarefree(d),
        "primary": proper and pp,
        "irreducible": proper and pp,
        "strongly_irreducible": proper and pp,
        "maximal": is_prime(d),
        "k_cancellation": d != 0,
    }
    for x in ("prime", "semiprime", "primary", "irreducible", "strongly_irreducible", "maximal"):
        f["k_" + x] = f[x]
    notes = ["every ideal dN is a k-ideal, so each k-class equals its plain class"]
    if d == 0:
        notes.append("0N = {0} is k-prime because N has no zero divisors")
    if d == 1:
        notes.append("1N = N is improper and excluded from proper-only classes")
    return SymbolicProfile("nat", str(I), {k: f[k] for k in NAT_FLAGS}, tuple(notes))


def nat_lcm_criterion(I: NatIdeal, sample_bound: int) -> tuple[bool, Optional[tuple[int, int]]]:
    """``lcm(x, y) ∈ I ⇒ x ∈ I or y ∈ I`` over ``1 <= x, y <= N``; returns (holds, witness)."""
    if sample_bound < 2:
        raise ContractViolation("sample bound must be at least 2")
    for x in range(1, sample_bound + 1):
        if x in I:
            continue
        for y in range(x, sample_bound + 1):
            if y not in I and lcm(x, y) in I:
                return False, (x, y)
    return True, None


def nat_primary_decomposition(I: NatIdeal) -> list[NatIdeal]:
    d = I.generator
    if d == 0:
        return [NatIdeal(0)]
    return [NatIdeal(p ** a) for p, a in sorted(factorize(d).items())]


def nat_prime_element_theorems(I: NatIdeal, oracle_bound: int = 50) -> bool:
    """A non-zero k-prime dN contains the prime element d, and dN is a k-ideal on the oracle segment."""
    d = I.generator
    if d == 0:
        raise NotApplicableError("the prime element theorem concerns non-zero ideals")
    prof = nat_classify(I)
    contains_prime = (not prof.k_prime) or any(is_prime(p) and p in I for p in range(2, d + 1))
    return contains_prime and BoundedOracle(oracle_bound, "nat").nat_flags(d)["k_ideal"]


def nat_cone_hypotheses(bound: int = 40) -> dict:
    """Cancellative, conic and semidomain, checked on the segment {0..bound}."""
    xs = range(bound + 1)
    return {
        "cancellative": all((a + b == a + c) == (b == c) for a in xs for b in xs for c in xs),
        "conic": all(a + b != 0 or (a == 0 and b == 0) for a in xs for b in xs),
        "semidomain": all(a * b != 0 for a in xs for b in xs if a and b),
    }


# ---------------------------------------------------------------------------
# tropical closed forms


def trop_classify(I: TropIdeal) -> SymbolicProfile:
    t = I.threshold
    proper = t != 0
    f = {
        "k_ideal": True,
        "strong": True,
        "prime": t is None or t == 1,
        "semiprime": t is None or t <= 1,
        "primary": proper,
        "irreducible": proper,
        "strongly_irreducible": proper,
        "maximal": t == 1,
    }
    for x in ("prime", "semiprime", "primary", "irreducible", "strongly_irreducible", "maximal"):
        f["k_" + x] = f[x]
    notes = ("ideals are up-sets, so the ideal lattice is a chain",
             "l.c.m. is the numeric maximum since y divides x iff x >= y")
    return SymbolicProfile("tropical", str(I), f, notes)


def trop_lcm_criterion(I: TropIdeal, N: int) -> bool:
    """For x, y in {0..N, ∞} and z in I: ``lcm{x,y} ⩽ z`` forces x ∈ I or y ∈ I.

    In the natural order ``a ⩽ b`` iff ``min(a, b) = b``.
    """
    pts: list = list(range(N + 1)) + [None]
    zs = [z for z in pts if z in I]

    def tmax(a, b):
        return None if a is None or b is None else max(a, b)

    def leq(a, b):
        # a ⩽ b iff min(a, b) = b, with None as ∞
        if b is None:
            return a is None
        return a is None or a >= b

    for x, y in itertools.product(pts, repeat=2):
        if x in I or y in I:
            continue
        m = tmax(x, y)
        if any(leq(m, z) for z in zs):
            return False
    return True


def trop_order_k_prime(I: TropIdeal, N: int) -> bool:
    """``xy ⩽ z ∈ I`` forces x ∈ I or y ∈ I, with xy = x + y."""
    if not I.is_proper:
        return False
    pts: list = list(range(N + 1)) + [None]
    zs = [z for z in pts if z in I]
    for x, y in itertools.product(pts, repeat=2):
        if x in I or y in I:
            continue
        s = None if x is None or y is None else x + y
        if any((z is None and s is None) or (z is not None and (s is None or s >= z)) for z in zs):
            return False
    return True


# ---------------------------------------------------------------------------
# bounded oracle


class BoundedOracle:
    """Element-wise definitions with every quantifier confined to {0..N}.

    Membership of an arbitrary natural number in an ideal is exact; only the
    quantifier ranges are bounded.  Existential powers ``bⁿ`` use the fact
    that some ``n <= N`` works iff ``n = N`` does, since ideals absorb.
    """

    def __init__(self, bound: int, model: str = "nat"):
        if model not in ("nat", "trop"):
            raise ContractViolation(f"unknown model {model!r}")
        if bound < 2:
            raise ContractViolation("oracle bound must be at least 2")
        self.bound = bound
        self.model = model

    # ℕ --------------------------------------------------------------------

    def nat_segment(self, d: int) -> np.ndarray:
        x = np.arange(self.bound + 1)
        return x == 0 if d == 0 else x % d == 0

    def nat_flags(self, d: int) -> dict:
        N = self.bound
        seg = self.nat_segment(d)
        idx = np.arange(N + 1)
        proper = not seg[1]
        out = {}
        # x, x+y in I force y in I
        ok = True
        for x in np.flatnonzero(seg):
            ys = idx[: N - x + 1]
            if np.any(seg[x + ys] & ~seg[ys]):
                ok = False
                break
        out["k_ideal"] = ok
        # pairs whose product stays on the segment, one row per x
        prime_ok = proper
        prim = proper
        for x in range(N + 1):
            if seg[x]:
                continue
            ys = idx[: (N // x if x else N) + 1]
            hit = ys[seg[x * ys]]
            bad = hit[~seg[hit]]
            if prime_ok and bad.size:
                prime_ok = False
            if prim:
                for y in hit:
                    if (pow(int(y), N, d) != 0) if d else int(y) != 0:
                        prim = False
                        break
            if not prime_ok and not prim:
                break
        out["prime"] = prime_ok
        sq = idx[idx * idx <= N]
        out["semiprime"] = not np.any(seg[sq * sq] & ~seg[sq])
        out["primary"] = prim
        # ideal-quantified classes over k-ideals aN; a, b <= d (or <= sqrt N for d = 0)
        top = d if d >= 1 else math.isqrt(N)
        segs = {a: self.nat_segment(a) for a in range(top + 1)}
        si = proper
        irr = proper
        for a, b in itertools.combinations_with_replacement(range(top + 1), 2):
            inter = segs[a] & segs[b]
            a_in = not np.any(segs[a] & ~seg)
            b_in = not np.any(segs[b] & ~seg)
            if si and not np.any(inter & ~seg) and not a_in and not b_in:
                si = False
            if irr and np.array_equal(inter, seg) and not np.array_equal(segs[a], seg) \
                    and not np.array_equal(segs[b], seg):
                irr = False
        out["strongly_irreducible"] = si
        out["irreducible"] = irr
        maximal = proper
        if maximal:
            # a beyond d cannot contain d, so larger generators need no scan
            for a in range(2, max(d, 2) + 1):
                A = self.nat_segment(a)
                if not np.any(seg & ~A) and not np.array_equal(A, seg):
                    maximal = False
                    break
        out["maximal"] = maximal
        return out

    def nat_generator(self, mask: np.ndarray) -> int:
        nz = np.flatnonzero(mask[1:])
        return int(nz[0]) + 1 if nz.size else 0

    def nat_sum_closure(self, d: int, e: int, extent: int) -> np.ndarray:
        """``C_k(dN + eN)`` on ``{0..extent}``, computed from the raw sum on the segment."""
        N = self.bound
        R = np.zeros(N + 1, dtype=bool)
        R[0] = True
        for x in range(1, N + 1):
            R[x] = (d and x >= d and R[x - d]) or (e and x >= e and R[x - e])
        return np.array([np.any(R[: N - s + 1] & R[s:]) for s in range(extent + 1)])

    def nat_product(self, d: int, e: int) -> int:
        N = self.bound
        A = np.flatnonzero(self.nat_segment(d))
        B = np.flatnonzero(self.nat_segment(e))
        prods = np.outer(A, B).ravel()
        prods = prods[prods <= N]
        raw = np.zeros(N + 1, dtype=bool)
        raw[prods] = True
        return self.nat_generator(raw)

    def nat_intersection(self, d: int, e: int) -> int:
        return self.nat_generator(self.nat_segment(d) & self.nat_segment(e))

    def nat_radical(self, d: int) -> int:
        """Intersection, on the segment, of the prime ideals aN containing dN."""
        if d == 0:
            return 0 if self.nat_flags(0)["prime"] else -1
        acc = np.ones(self.bound + 1, dtype=bool)
        for a in range(2, d + 1):
            if d % a == 0 and BoundedOracle(max(4 * a * a, 16)).nat_flags(a)["prime"]:
                acc &= self.nat_segment(a)
        return self.nat_generator(acc) if not acc[1] else 1

    # tropical ---------------------------------------------------------------

    def trop_flags(self, t: Optional[int]) -> dict:
        N = self.bound
        I = TropIdeal(t)
        pts: list = list(range(N + 1)) + [None]
        proper = I.is_proper

        def mul(x, y):
            return None if x is None or y is None else x + y

        def mn(x, y):
            if x is None:
                return y
            if y is None:
                return x
            return min(x, y)

        out = {}
        out["k_ideal"] = all(y in I for x in pts if x in I for y in pts if mn(x, y) in I)
        out["strong"] = all(x in I and y in I for x in pts for y in pts if mn(x, y) in I)
        out["prime"] = proper and all(x in I or y in I for x in pts for y in pts if mul(x, y) in I)
        out["semiprime"] = all(x in I for x in pts if mul(x, x) in I)

        def power_in(y):
            # y^N in the tropical sense is N*y
            return mul(y, 0) in I if y is None else (N * y) in I

        out["primary"] = proper and all(power_in(y) for x in pts if x not in I
                                        for y in pts if mul(x, y) in I)
        thresholds: list = list(range(N + 1)) + [None]
        seg = {a: frozenset(p for p in pts if p in TropIdeal(a)) for a in thresholds}
        mine = seg[t] if t is None or t <= N else frozenset(p for p in pts if p in I)
        si = irr = proper
        for a, b in itertools.combinations_with_replacement(thresholds, 2):
            inter = seg[a] & seg[b]
            if si and inter <= mine and not seg[a] <= mine and not seg[b] <= mine:
                si = False
            if irr and inter == mine and seg[a] != mine and seg[b] != mine:
                irr = False
        out["strongly_irreducible"] = si
        out["irreducible"] = irr
        full = seg[0]
        out["maximal"] = proper and not any(mine < seg[a] < full for a in thresholds)
        return out


def nat_oracle_check(d: int) -> list:
    """Closed forms versus the oracle for the generator d, at N = 4d² (at least 16)."""
    N = max(4 * d * d, 16)
    o = BoundedOracle(N)
    oracle = o.nat_flags(d)
    closed = nat_classify(NatIdeal(d)).flags
    out = [("flag", k, closed[k], oracle[k]) for k in ORACLE_FLAGS if oracle[k] != closed[k]]
    if d >= 1 and o.nat_radical(d) != rad(d):
        out.append(("radical", rad(d), o.nat_radical(d)))
    return out


def nat_oracle_findings(max_generator: int = 60) -> list:
    return [(d,) + f for d in range(max_generator + 1) for f in nat_oracle_check(d)]


def nat_ops_check(d: int, e: int) -> list:
    """Generator arithmetic versus segment computations, at N = 4de (at least 16)."""
    N = max(4 * d * e, 16)
    o = BoundedOracle(N)
    ops = nat_ops(NatIdeal(d), NatIdeal(e))
    out = []
    g = ops["sum_k_closure"].generator
    cl = o.nat_sum_closure(d, e, 2 * max(d, e))
    if not np.array_equal(cl, np.arange(cl.size) % g == 0):
        out.append(("sum-closure", g))
    if o.nat_intersection(d, e) != ops["intersection"].generator:
        out.append(("intersection", ops["intersection"].generator))
    if o.nat_product(d, e) != ops["product"].generator:
        out.append(("product", ops["product"].generator))
    return out


def nat_ops_findings(max_generator: int = 12) -> list:
    return [(d, e) + f for d, e in itertools.combinations_with_replacement(range(1, max_generator + 1), 2)
            for f in nat_ops_check(d, e)]


def radical_product_check(d: int, max_generator: int = 60) -> list:
    """``rad(de) = lcm(rad d, rad e)`` for every e up to the bound."""
    return [e for e in range(1, max_generator + 1) if rad(d * e) != lcm(rad(d), rad(e))]


def radical_product_findings(max_generator: int = 60) -> list:
    return [(d, e) for d in range(1, max_generator + 1) for e in radical_product_check(d, max_generator)]


def trop_oracle_check(t: Optional[int], bound: int = 24) -> list:
    o = BoundedOracle(bound, "trop").trop_flags(t)
    c = trop_classify(TropIdeal(t)).flags
    out = [("flag", k, c[k], o[k]) for k in ("k_ideal", "strong") + ORACLE_FLAGS[1:] if o[k] != c[k]]
    I = TropIdeal(t)
    if I.is_proper and trop_lcm_criterion(I, bound) != c["k_strongly_irreducible"]:
        out.append(("lcm",))
    if I.is_proper and trop_order_k_prime(I, bound) != c["k_prime"]:
        out.append(("order-prime",))
    if c["k_irreducible"] != c["k_strongly_irreducible"]:
        out.append(("arithmetic-coincidence",))
    return out


def trop_oracle_findings(max_threshold: int = 20, bound: int = 24) -> list:
    return [(t,) + f for t in list(range(max_threshold + 1)) + [None] for f in trop_oracle_check(t, bound)]


def generator_sets(universe: int = 20, max_size: int = 3, extra_samples: int = 200,
                   seed: int = 0) -> list[tuple[int, ...]]:
    """All subsets of {1..universe} up to ``max_size`` plus a seeded sample of larger ones."""
    nums = list(range(1, universe + 1))
    sets = [c for r in range(1, max_size + 1) for c in itertools.combinations(nums, r)]
    rng = random.Random(seed)
    for _ in range(extra_samples):
        r = rng.randint(max_size + 1, universe)
        sets.append(tuple(sorted(rng.sample(nums, r))))
    return sets


def kgenerated_check(G: tuple[int, ...], universe: int = 20) -> bool:
    """``C_k(<G>) = gcd(G)N`` on {0..2·universe}, from the raw generated ideal on a longer segment.

    Adding 0 to G changes nothing, so generators are drawn from {1..universe}.
    """
    g = reduce(math.gcd, G)
    ext = 2 * universe
    N = 2 * universe * universe + 2 * ext
    R = np.zeros(N + 1, dtype=bool)
    R[0] = True
    for x in range(1, N + 1):
        R[x] = any(x >= a and R[x - a] for a in G)
    cl = np.array([np.any(R[: N - s + 1] & R[s:]) for s in range(ext + 1)])
    return bool(np.array_equal(cl, np.arange(ext + 1) % g == 0))


def kgenerated_findings(universe: int = 20, max_size: int = 3, extra_samples: int = 200,
                        seed: int = 0) -> list:
    return [G for G in generator_sets(universe, max_size, extra_samples, seed)
            if not kgenerated_check(G, universe)]


# ---------------------------------------------------------------------------
# localisation in ℕ


def t_part(d: int, primes: Iterable[int]) -> int:
    """``gcd(d, s^∞)``: the largest divisor of d built from the given primes."""
    out = 1
    for p in primes:
        while d % (out * p) == 0:
            out *= p
    return out


def nat_localisation_correspondence(T_gens: Iterable[int], max_generator: int = 60) -> dict:
    """k-strongly irreducible ideals of ℕ and of T⁻¹ℕ, matched through the ⋆-contraction.

    ``T`` is the multiplicative set generated by the given primes.
    """
    gens = sorted(set(T_gens))
    if any(p in (0, 1) for p in gens):
        raise ContractViolation("generators 0 and 1 are not allowed")
    if any(not is_prime(p) for p in gens):
        raise ContractViolation(f"generators must be prime, got {gens}")

    def in_T(x):
        if x < 1:
            return False
        for p in gens:
            while x % p == 0:
                x //= p
        return x == 1

    findings = []
    survivors = []
    for d in range(0, max_generator + 1):
        # dN meets T iff some element of T is a multiple of d, i.e. d itself lies in T
        meets = in_T(d)
        star = 0 if d == 0 else d // t_part(d, gens)
        # brute force: union over s in T of (dN : s), read off its generator on a segment
        B = 4 * max(d, 1) ** 2 + 16
        ts = [s for s in range(1, B + 1) if in_T(s)]
        found = 0
        for x in range(1, B + 1):
            if any((x * s) in NatIdeal(d) for s in ts):
                found = x
                break
        if found != star:
            findings.append(("colon", d, star, found))
        si = nat_classify(NatIdeal(d)).k_strongly_irreducible
        if si and not meets:
            expected = d == 0 or (is_prime_power(d) and next(iter(factorize(d))) not in gens)
            if not expected:
                findings.append(("survivor", d))
            if star != d:
                findings.append(("not-contracted", d))
            survivors.append(d)
    return {"T_gens": gens, "survivors": survivors, "findings": findings,
            "convention": "T is generated by the listed primes; 0N counts as a survivor"}
