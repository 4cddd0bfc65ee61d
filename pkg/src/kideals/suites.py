"""Registry of falsifiable statement checks and the harness that runs them over a corpus.

Every suite carries a plain-language anchor stating what it checks, an
applicability predicate and a per-instance check returning a list of
violations.  An instance passes when its list is empty; otherwise its first
violation becomes the finding's witness.  Reports carry no timings, so two
runs over the same corpus serialise to identical bytes.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional

from . import nat
from .classify import (
    classify_ideal,
    ideal_prime_witness,
    ideal_semiprime_witness,
    ik_system_equivalence_check,
    is_laskerian,
    k_cancellation_conditions,
    k_irreducible_masks,
    k_primary_masks,
    k_si_masks,
    order_k_prime,
    order_k_semiprime,
    order_k_strongly_irreducible_lcm,
)
from .congruence import absolute_sandwich_findings, congruence_theorems_check
from .core import (
    Budget,
    FiniteSemiring,
    _budget,
    bits,
    enumerate_homs,
    from_json,
    is_additively_idempotent,
    is_von_neumann_regular,
    make_boolean,
    make_chain_lattice,
    make_product,
    make_tropical,
    make_truncated_nat,
    make_zn_ring,
    natural_order,
)
from .errors import BudgetExceededError, MalformedInputError
from .ideals import (
    enumerate_ideal_masks,
    enumerate_ideal_masks_exhaustive,
    enumerate_mult_sets,
    k_ideal_masks,
    k_maximal_masks,
    k_prime_masks,
    kclosure_mask,
    lattice_analysis,
    maximal_disjoint_masks,
    principal_mask,
    product_mask,
    radical_mask,
    saturation_mask,
)
from .quotient import (
    hom_contraction_findings,
    localisation_theorems_check,
    quotient_theorems_check,
    sp_equivalence_sides,
    spectral_map,
)

# ---------------------------------------------------------------------------
# corpus


def _family(token: str) -> list[FiniteSemiring]:
    """One generator token: ``nat:3``, ``chain:2-5``, ``zn:6``, ``tropical:1-3``,
    ``boolean``, ``product:chain:3,nat:2``."""
    tok = token.strip()
    if tok in ("boolean", "b1"):
        return [make_boolean()]
    if tok.startswith("product:"):
        parts = tok[len("product:"):].split(",")
        if len(parts) != 2:
            raise MalformedInputError(f"product takes two factors, got {tok!r}")
        a, b = (_family(p) for p in parts)
        if len(a) != 1 or len(b) != 1:
            raise MalformedInputError(f"product factors must be single instances: {tok!r}")
        return [make_product(a[0], b[0])]
    name, _, arg = tok.partition(":")
    makers = {"nat": make_truncated_nat, "chain": make_chain_lattice, "zn": make_zn_ring,
              "tropical": make_tropical}
    if name not in makers or not arg:
        raise MalformedInputError(f"unknown generator token {token!r}")
    try:
        lo, _, hi = arg.partition("-")
        values = range(int(lo), int(hi or lo) + 1)
    except ValueError:
        raise MalformedInputError(f"bad range in {token!r}") from None
    return [makers[name](v) for v in values]


def default_corpus() -> list[FiniteSemiring]:
    """Truncated ℕ caps 1-6, chains 2-5, pairwise products of B1, C3, N2,
    ℤ/nℤ for n in 2, 3, 4, 6 and tropical caps 1-5."""
    base = [make_boolean(), make_chain_lattice(3), make_truncated_nat(2)]
    out = [make_truncated_nat(c) for c in range(1, 7)]
    out += [make_chain_lattice(n) for n in range(2, 6)]
    out += [make_product(a, b) for a, b in itertools.combinations_with_replacement(base, 2)]
    out += [make_zn_ring(n) for n in (2, 3, 4, 6)]
    out += [make_tropical(c) for c in range(1, 6)]
    return out


_FILTERS: dict[str, Callable[[FiniteSemiring], bool]] = {
    "idempotent": is_additively_idempotent,
    "non-idempotent": lambda S: not is_additively_idempotent(S),
    "small": lambda S: S.size <= 6,
}


def build_corpus(spec: str = "default") -> list[FiniteSemiring]:
    """``default``, ``default:<filter>``, a ``+``-joined list of generator tokens,
    or the path of a JSON file holding one table document or a list of them."""
    spec = spec.strip()
    path = Path(spec)
    if spec.endswith(".json") or path.is_file():
        try:
            doc = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise MalformedInputError(f"cannot read corpus {spec!r}: {exc}") from None
        docs = doc.get("instances", [doc]) if isinstance(doc, dict) else doc
        corpus = [from_json(d) for d in docs]
    elif spec == "default" or spec.startswith("default:"):
        corpus = default_corpus()
        for f in spec.split(":")[1:]:
            if f not in _FILTERS:
                raise MalformedInputError(f"unknown corpus filter {f!r}; known: {sorted(_FILTERS)}")
            corpus = [S for S in corpus if _FILTERS[f](S)]
    else:
        corpus = [S for tok in spec.split("+") for S in _family(tok)]
    names = [S.name for S in corpus]
    dup = sorted({n for n in names if names.count(n) > 1})
    if dup:
        raise MalformedInputError(f"corpus instance names must be unique; repeated: {dup}")
    return corpus


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Suite:
    suite_id: str
    anchor: str
    applicability: str
    instances: Callable[[list], list]
    check: Callable[[object], list]


@dataclass
class SuiteReport:
    suite_id: str
    anchor: str
    applicability: str
    instances_checked: int = 0
    passes: int = 0
    findings: list = field(default_factory=list)
    complete: bool = True

    @property
    def vacuous(self) -> bool:
        return self.instances_checked == 0

    @property
    def status(self) -> str:
        if not self.complete:
            return "partial"
        if self.vacuous:
            return "vacuous"
        return "pass" if not self.findings else "fail"

    def to_dict(self) -> dict:
        return {
            "suite_id": self.suite_id,
            "anchor": self.anchor,
            "applicability": self.applicability,
            "instances_checked": self.instances_checked,
            "passes": self.passes,
            "findings": [{"instance": i, "witness": w} for i, w in self.findings],
            "vacuous": self.vacuous,
            "status": self.status,
        }


REGISTRY: dict[str, Suite] = {}


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if hasattr(x, "item"):
        return x.item()
    return x


def _semirings(pred: Optional[Callable[[FiniteSemiring], bool]] = None):
    def pick(corpus):
        return [(S.name, S) for S in corpus if pred is None or pred(S)]
    return pick


def suite(suite_id: str, anchor: str, applicability: str = "all instances",
          instances: Optional[Callable[[list], list]] = None):
    def wrap(fn):
        if suite_id in REGISTRY:
            raise ValueError(f"duplicate suite {suite_id}")
        REGISTRY[suite_id] = Suite(suite_id, anchor, applicability,
                                   instances or _semirings(), fn)
        return fn
    return wrap


def _idem(S):
    return is_additively_idempotent(S)


def _arith(S):
    return lattice_analysis(S).arithmetic


def _diff(a: Iterable[int], b: Iterable[int]) -> list:
    return [bits(m) for m in sorted(set(a) ^ set(b))]


# ideal engine ---------------------------------------------------------------


@suite("closure-laws", "C_k(I) is the least k-ideal containing I, C_k is idempotent and monotone, "
       "and C_k commutes with intersections of pairs and triples")
def _closure_laws(S):
    ids = enumerate_ideal_masks(S)
    kids = k_ideal_masks(S)
    kset = set(kids)
    cl = {I: kclosure_mask(S, I) for I in ids}
    out = []
    for I, c in cl.items():
        if c & I != I:
            out.append(("not-extensive", bits(I)))
        if c not in kset:
            out.append(("not-k-ideal", bits(I)))
        if kclosure_mask(S, c) != c:
            out.append(("not-idempotent", bits(I)))
        low = [K for K in kids if K & I == I and c & ~K]
        if low:
            out.append(("not-least", bits(I), bits(low[0])))
    for I, J in itertools.product(ids, repeat=2):
        if I & J == I and cl[I] & ~cl[J]:
            out.append(("not-monotone", bits(I), bits(J)))
        if kclosure_mask(S, I & J) != cl[I] & cl[J]:
            out.append(("pair-intersection", bits(I), bits(J)))
    for I, J, K in itertools.combinations(ids, 3):
        if kclosure_mask(S, I & J & K) != cl[I] & cl[J] & cl[K]:
            out.append(("triple-intersection", bits(I), bits(J), bits(K)))
    return out


@suite("ideal-enumeration", "closure-based ideal enumeration equals the exhaustive subset scan",
       "instances with at most 6 elements", _semirings(lambda S: S.size <= 6))
def _enumeration(S):
    fast, slow = enumerate_ideal_masks(S), enumerate_ideal_masks_exhaustive(S)
    return [] if fast == slow else [("mismatch", _diff(fast, slow))]


@suite("subtractive-krull", "for every multiplicatively closed T avoiding zero, the k-ideals maximal "
       "among those disjoint from T exist and are k-prime")
def _krull(S):
    kids = k_ideal_masks(S)
    out = []
    for T in enumerate_mult_sets(S):
        found = maximal_disjoint_masks(S, T.mask)
        if not found:
            out.append(("none", bits(T.mask)))
        for P in found:
            if ideal_prime_witness(S, P, kids) is not None:
                out.append(("not-k-prime", bits(T.mask), bits(P)))
    return out


@suite("strongly-subtractive-distributive", "the ideal lattice of a strongly subtractive semiring "
       "is distributive", "strongly subtractive instances",
       _semirings(lambda S: lattice_analysis(S).strongly_subtractive))
def _ss_distributive(S):
    return [] if lattice_analysis(S).distributive else [("not-distributive",)]


@suite("lattice-consistency", "distributive implies modular, subtractive implies modular, and the "
       "ideal lattice is arithmetic iff the principal-ideal identity holds for all triples")
def _lattice(S):
    L = lattice_analysis(S)
    out = []
    if L.distributive and not L.modular:
        out.append(("distributive-not-modular",))
    if L.subtractive and not L.modular:
        out.append(("subtractive-not-modular",))
    if L.distributive != L.arithmetic:
        out.append(("distributive-vs-arithmetic", L.distributive, L.arithmetic))
    if L.principal_criterion != L.arithmetic:
        out.append(("principal-criterion", L.principal_criterion, L.arithmetic))
    return out


@suite("radical-laws", "R_k(IJ) = R_k(I∩J) = R_k(I)∩R_k(J) for k-ideals, and 1 ∈ C_k(<x>) iff x "
       "lies in no k-maximal ideal")
def _radical(S):
    kids = k_ideal_masks(S)
    out = []
    for I, J in itertools.combinations_with_replacement(kids, 2):
        a = radical_mask(S, product_mask(S, I, J))
        b = radical_mask(S, I & J)
        c = radical_mask(S, I) & radical_mask(S, J)
        if not a == b == c:
            out.append(("radical", bits(I), bits(J)))
    kmax = k_maximal_masks(S)
    for x in S.elements:
        unit = bool(kclosure_mask(S, principal_mask(S, x)) >> S.one & 1)
        if unit != (not any(P >> x & 1 for P in kmax)):
            out.append(("unit-closure", x))
    return out


@suite("downset-iff-kideal", "on additively idempotent semirings an ideal is a k-ideal iff it is "
       "down-closed in the natural order", "additively idempotent instances", _semirings(_idem))
def _downset(S):
    leq = natural_order(S).leq
    kset = set(k_ideal_masks(S))
    out = []
    for I in enumerate_ideal_masks(S):
        down = all(I >> y & 1 for x in bits(I) for y in S.elements if leq[y, x])
        if down != (I in kset):
            out.append(bits(I))
    return out


@suite("saturated-iff-kideal", "on additively idempotent semirings the saturation of an ideal is its "
       "k-closure, so an ideal is saturated iff it is a k-ideal", "additively idempotent instances",
       _semirings(_idem))
def _saturated(S):
    kset = set(k_ideal_masks(S))
    out = []
    for J in enumerate_ideal_masks(S):
        sat = saturation_mask(S, J)
        if sat != kclosure_mask(S, J) or (sat == J) != (J in kset):
            out.append(bits(J))
    return out


# classification ----------------------------------------------------------------


@suite("kmax-implies-kprime", "every k-maximal ideal is k-prime")
def _kmax_kprime(S):
    kids = k_ideal_masks(S)
    return [(bits(P), ideal_prime_witness(S, P, kids)) for P in k_maximal_masks(S)
            if ideal_prime_witness(S, P, kids) is not None]


@suite("exchange-principle", "for every k-ideal, k-X agrees with X for X among prime, semiprime, "
       "irreducible and strongly irreducible, each side computed independently")
def _exchange(S):
    return [f for I in k_ideal_masks(S) for f in classify_ideal(S, I).findings]


@suite("class-hierarchy", "k-prime implies k-strongly irreducible implies k-irreducible")
def _hierarchy(S):
    kp, si, irr = set(k_prime_masks(S)), set(k_si_masks(S)), set(k_irreducible_masks(S))
    return [("prime-not-si", bits(I)) for I in sorted(kp - si)] + \
        [("si-not-irreducible", bits(I)) for I in sorted(si - irr)]


@suite("ksi-prime-iff-radical", "a k-strongly irreducible ideal is k-prime iff it equals its k-radical")
def _ksi_radical(S):
    kp = set(k_prime_masks(S))
    return [bits(I) for I in k_si_masks(S) if (I in kp) != (radical_mask(S, I) == I)]


@suite("arithmetic-kirr-eq-ksi", "in an arithmetic semiring k-irreducible and k-strongly irreducible "
       "ideals coincide", "arithmetic instances", _semirings(_arith))
def _arith_coincide(S):
    return _diff(k_irreducible_masks(S), k_si_masks(S))


@suite("vnr-kprime-eq-kprimary", "in a von Neumann regular semiring k-prime and k-primary ideals "
       "coincide", "von Neumann regular instances", _semirings(is_von_neumann_regular))
def _vnr_primary(S):
    return _diff(k_prime_masks(S), k_primary_masks(S))


@suite("vnr-ksi-eq-kprimary", "in a von Neumann regular semiring k-strongly irreducible and "
       "k-primary ideals coincide", "von Neumann regular instances", _semirings(is_von_neumann_regular))
def _vnr_si(S):
    return _diff(k_si_masks(S), k_primary_masks(S))


@suite("laskerian-ksi-kprimary", "in a Laskerian semiring every k-strongly irreducible ideal is "
       "k-primary", "Laskerian instances", _semirings(lambda S: is_laskerian(S)))
def _lasker(S):
    prim = set(k_primary_masks(S))
    return [bits(I) for I in k_si_masks(S) if I not in prim]


@suite("weakly-noetherian-kirr-kprimary", "in a weakly Noetherian semiring, which every finite "
       "semiring is, every k-irreducible ideal is k-primary")
def _weakly_noetherian(S):
    prim = set(k_primary_masks(S))
    return [bits(I) for I in k_irreducible_masks(S) if I not in prim]


@suite("ik-system-equivalence", "for a proper k-ideal I: k-strongly irreducible, the principal-closure "
       "condition and S∖I being an i_k-system are equivalent")
def _ik(S):
    return [bits(I) for I in k_ideal_masks(S) if I != S.full and not ik_system_equivalence_check(S, I)]


@suite("order-criteria", "on additively idempotent semirings the natural-order criteria for k-prime "
       "and k-semiprime agree with the definitions", "additively idempotent instances",
       _semirings(_idem))
def _order(S):
    kids = k_ideal_masks(S)
    out = []
    for I in kids:
        if order_k_prime(S, I) != (ideal_prime_witness(S, I, kids) is None):
            out.append(("k-prime", bits(I)))
        if order_k_semiprime(S, I) != (ideal_semiprime_witness(S, I, kids) is None):
            out.append(("k-semiprime", bits(I)))
    return out


@suite("order-lcm-ksi", "in the min-plus models the l.c.m. criterion characterises k-strong "
       "irreducibility", "tropical instances", _semirings(lambda S: S.family == "tropical"))
def _order_lcm(S):
    si = set(k_si_masks(S))
    return [bits(I) for I in k_ideal_masks(S) if order_k_strongly_irreducible_lcm(S, I) != (I in si)]


@suite("k-cancellation-equivalence", "for a non-zero k-ideal I of an additively idempotent semiring: "
       "I is k-cancellation iff (IJ : I) = J for all k-ideals J iff IJ ⊆ IK forces J ⊆ K",
       "additively idempotent instances", _semirings(_idem))
def _kcancel(S):
    return [bits(I) for I in k_ideal_masks(S) if I != 1 << S.zero
            and len(set(k_cancellation_conditions(S, I))) != 1]


# congruences ----------------------------------------------------------------------


def _cong(key):
    def check(S):
        return _congruence_cached(S).get(key, [])
    return check


_CONGRUENCE_SUITES = (
    ("kmax-congruence-kprime", "every k-maximal congruence is k-prime", None),
    ("kcongruence-correspondence", "I ↦ K_I is a bijection between k-ideals and k-congruences "
     "whose zero class recovers the ideal", None),
    ("kmax-ideal-iff-kmax-congruence", "a k-ideal is k-maximal iff its Bourne congruence is "
     "k-maximal", _idem),
    ("kprime-congruence-irreducible", "every k-prime k-congruence is irreducible among "
     "k-congruences", _idem),
    ("kirreducible-ideal-congruence", "the Bourne congruence of a k-irreducible ideal is "
     "irreducible among k-congruences", _idem),
    ("excellent-irreducible", "if the saturation of J is k-irreducible then the excellent "
     "congruence of J is irreducible among excellent congruences", _idem),
    ("excellent-equals-bourne", "on additively idempotent semirings the excellent and Bourne "
     "congruences of an ideal agree", _idem),
)

for _sid, _anchor, _pred in _CONGRUENCE_SUITES:
    suite(_sid, _anchor, "all instances" if _pred is None else "additively idempotent instances",
          _semirings(_pred))(_cong(_sid))


def _congruence_cached(S):
    return S.cached("suite-congruences", lambda: congruence_theorems_check(S))


@suite("absolute-sandwich", "k-maximal implies absolutely k-prime implies k-prime",
       "additively idempotent instances", _semirings(_idem))
def _sandwich(S):
    return absolute_sandwich_findings(S)


# quotients -------------------------------------------------------------------------


def _quot(key):
    def check(S):
        return S.cached("suite-quotients", lambda: quotient_theorems_check(S))[key]
    return check


_QUOTIENT_SUITES = (
    ("bourne-well-defined", "well-defined", "the Bourne relation of every ideal is a congruence and "
     "the quotient tables satisfy the semiring axioms", None),
    ("quotient-ideal-images", "quotient-ideal-images", "the zero class of S/I is C_k(I), ideals and "
     "k-ideals above I map to ideals and k-ideals, and an image containing 1 is everything", None),
    ("quotient-intersections", "quotient-intersections", "intersections of k-ideals above I are "
     "mirrored exactly in S/I", None),
    ("ksi-descends", "ksi-descends", "k-strongly irreducible ideals above I map to k-strongly "
     "irreducible ideals of S/I", None),
    ("ksi-converse", "ksi-converse", "for arithmetic S, a k-ideal above I whose image is k-strongly "
     "irreducible is itself k-strongly irreducible", _arith),
    ("zero-kirr", "zero-kirr", "a k-ideal I is k-irreducible iff the zero ideal of S/I is", None),
)

for _sid, _key, _anchor, _pred in _QUOTIENT_SUITES:
    suite(_sid, _anchor, "all instances" if _pred is None else "arithmetic instances",
          _semirings(_pred))(_quot(_key))


# localisation ----------------------------------------------------------------------


def _pairs(corpus):
    out = []
    for S in corpus:
        if S.size > 9:
            continue
        for T in enumerate_mult_sets(S):
            out.append((f"{S.name}[T={','.join(map(str, T.members))}]", (S, T)))
    return out


def _loc(key):
    def check(pair):
        S, T = pair
        return S.cached(("suite-localisation", T.mask), lambda: localisation_theorems_check(S, T))[key]
    return check


_LOCAL_SUITES = (
    ("contracted-fixpoint", "every contraction I of a k-ideal of T⁻¹S satisfies (T⁻¹I)^c = I"),
    ("ksi-correspondence", "contraction and extension are mutually inverse bijections between "
     "proper k-strongly irreducible ideals of T⁻¹S and contracted proper k-strongly irreducible "
     "ideals of S disjoint from T"),
    ("star-contraction", "for k-ideals I: I^e = T⁻¹I, I^ec is the union of (I : s) over s ∈ T, and "
     "I^e is everything iff I meets T"),
    ("fractions-k-ideals", "T⁻¹I is a k-ideal for k-ideals I and contractions of k-ideals are "
     "k-ideals"),
    ("primary-localisation", "for a k-primary I whose k-radical P avoids T: T⁻¹I is k-primary, "
     "(T⁻¹I)^c = I, (T⁻¹I : T⁻¹P) = T⁻¹(I : P) and T⁻¹J ⊆ T⁻¹I forces J ⊆ I"),
    ("ksi-contraction", "k-strongly irreducible ideals of T⁻¹S contract to k-strongly irreducible "
     "ideals"),
    ("ksi-extends", "a k-primary k-strongly irreducible ideal with radical avoiding T extends to a "
     "k-strongly irreducible ideal"),
    ("ksi-restricts", "a k-primary ideal with radical avoiding T whose extension is k-strongly "
     "irreducible is k-strongly irreducible"),
    ("primary-ksi-correspondence", "k-primary k-strongly irreducible ideals disjoint from T extend "
     "to k-primary k-strongly irreducible ideals, and on von Neumann regular S extension and "
     "contraction match the two k-strongly irreducible spectra"),
    ("spectral-map", "the canonical map S → T⁻¹S induces a map of k-spectra whose image is the set "
     "of P with P^ec = P"),
)

for _sid, _anchor in _LOCAL_SUITES:
    suite(_sid, _anchor, "pairs (S, T) with |S| <= 9 and T multiplicatively closed, 1 ∈ T, 0 ∉ T",
          _pairs)(_loc(_sid))


@suite("localisation-at-primes", "every k-primary ideal is k-strongly irreducible in S iff the same "
       "holds in every localisation at a k-prime iff it holds at every k-maximal")
def _sp(S):
    sides = sp_equivalence_sides(S)
    return [] if len(set(sides)) == 1 else [sides]


def _homs(corpus):
    out = []
    for S in corpus:
        if S.size > 6:
            continue
        for T in corpus:
            if T.size > S.size:
                continue
            for i, h in enumerate(enumerate_homs(S, T)):
                out.append((f"{S.name}->{T.name}#{i}", h))
    return out


@suite("hom-contraction", "contraction along a homomorphism preserves k-primes, and along a "
       "surjection with the restricted property preserves k-strong irreducibility",
       "homomorphisms S → T between instances with |T| <= |S| <= 6", _homs)
def _hom(h):
    return hom_contraction_findings(h)


@suite("hom-spectral-map", "for every homomorphism, contraction of k-primes lands in the k-spectrum; "
       "P is contracted iff P^ec = P; surjections contract every k-prime; extension of every k-prime "
       "forces injectivity", "homomorphisms S → T between instances with |T| <= |S| <= 6", _homs)
def _hom_spec(h):
    return list(spectral_map(h).findings)


# symbolic models ------------------------------------------------------------------------


def _fixed(items):
    return lambda corpus: items


_REGRESSION = (
    (4, {"k_strongly_irreducible": True, "k_prime": False}),
    (6, {"k_semiprime": True, "k_prime": False, "k_strongly_irreducible": False}),
    (4, {"k_primary": True, "k_prime": False}),
    (9, {"k_primary": True, "k_prime": False}),
    (25, {"k_primary": True, "k_prime": False}),
)


@suite("nat-regression", "4ℕ is k-strongly irreducible and not k-prime; 6ℕ is k-semiprime, neither "
       "k-prime nor k-strongly irreducible; p²ℕ is k-primary and not k-prime for p in 2, 3, 5",
       "the symbolic ℕ model", _fixed([(f"{d}N:{'+'.join(sorted(e))}", (d, e)) for d, e in _REGRESSION]))
def _nat_regression(item):
    d, expect = item
    prof = nat.nat_classify(nat.NatIdeal(d))
    return [(k, v, prof.flags[k]) for k, v in sorted(expect.items()) if prof.flags[k] != v]


@suite("nat-oracle", "closed-form classification of dℕ agrees with the bounded element-wise oracle at "
       "N = 4d²", "generators 0 <= d <= 60", _fixed([(f"d={d}", d) for d in range(61)]))
def _nat_oracle(d):
    return nat.nat_oracle_check(d)


@suite("nat-ops", "gcd, product and lcm give the closed sum, product and intersection of dℕ and eℕ",
       "pairs 1 <= d <= e <= 12",
       _fixed([(f"d={d},e={e}", (d, e)) for d, e in
               itertools.combinations_with_replacement(range(1, 13), 2)]))
def _nat_ops(pair):
    return nat.nat_ops_check(*pair)


@suite("nat-radical-product", "rad(de) = lcm(rad d, rad e), i.e. R_k(dℕ·eℕ) = R_k(dℕ)∩R_k(eℕ)",
       "generators 1 <= d, e <= 60", _fixed([(f"d={d}", d) for d in range(1, 61)]))
def _nat_rad(d):
    return nat.radical_product_check(d)


@suite("nat-k-ideals-principal", "the k-ideal generated by any set G of naturals is gcd(G)ℕ",
       "all generator sets of size <= 3 from 1..20 plus 200 seeded larger ones",
       _fixed([("G=" + ",".join(map(str, G)), G) for G in nat.generator_sets()]))
def _nat_kgen(G):
    return [] if nat.kgenerated_check(G) else [("closure-not-gcd", list(G))]


@suite("nat-lcm-criterion", "for proper non-zero dℕ the l.c.m. criterion holds iff dℕ is k-strongly "
       "irreducible", "generators 2 <= d <= 60", _fixed([(f"d={d}", d) for d in range(2, 61)]))
def _nat_lcm(d):
    holds, w = nat.nat_lcm_criterion(nat.NatIdeal(d), max(2 * d, 8))
    si = nat.nat_classify(nat.NatIdeal(d)).k_strongly_irreducible
    return [] if holds == si else [("criterion", holds, si, w)]


@suite("nat-primary-decomposition", "dℕ is the intersection of the k-primary ideals p^aℕ of its "
       "prime-power factors", "generators 1 <= d <= 60", _fixed([(f"d={d}", d) for d in range(1, 61)]))
def _nat_dec(d):
    parts = nat.nat_primary_decomposition(nat.NatIdeal(d))
    out = []
    acc = 1
    for P in parts:
        acc = nat.lcm(acc, P.generator)
        if not nat.nat_classify(P).k_primary:
            out.append(("not-primary", P.generator))
    if acc != d:
        out.append(("intersection", acc))
    return out


@suite("nat-prime-element", "every non-zero k-prime ideal contains a prime element, and every "
       "principal ideal of ℕ is a k-ideal", "generators 1 <= d <= 60",
       _fixed([(f"d={d}", d) for d in range(1, 61)]))
def _nat_prime_el(d):
    return [] if nat.nat_prime_element_theorems(nat.NatIdeal(d)) else [("failed",)]


_T_GENS = ((), (2,), (3,), (5,), (2, 3), (2, 5), (2, 3, 5))


@suite("nat-localisation", "the k-strongly irreducible ideals of ℕ disjoint from T are 0ℕ and p^aℕ "
       "with p outside T, each fixed by the ⋆-contraction (d / gcd(d, s^∞))ℕ",
       "multiplicative sets generated by small prime sets",
       _fixed([("T=<" + ",".join(map(str, g)) + ">", g) for g in _T_GENS]))
def _nat_loc(gens):
    return nat.nat_localisation_correspondence(gens)["findings"]


@suite("trop-oracle", "closed-form classification of tropical up-set ideals agrees with the bounded "
       "oracle; the l.c.m. and natural-order criteria agree with the closed forms",
       "thresholds 0..20 and ∞ at bound 24",
       _fixed([(f"t={'inf' if t is None else t}", t) for t in list(range(21)) + [None]]))
def _trop(t):
    return nat.trop_oracle_check(t)


# ---------------------------------------------------------------------------
# harness


def run_suite(suite_id: str, corpus: list, budget: Budget | None = None) -> SuiteReport:
    """Run one registered suite over the applicable part of ``corpus``.

    On a budget overrun the exception carries the partial report as
    ``exc.partial``.
    """
    if suite_id not in REGISTRY:
        raise MalformedInputError(f"unknown suite {suite_id!r}")
    s = REGISTRY[suite_id]
    budget = _budget(budget)
    report = SuiteReport(s.suite_id, s.anchor, s.applicability)
    try:
        items = s.instances(corpus)
        for name, item in items:
            budget.spend(_cost(item), suite_id)
            found = s.check(item)
            report.instances_checked += 1
            if found:
                report.findings.append((name, _plain(found[0])))
            else:
                report.passes += 1
    except BudgetExceededError as exc:
        report.complete = False
        exc.partial = report
        raise
    return report


def _cost(item) -> int:
    S = item if isinstance(item, FiniteSemiring) else None
    if isinstance(item, tuple) and item and isinstance(item[0], FiniteSemiring):
        S = item[0]
    return 1 + (S.size ** 3 if S is not None else 0)


def run_all(corpus: list, suite_ids: Optional[Iterable[str]] = None,
            budget: Budget | None = None) -> list[SuiteReport]:
    """Run suites in registry order; reports for completed suites ride on ``exc.partial``."""
    budget = _budget(budget)
    done: list[SuiteReport] = []
    for sid in (suite_ids or REGISTRY):
        try:
            done.append(run_suite(sid, corpus, budget))
        except BudgetExceededError as exc:
            exc.partial = done + [exc.partial]
            raise
    return done


def reports_json(reports: list[SuiteReport], corpus_spec: str, pretty: bool = False) -> str:
    doc = {
        "corpus": corpus_spec,
        "suites": [r.to_dict() for r in reports],
        "total_findings": sum(len(r.findings) for r in reports),
    }
    return json.dumps(doc, indent=2 if pretty else None, sort_keys=True, ensure_ascii=False)
