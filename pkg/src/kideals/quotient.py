"""Bourne quotients, localisations, extension and contraction of k-ideals.

Quotient and localised carriers are numbered by their least base
representative, so repeated constructions give identical tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classify import k_primary_masks, k_si_masks, k_irreducible_masks
from .congruence import _UnionFind, bourne_mask_labels
from .core import FiniteSemiring, Hom, bits, from_tables, is_von_neumann_regular, mask_of
from .errors import ContractViolation
from .ideals import (
    IdealSet,
    MultSet,
    _ideal_arg,
    colon_element_mask,
    colon_mask,
    enumerate_ideal_masks,
    gen_mask,
    is_ideal_mask,
    k_ideal_masks,
    k_maximal_masks,
    k_prime_masks,
    k_witness,
    kclosure_mask,
    radical_mask,
)


def quotient_tables(S: FiniteSemiring, labels) -> tuple[np.ndarray, np.ndarray, Optional[tuple]]:
    """Tables of ``S`` modulo a partition, plus the first ill-defined witness if any."""
    lab = np.asarray(labels, dtype=np.int64)
    k = int(lab.max()) + 1
    rep = np.full(k, -1, dtype=np.int64)
    for x in range(S.size - 1, -1, -1):
        rep[lab[x]] = x
    tabs = []
    bad = None
    for t in (S.add, S.mul):
        full = lab[t]  # class of x.y for every base pair
        q = full[np.ix_(rep, rep)]
        diff = full != q[np.ix_(lab, lab)]
        if bad is None and diff.any():
            bad = tuple(int(v) for v in np.argwhere(diff)[0])
        tabs.append(q)
    return tabs[0], tabs[1], bad


@dataclass(frozen=True, eq=False)
class QuotientSemiring:
    base: FiniteSemiring
    ideal: int
    classes: tuple[tuple[int, ...], ...]
    quotient: FiniteSemiring
    projection: Hom

    @property
    def labels(self) -> tuple[int, ...]:
        return self.projection.map

    def to_dict(self) -> dict:
        d = self.quotient.to_dict()
        d["projection"] = list(self.projection.map)
        d["classes"] = [list(c) for c in self.classes]
        return d


def bourne_quotient(S: FiniteSemiring, I) -> QuotientSemiring:
    """``S/I`` by the Bourne congruence."""
    m = _ideal_arg(S, I)

    def build():
        lab = bourne_mask_labels(S, m)
        add, mul, bad = quotient_tables(S, lab)
        if bad is not None:
            raise AssertionError(f"Bourne quotient not well defined at {bad}")
        Q = from_tables(add, mul, lab[S.zero], lab[S.one],
                        name=f"{S.name}/{{{','.join(map(str, bits(m)))}}}", family="quotient")
        classes = tuple(tuple(x for x in S.elements if lab[x] == c) for c in range(Q.size))
        return QuotientSemiring(S, m, classes, Q, Hom(S, Q, lab))
    return S.cached(("quotient", m), build)


def lift_ideal(Q: QuotientSemiring, J) -> IdealSet:
    """``J/I`` as an ideal of the quotient; requires ``I ⊆ J``."""
    m = _ideal_arg(Q.base, J)
    if Q.ideal & ~m:
        raise ContractViolation("the quotient ideal must be contained in J")
    return IdealSet(Q.quotient, Q.projection.image(m))


# ---------------------------------------------------------------------------
# localisation


@dataclass(frozen=True, eq=False)
class LocalizedSemiring:
    base: FiniteSemiring
    denominators: MultSet
    pair_class: dict
    reps: tuple[tuple[int, int], ...]
    localized: FiniteSemiring
    canonical: Hom

    def fraction(self, a: int, s: int) -> int:
        return self.pair_class[(a, s)]

    def to_dict(self) -> dict:
        d = self.localized.to_dict()
        d["canonical"] = list(self.canonical.map)
        d["fractions"] = [list(r) for r in self.reps]
        return d


def localize(S: FiniteSemiring, T) -> LocalizedSemiring:
    """``T⁻¹S`` with (a, s) ~ (b, t) iff u·a·t = u·b·s for some u in T."""
    if not isinstance(T, MultSet):
        raise ContractViolation("denominators must be a MultSet")
    if T.semiring is not S:
        raise ContractViolation("multiplicative set belongs to a different semiring")
    if T.mask >> S.zero & 1:
        raise ContractViolation("denominators contain zero; the localisation would be trivial")
    return S.cached(("localize", T.mask), lambda: _localize(S, T))


def _localize(S: FiniteSemiring, T: MultSet) -> LocalizedSemiring:
    M, A = S.M, S.A
    ts = bits(T.mask)
    pairs = [(a, s) for a in S.elements for s in ts]

    def related(p, q):
        (a, s), (b, t) = p, q
        return any(M[u][M[a][t]] == M[u][M[b][s]] for u in ts)

    uf = _UnionFind(len(pairs))
    for i, p in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            if related(p, pairs[j]):
                uf.union(i, j)
    plab = uf.labels()
    for i, p in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            if (plab[i] == plab[j]) != related(p, pairs[j]):
                raise AssertionError(f"fraction relation is not transitive at {p}, {pairs[j]}")

    k = max(plab) + 1
    reps = [None] * k
    for i, p in enumerate(pairs):
        if reps[plab[i]] is None:
            reps[plab[i]] = p
    cls = {p: plab[i] for i, p in enumerate(pairs)}

    def add(p, q):
        (a, s), (b, t) = p, q
        return (A[M[a][t]][M[b][s]], M[s][t])

    def mul(p, q):
        return (M[p[0]][q[0]], M[p[1]][q[1]])

    add_t = np.zeros((k, k), dtype=np.int64)
    mul_t = np.zeros((k, k), dtype=np.int64)
    for c1, p in enumerate(reps):
        for c2, q in enumerate(reps):
            add_t[c1, c2] = cls[add(p, q)]
            mul_t[c1, c2] = cls[mul(p, q)]
    # both operations must be independent of the chosen representatives
    for p in pairs:
        for q in pairs:
            if cls[add(p, q)] != add_t[cls[p], cls[q]] or cls[mul(p, q)] != mul_t[cls[p], cls[q]]:
                raise AssertionError(f"fraction operations not well defined at {p}, {q}")
    L = from_tables(add_t, mul_t, cls[(S.zero, S.one)], cls[(S.one, S.one)],
                    name=f"{S.name}[T={','.join(map(str, ts))}]", family="localized")
    canonical = Hom(S, L, tuple(cls[(x, S.one)] for x in S.elements))
    for t in ts:
        if L.M[cls[(t, S.one)]][cls[(S.one, t)]] != L.one:
            raise AssertionError(f"denominator {t} is not a unit")
    return LocalizedSemiring(S, T, cls, tuple(reps), L, canonical)


def ideal_of_fractions(L: LocalizedSemiring, I) -> IdealSet:
    """``T⁻¹I = {i/s | i ∈ I, s ∈ T}``."""
    return IdealSet(L.localized, fractions_mask(L, _ideal_arg(L.base, I)))


def fractions_mask(L: LocalizedSemiring, I: int) -> int:
    return mask_of(L.pair_class[(i, s)] for i in bits(I) for s in L.denominators.members)


# ---------------------------------------------------------------------------
# extension and contraction


def contract(h: Hom, J) -> IdealSet:
    """``J^c`` = preimage of the k-ideal ``J``."""
    m = _ideal_arg(h.target, J)
    if k_witness(h.target, m) is not None:
        raise ContractViolation(f"contraction expects a k-ideal, {bits(m)} is not one")
    return IdealSet(h.source, h.preimage(m))


def extend(h: Hom, I) -> IdealSet:
    """``I^e = C_k(<h(I)>)`` for a k-ideal ``I``."""
    m = _ideal_arg(h.source, I)
    if k_witness(h.source, m) is not None:
        raise ContractViolation(f"extension expects a k-ideal, {bits(m)} is not one")
    return IdealSet(h.target, extend_mask(h, m))


def extend_mask(h: Hom, I: int) -> int:
    T = h.target
    return kclosure_mask(T, gen_mask(T, h.image(I)))


@dataclass(frozen=True)
class SpectralMap:
    hom: Hom
    table: tuple[tuple[int, int], ...]
    surjective: bool
    injective: bool
    findings: tuple = ()

    def to_dict(self) -> dict:
        return {
            "table": [[bits(q), bits(p)] for q, p in self.table],
            "surjective": self.surjective,
            "injective": self.injective,
            "findings": [list(map(_j, f)) for f in self.findings],
        }


def _j(v):
    return list(v) if isinstance(v, (tuple, list)) else v


def spectral_map(h: Hom) -> SpectralMap:
    """``Q ↦ Q^c`` from the k-spectrum of the target to that of the source.

    Findings record any failure of: images are k-prime; P is in the image
    iff ``P^ec = P``; every k-prime contracted iff surjective; every
    k-prime of the target extended implies injective.
    """
    S, T = h.source, h.target
    specS, specT = k_prime_masks(S), k_prime_masks(T)
    table = tuple((Q, h.preimage(Q)) for Q in specT)
    image = {P for _, P in table}
    findings = []
    for Q, P in table:
        if P not in specS:
            findings.append(("image-not-k-prime", bits(Q), bits(P)))
    for P in specS:
        ec = h.preimage(extend_mask(h, P))
        if (P in image) != (ec == P):
            findings.append(("part1", bits(P)))
    surjective = set(specS) <= image
    injective = len(image) == len(table)
    contracted = {h.preimage(J) for J in k_ideal_masks(T)}
    if all(P in contracted for P in specS) != surjective:
        findings.append(("part2", surjective))
    extended = {extend_mask(h, I) for I in k_ideal_masks(S)}
    if all(Q in extended for Q in specT) and not injective:
        findings.append(("part3",))
    return SpectralMap(h, table, surjective, injective, tuple(findings))


def restricted_hom_property(h: Hom) -> bool:
    """``h(a) = h(b) ≠ 0`` forces ``<a> = <b>``."""
    S = h.source
    from .ideals import principal_mask
    for a in S.elements:
        for b in range(a + 1, S.size):
            if h(a) == h(b) != h.target.zero and principal_mask(S, a) != principal_mask(S, b):
                return False
    return True


def hom_contraction_findings(h: Hom) -> list:
    """k-primes contract to k-primes; for surjective h with the restricted
    property, k-strongly irreducible ideals contract to k-strongly irreducible ones."""
    S, T = h.source, h.target
    out = []
    specS = set(k_prime_masks(S))
    for Q in k_prime_masks(T):
        if h.preimage(Q) not in specS:
            out.append(("k-prime-contraction", bits(Q)))
    if h.surjective and restricted_hom_property(h):
        siS = set(k_si_masks(S))
        for J in k_si_masks(T):
            if h.preimage(J) not in siS:
                out.append(("k-si-contraction", bits(J)))
    return out


# ---------------------------------------------------------------------------
# theorem checks


def quotient_theorems_check(S: FiniteSemiring) -> dict:
    """Findings per quotient statement; every list is empty when all hold."""
    ids = enumerate_ideal_masks(S)
    kids = k_ideal_masks(S)
    si = set(k_si_masks(S))
    kirr = set(k_irreducible_masks(S))
    arithmetic = _arithmetic(S)
    out: dict[str, list] = {k: [] for k in
                            ("well-defined", "quotient-ideal-images", "quotient-intersections", "ksi-descends", "ksi-converse", "zero-kirr")}
    for I in ids:
        try:
            Q = bourne_quotient(S, I)
        except AssertionError as exc:
            out["well-defined"].append((bits(I), str(exc)))
            continue
        lab, R = Q.labels, Q.quotient
        zero_class = Q.projection.preimage(1 << R.zero)
        if zero_class != kclosure_mask(S, I):
            out["quotient-ideal-images"].append(("zero-class-not-closure", bits(I)))
        if any(lab[a] != lab[S.zero] for a in bits(I)):
            out["quotient-ideal-images"].append(("part1", bits(I)))
        if I in kids and zero_class != I:
            out["quotient-ideal-images"].append(("part2", bits(I)))
        above = [J for J in ids if J & I == I]
        kabove = [J for J in kids if J & I == I]
        rk = set(k_ideal_masks(R))
        rsi = set(k_si_masks(R))
        for J in above:
            img = Q.projection.image(J)
            if not is_ideal_mask(R, img):
                out["quotient-ideal-images"].append(("part3-ideal", bits(I), bits(J)))
                continue
            if J in kids and img not in rk:
                out["quotient-ideal-images"].append(("part3-k", bits(I), bits(J)))
            if img >> R.one & 1 and img != R.full:
                out["quotient-ideal-images"].append(("part4", bits(I), bits(J)))
            if J in si and img not in rsi:
                out["ksi-descends"].append((bits(I), bits(J)))
            if arithmetic and J in kids and img in rsi and J not in si:
                out["ksi-converse"].append((bits(I), bits(J)))
        img_of = {J: Q.projection.image(J) for J in kabove}
        for J, K in itertools.combinations_with_replacement(kabove, 2):
            for Lm in kabove:
                if ((img_of[J] & img_of[K]) == img_of[Lm]) != ((J & K) == Lm):
                    out["quotient-intersections"].append((bits(I), bits(J), bits(K), bits(Lm)))
        if I in kids:
            zero_irr = (1 << R.zero) in set(k_irreducible_masks(R))
            if zero_irr != (I in kirr):
                out["zero-kirr"].append((bits(I), I in kirr, zero_irr))
    return out


def _arithmetic(S: FiniteSemiring) -> bool:
    from .ideals import lattice_analysis
    return lattice_analysis(S).arithmetic


def contracted_set(L: LocalizedSemiring, k_only: bool = True) -> tuple[int, ...]:
    """Contractions of the (k-)ideals of ``T⁻¹S``, as sorted bitsets."""
    R = L.localized
    src = k_ideal_masks(R) if k_only else enumerate_ideal_masks(R)
    return tuple(sorted({L.canonical.preimage(J) for J in src}))


def localisation_theorems_check(S: FiniteSemiring, T: MultSet) -> dict:
    """Findings per localisation statement for the denominators ``T``."""
    L = localize(S, T)
    R = L.localized
    h = L.canonical
    Tm = T.mask
    kids = k_ideal_masks(S)
    rk = set(k_ideal_masks(R))
    C = set(contracted_set(L))
    primary = set(k_primary_masks(S))
    siS = set(k_si_masks(S))
    siR = set(k_si_masks(R))
    frac = {I: fractions_mask(L, I) for I in enumerate_ideal_masks(S)}
    keys = ("contracted-fixpoint", "ksi-correspondence", "star-contraction", "fractions-k-ideals", "primary-localisation", "ksi-contraction",
            "ksi-extends", "ksi-restricts", "primary-ksi-correspondence", "spectral-map")
    out: dict[str, list] = {k: [] for k in keys}

    for I in C:
        if h.preimage(frac[I]) != I:
            out["contracted-fixpoint"].append(bits(I))

    # the correspondence between proper k-strongly irreducible ideals
    left = [J for J in siR if J != R.full]
    right = [I for I in siS if I != S.full and I in C and not I & Tm]
    if len(left) != len(right):
        out["ksi-correspondence"].append(("cardinality", len(left), len(right)))
    rset = set(right)
    lset = set(left)
    for J in left:
        c = h.preimage(J)
        if c not in rset or frac[c] != J:
            out["ksi-correspondence"].append(("from-localisation", bits(J)))
    for I in right:
        if frac[I] not in lset or h.preimage(frac[I]) != I:
            out["ksi-correspondence"].append(("from-base", bits(I)))

    for I in kids:
        e = extend_mask(h, I)
        ec = h.preimage(e)
        union = 0
        for s in T.members:
            union |= colon_element_mask(S, I, s)
        if e != frac[I]:
            out["star-contraction"].append(("extension-is-fractions", bits(I)))
        if ec != union:
            out["star-contraction"].append(("ec-union", bits(I)))
        if (e == R.full) != bool(I & Tm):
            out["star-contraction"].append(("unit-iff-meets", bits(I)))
        if frac[I] not in rk:
            out["fractions-k-ideals"].append(("fractions-not-k", bits(I)))
    for J in rk:
        if k_witness(S, h.preimage(J)) is not None:
            out["fractions-k-ideals"].append(("contraction-not-k", bits(J)))

    primR = set(k_primary_masks(R))
    for I in kids:
        if I not in primary:
            continue
        P = radical_mask(S, I)
        if P & Tm:
            continue
        IS = frac[I]
        if IS not in primR:
            out["primary-localisation"].append(("part1", bits(I)))
        if h.preimage(IS) != I:
            out["primary-localisation"].append(("part2", bits(I)))
        if colon_mask(R, IS, frac[P]) != frac[colon_mask(S, I, P)]:
            out["primary-localisation"].append(("part3", bits(I)))
        for J in kids:
            if frac[J] & ~IS == 0 and J & ~I:
                out["primary-localisation"].append(("part4", bits(I), bits(J)))
        if I in siS and IS not in siR:
            out["ksi-extends"].append(bits(I))
        if IS in siR and I not in siS:
            out["ksi-restricts"].append(bits(I))
    for I in kids:
        if frac[I] in siR and h.preimage(frac[I]) not in siS:
            out["ksi-contraction"].append(bits(I))
        if I in siS and I in primary and not I & Tm:
            if frac[I] not in siR or frac[I] not in primR:
                out["primary-ksi-correspondence"].append(("part1", bits(I)))
    if is_von_neumann_regular(S):
        base_side = sorted(I for I in siS if not I & Tm)
        loc_side = sorted(siR)
        if sorted(frac[I] for I in base_side) != loc_side or \
                sorted(h.preimage(J) for J in loc_side) != base_side:
            out["primary-ksi-correspondence"].append(("part2",))
    out["spectral-map"] = [list(f) for f in spectral_map(h).findings]
    return out


def sp_equivalence_sides(S: FiniteSemiring) -> tuple[bool, bool, bool]:
    """The three equivalent conditions on k-primary ideals of S and its localisations at primes."""
    def all_primary_si(X):
        si = set(k_si_masks(X))
        return all(I in si for I in k_primary_masks(X))

    def at(P):
        return localize(S, MultSet(S, S.full & ~P)).localized

    side1 = all_primary_si(S)
    side2 = all(all_primary_si(at(P)) for P in k_prime_masks(S))
    side3 = all(all_primary_si(at(P)) for P in k_maximal_masks(S))
    return side1, side2, side3
