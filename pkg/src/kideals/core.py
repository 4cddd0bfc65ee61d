"""Finite commutative semirings stored as dense operation tables.

A :class:`FiniteSemiring` has carrier ``{0, ..., size-1}``; subsets of the
carrier are encoded everywhere else in the package as Python ``int`` bitsets
(bit ``x`` set means element ``x`` is a member).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BudgetExceededError,
    MalformedInputError,
    NotApplicableError,
    SemiringAxiomError,
)

MAX_SIZE = 256
DEFAULT_BUDGET = 50_000_000


class Budget:
    """Operation counter for exhaustive searches.

    One budget may be threaded through several calls; it raises
    :class:`BudgetExceededError` as soon as the running total passes ``limit``.
    """

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1, what: str = "") -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceededError(self.limit, what)


def _budget(budget: Budget | None) -> Budget:
    return Budget() if budget is None else budget


# ---------------------------------------------------------------------------
# bitset helpers


def bits(mask: int) -> list[int]:
    """Members of a bitset in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"axiom": a, "witness": list(w)} for a, w in self.violations],
        }


def _as_table(table, name: str) -> np.ndarray:
    try:
        rows = [list(r) for r in table]
    except TypeError as exc:
        raise MalformedInputError(f"{name} table is not a list of rows") from exc
    n = len(rows)
    if n == 0:
        raise MalformedInputError(f"{name} table is empty")
    if n > MAX_SIZE:
        raise MalformedInputError(f"carriers larger than {MAX_SIZE} are not supported")
    for r in rows:
        if len(r) != n:
            raise MalformedInputError(f"{name} table is not square")
        for v in r:
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise MalformedInputError(f"{name} table holds a non-integer entry {v!r}")
            if not 0 <= v < n:
                raise MalformedInputError(f"{name} table entry {v} out of range [0, {n})")
    return np.array(rows, dtype=np.uint8)


def _check_shapes(add, mul, zero, one) -> tuple[np.ndarray, np.ndarray]:
    a = _as_table(add, "add")
    m = _as_table(mul, "mul")
    if a.shape != m.shape:
        raise MalformedInputError("add and mul tables differ in size")
    n = a.shape[0]
    for label, v in (("zero", zero), ("one", one)):
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < n:
            raise MalformedInputError(f"{label}={v!r} is not a carrier index")
    return a, m


def _first(cond: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(cond)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def validate_semiring(add, mul, zero: int, one: int) -> ValidationReport:
    """Scan every commutative-semiring axiom exhaustively.

    Each violated axiom is reported once, with its lexicographically least
    witness.  Ragged or out-of-range input raises
    :class:`MalformedInputError` instead.
    """
    a, m = _check_shapes(add, mul, zero, one)
    a = a.astype(np.intp)
    m = m.astype(np.intp)
    n = a.shape[0]
    idx = np.arange(n)
    found: list[tuple[str, tuple[int, ...]]] = []

    def record(name, cond):
        w = _first(cond)
        if w is not None:
            found.append((name, w))

    record("add-commutativity", a != a.T)
    record("mul-commutativity", m != m.T)
    # (x+y)+z vs x+(y+z), indexed [x, y, z]
    record("add-associativity", _assoc_fail(a))
    record("mul-associativity", _assoc_fail(m))
    record("add-identity", a[zero, :] != idx)
    record("mul-identity", m[one, :] != idx)
    record("zero-absorbing", m[zero, :] != zero)
    # x*(y+z) vs x*y + x*z, indexed [x, y, z]
    lhs = m[:, a]
    rhs = a[m[:, :, None], m[:, None, :]]
    record("distributivity", lhs != rhs)
    return ValidationReport(tuple(found))


def _assoc_fail(t: np.ndarray) -> np.ndarray:
    # lhs[x, y, z] = (x.y).z ; rhs[x, y, z] = x.(y.z)
    lhs = t[t, :]
    rhs = t[:, t]
    return lhs != rhs


# ---------------------------------------------------------------------------
# the semiring type


@dataclass(frozen=True, eq=False)
class FiniteSemiring:
    """Commutative semiring on ``{0..size-1}`` given by its two tables.

    Instances compare by identity.  Use :func:`from_tables` to build one with
    a full axiom scan; the plain constructor only checks shapes.
    """

    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    name: str = ""
    family: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        a, m = _check_shapes(self.add, self.mul, self.zero, self.one)
        a.setflags(write=False)
        m.setflags(write=False)
        object.__setattr__(self, "add", a)
        object.__setattr__(self, "mul", m)
        object.__setattr__(self, "zero", int(self.zero))
        object.__setattr__(self, "one", int(self.one))
        # python-level copies: scalar numpy indexing is far slower than lists
        object.__setattr__(self, "A", tuple(tuple(int(v) for v in r) for r in a))
        object.__setattr__(self, "M", tuple(tuple(int(v) for v in r) for r in m))

    @property
    def size(self) -> int:
        return self.add.shape[0]

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    @property
    def elements(self) -> range:
        return range(self.size)

    def plus(self, x: int, y: int) -> int:
        return self.A[x][y]

    def times(self, x: int, y: int) -> int:
        return self.M[x][y]

    def power(self, x: int, n: int) -> int:
        r = self.one
        for _ in range(n):
            r = self.M[r][x]
        return r

    def cached(self, key, compute):
        try:
            return self._cache[key]
        except KeyError:
            val = self._cache[key] = compute()
            return val

    def multiples(self, x: int) -> int:
        """Bitset of ``{x*s | s in S}``."""
        rows = self.cached("multiples", lambda: tuple(mask_of(r) for r in self.M))
        return rows[x]

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "add": [list(r) for r in self.A],
            "mul": [list(r) for r in self.M],
            "zero": self.zero,
            "one": self.one,
            "name": self.name,
        }

    def __repr__(self):
        return f"FiniteSemiring({self.name or '?'}, size={self.size})"


def from_tables(add, mul, zero: int, one: int, name: str = "", family: str = "") -> FiniteSemiring:
    """Build a semiring, raising :class:`SemiringAxiomError` if any axiom fails."""
    report = validate_semiring(add, mul, zero, one)
    if not report.valid:
        raise SemiringAxiomError(report)
    return FiniteSemiring(add, mul, zero, one, name=name, family=family)


def from_json(doc: dict | str) -> FiniteSemiring:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedInputError("semiring document must be a JSON object")
    missing = [k for k in ("size", "add", "mul", "zero", "one") if k not in doc]
    if missing:
        raise MalformedInputError(f"semiring document lacks fields {missing}")
    S = from_tables(doc["add"], doc["mul"], doc["zero"], doc["one"],
                    name=str(doc.get("name", "")), family=str(doc.get("family", "")))
    if S.size != doc["size"]:
        raise MalformedInputError(f"size field {doc['size']} does not match tables ({S.size})")
    return S


def load(path: str | Path) -> FiniteSemiring:
    return from_json(Path(path).read_text())


def dumps(S: FiniteSemiring) -> str:
    return json.dumps(S.to_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# generator families


def make_truncated_nat(cap: int) -> FiniteSemiring:
    """(N, +, *) with both operations clamped at ``cap``."""
    if cap < 1:
        raise MalformedInputError("cap must be at least 1")
    r = range(cap + 1)
    add = [[min(a + b, cap) for b in r] for a in r]
    mul = [[min(a * b, cap) for b in r] for a in r]
    return from_tables(add, mul, 0, 1, name=f"N{cap}", family="truncated-nat")


def make_boolean() -> FiniteSemiring:
    return from_tables([[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1, name="B1", family="chain")


def make_chain_lattice(n: int) -> FiniteSemiring:
    """The n-element chain as a semiring with join as + and meet as *."""
    if n < 2:
        raise MalformedInputError("a chain needs at least 2 elements")
    r = range(n)
    add = [[max(a, b) for b in r] for a in r]
    mul = [[min(a, b) for b in r] for a in r]
    return from_tables(add, mul, 0, n - 1, name=f"C{n}", family="chain")


def make_tropical(cap: int) -> FiniteSemiring:
    """Min-plus on ``{0..cap}`` where ``cap`` stands in for infinity.

    Addition is ``min`` (identity ``cap``), multiplication is addition
    saturated at ``cap`` (identity ``0``).
    """
    if cap < 1:
        raise MalformedInputError("cap must be at least 1")
    r = range(cap + 1)
    add = [[min(a, b) for b in r] for a in r]
    mul = [[min(a + b, cap) for b in r] for a in r]
    return from_tables(add, mul, cap, 0, name=f"T{cap}[inf={cap}]", family="tropical")


def make_zn_ring(n: int) -> FiniteSemiring:
    if n < 2:
        raise MalformedInputError("n must be at least 2")
    r = range(n)
    add = [[(a + b) % n for b in r] for a in r]
    mul = [[(a * b) % n for b in r] for a in r]
    return from_tables(add, mul, 0, 1, name=f"Z{n}", family="ring")


def make_product(S1: FiniteSemiring, S2: FiniteSemiring) -> FiniteSemiring:
    """Componentwise product; pair ``(i, j)`` is carrier index ``i*|S2| + j``."""
    n2 = S2.size
    pairs = list(itertools.product(S1.elements, S2.elements))
    if len(pairs) > MAX_SIZE:
        raise MalformedInputError(f"product exceeds {MAX_SIZE} elements")
    enc = lambda i, j: i * n2 + j  # noqa: E731
    add = [[enc(S1.A[a][c], S2.A[b][d]) for c, d in pairs] for a, b in pairs]
    mul = [[enc(S1.M[a][c], S2.M[b][d]) for c, d in pairs] for a, b in pairs]
    return from_tables(add, mul, enc(S1.zero, S2.zero), enc(S1.one, S2.one),
                       name=f"{S1.name}x{S2.name}", family="product")


def product_index(S2: FiniteSemiring, i: int, j: int) -> int:
    return i * S2.size + j


# ---------------------------------------------------------------------------
# structural predicates


def is_additively_idempotent(S: FiniteSemiring) -> bool:
    return all(S.A[x][x] == x for x in S.elements)


def is_multiplicatively_idempotent(S: FiniteSemiring) -> bool:
    return all(S.M[x][x] == x for x in S.elements)


def is_von_neumann_regular(S: FiniteSemiring) -> bool:
    M = S.M
    return all(any(M[M[a][a]][x] == a for x in S.elements) for a in S.elements)


def is_cancellative(S: FiniteSemiring) -> bool:
    """Additive cancellation: a+b = a+c forces b = c."""
    return all(len(set(row)) == S.size for row in S.A)


def is_conic(S: FiniteSemiring) -> bool:
    """Zero-sum free: a+b = 0 forces a = 0."""
    z = S.zero
    return all(S.A[a][b] != z for a in S.elements for b in S.elements if a != z)


def is_semidomain(S: FiniteSemiring) -> bool:
    """ab = ac with a non-zero forces b = c."""
    return all(len(set(S.M[a])) == S.size for a in S.elements if a != S.zero)


def is_bounded_distributive_lattice(S: FiniteSemiring) -> bool:
    return (is_additively_idempotent(S) and is_multiplicatively_idempotent(S)
            and all(S.A[S.one][x] == S.one for x in S.elements))


# ---------------------------------------------------------------------------
# natural order


@dataclass(frozen=True, eq=False)
class NaturalOrder:
    semiring: FiniteSemiring
    leq: np.ndarray

    def __call__(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])


def natural_order(S: FiniteSemiring) -> NaturalOrder:
    """``x <= y`` iff ``x + y == y``; defined for idempotent addition only."""
    if not is_additively_idempotent(S):
        raise NotApplicableError(f"{S.name}: natural order needs idempotent addition")

    def build():
        leq = S.add == np.arange(S.size)[None, :]
        leq.setflags(write=False)
        return NaturalOrder(S, leq)

    return S.cached("natural_order", build)


# ---------------------------------------------------------------------------
# homomorphisms


def hom_violations(source: FiniteSemiring, target: FiniteSemiring, f: Sequence[int]) -> list:
    """Every failed preservation equation, in lexicographic order."""
    out = []
    if len(f) != source.size or any(not 0 <= v < target.size for v in f):
        return [("shape", ())]
    if f[source.zero] != target.zero:
        out.append(("zero", (source.zero,)))
    if f[source.one] != target.one:
        out.append(("one", (source.one,)))
    for x in source.elements:
        for y in source.elements:
            if f[source.A[x][y]] != target.A[f[x]][f[y]]:
                out.append(("add", (x, y)))
            if f[source.M[x][y]] != target.M[f[x]][f[y]]:
                out.append(("mul", (x, y)))
    return out


@dataclass(frozen=True)
class Hom:
    source: FiniteSemiring
    target: FiniteSemiring
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        bad = hom_violations(self.source, self.target, self.map)
        if bad:
            raise MalformedInputError(f"not a homomorphism: {bad[0]}")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def image(self, mask: int) -> int:
        return mask_of(self.map[x] for x in bits(mask))

    def preimage(self, mask: int) -> int:
        return mask_of(x for x, y in enumerate(self.map) if mask >> y & 1)

    @property
    def surjective(self) -> bool:
        return len(set(self.map)) == self.target.size


def identity_hom(S: FiniteSemiring) -> Hom:
    return Hom(S, S, tuple(S.elements))


def enumerate_homs(S: FiniteSemiring, T: FiniteSemiring, budget: Budget | None = None) -> list[Hom]:
    """All homomorphisms ``S -> T`` preserving both operations and constants.

    Backtracks over images of a generating sequence; after each choice the
    partial map is closed under + and *, pruning on the first clash.
    """
    budget = _budget(budget)
    n = S.size
    A, M, TA, TM = S.A, S.M, T.A, T.M
    results: list[tuple[int, ...]] = []

    def propagate(f: list, frontier: list) -> bool:
        # close the partial map: any pair of assigned elements fixes its sum and product
        assigned = [x for x in range(n) if f[x] is not None]
        queue = list(frontier)
        while queue:
            x = queue.pop()
            for y in list(assigned):
                budget.spend(1, "hom search")
                for z, w in ((A[x][y], TA[f[x]][f[y]]), (M[x][y], TM[f[x]][f[y]])):
                    if f[z] is None:
                        f[z] = w
                        assigned.append(z)
                        queue.append(z)
                    elif f[z] != w:
                        return False
        return True

    f0: list = [None] * n
    f0[S.zero] = T.zero
    if f0[S.one] is not None and f0[S.one] != T.one:
        return []
    f0[S.one] = T.one
    # the additive closure of 1 is forced, so it is propagated before any choice
    if not propagate(f0, sorted({S.zero, S.one})):
        return []

    def search(f: list):
        free = [x for x in range(n) if f[x] is None]
        if not free:
            results.append(tuple(f))
            return
        g = free[0]
        for img in range(T.size):
            budget.spend(1, "hom search")
            g_map = list(f)
            g_map[g] = img
            if propagate(g_map, [g]):
                search(g_map)

    search(f0)
    return [Hom(S, T, r) for r in sorted(results)]
