"""One check per acceptance criterion; each prints a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import os
import subprocess
import sys

sys.path.insert(0, os.path.dirname(__file__))

import oracle  # noqa: E402
from kideals.core import bits  # noqa: E402
from kideals.ideals import enumerate_ideal_masks, enumerate_ideal_masks_exhaustive, kclosure_mask  # noqa: E402
from kideals.nat import BoundedOracle, NatIdeal, nat_classify, nat_oracle_findings  # noqa: E402
from kideals.suites import default_corpus, run_suite  # noqa: E402

RESULTS: list[str] = []


def _record(n: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _suites(ids, corpus=None):
    """Per-suite (checked, findings); a vacuous suite counts as a failure here."""
    corpus = corpus if corpus is not None else default_corpus()
    out = {}
    for sid in ids:
        r = run_suite(sid, corpus)
        out[sid] = (r.instances_checked, len(r.findings))
    ok = all(c > 0 and f == 0 for c, f in out.values())
    return ok, out


def _summary(out):
    return ", ".join(f"{sid} {c - f}/{c}" for sid, (c, f) in out.items())


def test_criterion_1_nat_regression_vectors():
    bad = []
    four = nat_classify(NatIdeal(4))
    if not (four.k_strongly_irreducible and not four.k_prime):
        bad.append("4N")
    six = nat_classify(NatIdeal(6))
    if not (six.k_semiprime and not six.k_prime and not six.k_strongly_irreducible):
        bad.append("6N")
    for p in (2, 3, 5):
        sq = nat_classify(NatIdeal(p * p))
        if not (sq.k_primary and not sq.k_prime):
            bad.append(f"{p * p}N")
    # the element-wise oracle must say the same
    f4, f6 = BoundedOracle(64).nat_flags(4), BoundedOracle(144).nat_flags(6)
    if not (f4["strongly_irreducible"] and not f4["prime"]):
        bad.append("oracle 4N")
    if not (f6["semiprime"] and not f6["prime"] and not f6["strongly_irreducible"]):
        bad.append("oracle 6N")
    _record(1, not bad, "4N k-SI not k-prime; 6N k-semiprime not k-prime not k-SI; 4N 9N 25N k-primary not k-prime"
            + (f" (mismatch: {bad})" if bad else ""))


def test_criterion_2_closure_laws():
    corpus = default_corpus()
    ok, out = _suites(["closure-laws"], corpus)
    # independent reference on the smaller instances
    ref_bad = 0
    for S in corpus:
        if S.size <= 6:
            ks = oracle.k_ideals(S)
            for m in enumerate_ideal_masks(S):
                I = frozenset(bits(m))
                least = frozenset.intersection(*[K for K in ks if I <= K])
                if frozenset(bits(kclosure_mask(S, m))) != least or oracle.closure(S, I) != least:
                    ref_bad += 1
    ok = ok and ref_bad == 0 and out["closure-laws"][0] == len(corpus)
    _record(2, ok, f"{_summary(out)}; reference mismatches {ref_bad}")


def test_criterion_3_exchange_principle():
    ok, out = _suites(["exchange-principle"])
    _record(3, ok, _summary(out))


def test_criterion_4_theorem_suites():
    ok, out = _suites(["kmax-implies-kprime", "subtractive-krull", "strongly-subtractive-distributive",
                       "arithmetic-kirr-eq-ksi", "vnr-kprime-eq-kprimary",
                       "weakly-noetherian-kirr-kprimary", "ik-system-equivalence"])
    _record(4, ok, _summary(out))


def test_criterion_5_quotient_suite():
    ok, out = _suites(["bourne-well-defined", "quotient-ideal-images", "quotient-intersections",
                       "ksi-descends", "ksi-converse", "zero-kirr"])
    _record(5, ok, _summary(out))


def test_criterion_6_localisation_suite():
    corpus = [S for S in default_corpus() if S.size <= 9]
    ok, out = _suites(["ksi-correspondence", "contracted-fixpoint", "star-contraction",
                       "fractions-k-ideals", "primary-localisation"], corpus)
    _record(6, ok, _summary(out))


def test_criterion_7_idempotent_suite():
    ok, out = _suites(["saturated-iff-kideal", "order-criteria", "absolute-sandwich",
                       "kmax-ideal-iff-kmax-congruence", "kprime-congruence-irreducible",
                       "kirreducible-ideal-congruence", "excellent-irreducible",
                       "excellent-equals-bourne"])
    _record(7, ok, _summary(out))


def test_criterion_8_oracle_cross_checks():
    nat_found = nat_oracle_findings(60)
    enum_bad = [S.name for S in default_corpus()
                if S.size <= 6 and enumerate_ideal_masks(S) != enumerate_ideal_masks_exhaustive(S)]
    checked = sum(1 for S in default_corpus() if S.size <= 6)
    ok = not nat_found and not enum_bad
    _record(8, ok, f"nat d<=60 at N=4d^2: {len(nat_found)} disagreements; "
            f"enumeration vs subset scan on {checked} instances: {len(enum_bad)} mismatches")


def test_criterion_9_determinism():
    cmd = [sys.executable, "-m", "kideals", "verify", "all", "--corpus", "default"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and runs[0].stdout != b""
    codes = [r.returncode for r in runs]
    _record(9, same and codes == [0, 0],
            f"two runs of verify all --corpus default, {len(runs[0].stdout)} bytes each, "
            f"identical={same}, exit codes {codes}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
