"""Command-line workbench.

Output is JSON on standard out unless ``--pretty`` is given.  Exit codes:
0 success with no findings, 1 findings reported, 2 usage or input error,
3 operation budget exceeded (a partial report is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import nat
from .classify import classify_ideal
from .congruence import bourne_congruence, congruence_profile, enumerate_congruences
from .core import Budget, DEFAULT_BUDGET, bits, from_tables, is_additively_idempotent, validate_semiring
from .errors import BudgetExceededError, KIdealError, MalformedInputError
from .ideals import (
    as_mask,
    enumerate_ideal_masks,
    generate_ideal,
    is_ideal_mask,
    is_k_mask,
    is_strong_ideal,
    k_closure,
    k_prime_masks,
    k_radical,
    lattice_analysis,
    mult_set,
    saturated_closure,
)
from .quotient import bourne_quotient, localize
from .suites import REGISTRY, build_corpus, reports_json, run_all

COMMANDS = ("validate", "generate", "ideals", "classify", "closure", "radical", "quotient",
            "localize", "congruences", "nat", "verify")
NAT_ACTIONS = ("classify", "ops", "radical", "lcm", "decompose", "prime-element", "localize", "oracle")


def _indices(text: Optional[str], flag: str) -> list[int]:
    if text is None or text.strip() == "":
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise MalformedInputError(f"{flag} expects comma-separated indices, got {text!r}") from None


def _read_doc(path: Optional[str]) -> dict:
    if not path:
        raise MalformedInputError("--semiring <path.json> is required")
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"cannot read {path!r}: {exc}") from None
    if not isinstance(doc, dict) or any(k not in doc for k in ("add", "mul", "zero", "one")):
        raise MalformedInputError(f"{path!r} is not a semiring table document")
    return doc


def _semiring(args):
    doc = _read_doc(args.semiring)
    return from_tables(doc["add"], doc["mul"], doc["zero"], doc["one"],
                       name=str(doc.get("name", "")), family=str(doc.get("family", "")))


def _ideal(S, args):
    els = _indices(args.ideal, "--ideal")
    m = as_mask(S, els)
    if not is_ideal_mask(S, m):
        raise MalformedInputError(f"{sorted(els)} is not an ideal of {S.name}; "
                                  f"the ideal it generates is {generate_ideal(S, els).members}")
    return m


# ---------------------------------------------------------------------------
# subcommands, each returning a JSON-ready document


def cmd_validate(args, budget):
    doc = _read_doc(args.semiring)
    rep = validate_semiring(doc["add"], doc["mul"], doc["zero"], doc["one"])
    return rep.to_dict(), not rep.valid


def cmd_generate(args, budget):
    if not args.seed:
        raise MalformedInputError("--seed <spec> is required, e.g. chain:3 or nat:1-4")
    corpus = build_corpus(args.seed)
    docs = [S.to_dict() for S in corpus]
    return (docs[0] if len(docs) == 1 else docs), False


def cmd_ideals(args, budget):
    S = _semiring(args)
    ids = enumerate_ideal_masks(S, budget)
    rows = [{"members": bits(m), "k_ideal": is_k_mask(S, m), "strong": is_strong_ideal(S, m),
             "k_prime": m in set(k_prime_masks(S))} for m in ids]
    return {"semiring": S.name, "ideals": rows, "lattice": lattice_analysis(S, budget).to_dict()}, False


def cmd_classify(args, budget):
    S = _semiring(args)
    masks = [_ideal(S, args)] if args.ideal is not None else list(enumerate_ideal_masks(S, budget))
    profiles = [classify_ideal(S, m, budget) for m in masks]
    docs = [p.to_dict() for p in profiles]
    findings = any(p.findings for p in profiles)
    return (docs[0] if args.ideal is not None else docs), findings


def cmd_closure(args, budget):
    S = _semiring(args)
    m = _ideal(S, args)
    out = {"semiring": S.name, "ideal": bits(m), "k_closure": k_closure(S, m).members}
    if is_additively_idempotent(S):
        out["saturation"] = saturated_closure(S, m).members
    return out, False


def cmd_radical(args, budget):
    S = _semiring(args)
    m = _ideal(S, args)
    r = k_radical(S, m)
    above = [bits(P) for P in k_prime_masks(S) if P & m == m]
    out = {"semiring": S.name, "ideal": bits(m), "k_radical": r.members, "k_primes_above": above}
    if not above:
        out["note"] = "no k-prime contains the ideal; the empty intersection is the whole semiring"
    return out, False


def cmd_quotient(args, budget):
    S = _semiring(args)
    Q = bourne_quotient(S, _ideal(S, args))
    return Q.to_dict(), False


def cmd_localize(args, budget):
    S = _semiring(args)
    T = mult_set(S, _indices(args.denoms, "--denoms"))
    out = localize(S, T).to_dict()
    out["denominators"] = list(T.members)
    return out, False


def cmd_congruences(args, budget):
    S = _semiring(args)
    if args.ideal is not None:
        theta = bourne_congruence(S, _ideal(S, args))
        return congruence_profile(S, theta).to_dict(), False
    cs = enumerate_congruences(S, budget)
    return {"semiring": S.name, "count": len(cs),
            "congruences": [congruence_profile(S, c).to_dict() for c in cs]}, False


def _nat_pair(args):
    gens = _indices(args.nat_ideal, "--nat-ideal")
    if not gens:
        raise MalformedInputError("--nat-ideal d is required")
    return gens


def cmd_nat(args, budget):
    action = args.action
    if args.trop_ideal is not None:
        I = nat.parse_trop(args.trop_ideal)
        if action == "classify":
            return nat.trop_classify(I).to_dict(), False
        if action == "lcm":
            N = args.bound or 20
            return {"ideal": str(I), "bound": N, "criterion": nat.trop_lcm_criterion(I, N)}, False
        if action == "oracle":
            N = args.bound or 24
            found = nat.trop_oracle_check(I.threshold, N)
            return {"ideal": str(I), "bound": N, "findings": found}, bool(found)
        raise MalformedInputError(f"action {action!r} is not available for tropical ideals")
    if action == "localize":
        rep = nat.nat_localisation_correspondence(_indices(args.denoms, "--denoms"))
        return rep, bool(rep["findings"])
    gens = _nat_pair(args)
    I = nat.NatIdeal(gens[0])
    if action == "classify":
        return nat.nat_classify(I).to_dict(), False
    if action == "ops":
        if len(gens) != 2:
            raise MalformedInputError("ops expects --nat-ideal d,e")
        J = nat.NatIdeal(gens[1])
        ops = nat.nat_ops(I, J)
        return {"left": str(I), "right": str(J),
                "sum_k_closure": str(ops["sum_k_closure"]), "product": str(ops["product"]),
                "intersection": str(ops["intersection"]),
                "radical": [str(r) for r in ops["radical"]]}, False
    if action == "radical":
        return {"ideal": str(I), "k_radical": str(nat.nat_radical(I))}, False
    if action == "lcm":
        N = args.bound or 24
        holds, w = nat.nat_lcm_criterion(I, N)
        return {"ideal": str(I), "bound": N, "criterion": holds,
                "witness": list(w) if w else None}, False
    if action == "decompose":
        return {"ideal": str(I), "components": [str(P) for P in nat.nat_primary_decomposition(I)]}, False
    if action == "prime-element":
        return {"ideal": str(I), "holds": nat.nat_prime_element_theorems(I)}, False
    if action == "oracle":
        found = nat.nat_oracle_check(I.generator)
        return {"ideal": str(I), "bound": max(4 * I.generator ** 2, 16),
                "findings": [list(f) for f in found]}, bool(found)
    raise MalformedInputError(f"unknown nat action {action!r}")


def cmd_verify(args, budget):
    corpus_spec = args.corpus or "default"
    corpus = build_corpus(corpus_spec)
    if args.suite == "all":
        ids = list(REGISTRY)
    elif args.suite in REGISTRY:
        ids = [args.suite]
    else:
        raise MalformedInputError(f"unknown suite {args.suite!r}; known: all, {', '.join(REGISTRY)}")
    try:
        reports = run_all(corpus, ids, budget)
    except BudgetExceededError as exc:
        exc.corpus_spec = corpus_spec
        raise
    return ("verify", reports, corpus_spec), any(r.findings for r in reports)


HANDLERS = {
    "validate": cmd_validate, "generate": cmd_generate, "ideals": cmd_ideals,
    "classify": cmd_classify, "closure": cmd_closure, "radical": cmd_radical,
    "quotient": cmd_quotient, "localize": cmd_localize, "congruences": cmd_congruences,
    "nat": cmd_nat, "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# rendering


def _pretty(doc, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                          (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_pretty(item, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(item, ensure_ascii=False)}")
    else:
        lines.append(f"{pad}{json.dumps(doc, ensure_ascii=False)}")
    return lines


def _render_reports(reports, corpus_spec: str, pretty: bool) -> str:
    if not pretty:
        return reports_json(reports, corpus_spec)
    lines = [f"corpus: {corpus_spec}"]
    for r in reports:
        lines.append(f"{r.status.upper():8s} {r.suite_id:36s} {r.passes}/{r.instances_checked}")
        for inst, w in r.findings:
            lines.append(f"         finding on {inst}: {json.dumps(w, ensure_ascii=False)}")
    lines.append(f"total findings: {sum(len(r.findings) for r in reports)}")
    return "\n".join(lines)


def _render(doc, pretty: bool) -> str:
    if isinstance(doc, tuple) and doc and doc[0] == "verify":
        _, reports, spec = doc
        return _render_reports(reports, spec, pretty)
    if pretty:
        return "\n".join(_pretty(doc))
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semiring", help="semiring table document (JSON)")
    common.add_argument("--ideal", help="comma-separated element indices of an ideal")
    common.add_argument("--denoms", help="comma-separated denominators (primes for nat localize)")
    common.add_argument("--corpus", help="corpus spec: default, default:<filter>, tokens or a JSON path")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="operation budget")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--seed", help="generator spec, e.g. chain:3, nat:1-4, product:boolean,chain:3")
    common.add_argument("--nat-ideal", help="generator d of dN (or d,e for ops)")
    common.add_argument("--trop-ideal", help="tropical threshold t or inf")
    common.add_argument("--bound", type=int, help="sample bound for nat criteria")

    p = argparse.ArgumentParser(prog="kideals", description="k-ideal workbench for finite semirings")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common], help=f"{name} subcommand")
        if name == "nat":
            sp.add_argument("action", choices=NAT_ACTIONS)
        if name == "verify":
            sp.add_argument("suite", help="suite id or 'all'")
    return p


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    budget = Budget(args.budget)
    try:
        doc, found = HANDLERS[args.command](args, budget)
    except BudgetExceededError as exc:
        partial = getattr(exc, "partial", None)
        if isinstance(partial, list):
            text = _render_reports(partial, getattr(exc, "corpus_spec", args.corpus or "default"),
                                   args.pretty)
        else:
            text = _render({"error": "budget-exceeded", "message": str(exc), "limit": exc.limit}, args.pretty)
        print(text)
        return 3
    except KIdealError as exc:
        print(_render({"error": type(exc).__name__, "message": str(exc)}, args.pretty))
        return 2
    print(_render(doc, args.pretty))
    return 1 if found else 0


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
