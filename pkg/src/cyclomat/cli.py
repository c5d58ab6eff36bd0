"""Command-line front end.

Subcommands: gen, check-ordering, find-ordering, flower, inflate,
verify, report.  Exit codes: 0 = pass/found/valid, 1 = claim failed /
not found / invalid, 2 = usage or cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import families, harness, io
from .connectivity import classify_flower
from .constructions import TheoremContradiction, inflate
from .cyclic import find_cyclic_ordering, has_cyclic_property, is_t_cyclic_ordering, petals_from_sizes
from .kernel import SizeCapError


def _write_out(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")
    else:
        print(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclomat",
        description="Matroid toolkit for cyclic circuit/cocircuit arrangements.",
    )
    parser.add_argument("--seed", default="none", help="accepted for interface stability; all behavior is deterministic")
    parser.add_argument("--max-n", type=int, default=20, help="ground-set size cap for loaded files (<= 20)")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--out", default=None, help="write output to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named family member")
    gen.add_argument("--family", required=True, choices=families.FAMILY_KINDS)
    gen.add_argument("--r", type=int, required=True)
    gen.add_argument("--n", type=int, default=None, help="ground-set size (uniform only)")
    gen.add_argument("--matroid-out", required=True)
    gen.add_argument("--ordering-out", default=None)

    check = sub.add_parser("check-ordering", help="test an ordering against a matroid")
    check.add_argument("--matroid", required=True)
    check.add_argument("--ordering", required=True)
    check.add_argument("--t", type=int, required=True)
    check.add_argument("--mode", choices=("property", "t_cyclic"), default="t_cyclic")

    find = sub.add_parser("find-ordering", help="search for an ordering")
    find.add_argument("--matroid", required=True)
    find.add_argument("--t", type=int, required=True)
    find.add_argument("--mode", choices=("property", "t_cyclic"), default="t_cyclic")
    find.add_argument("--ordering-out", default=None)

    flower = sub.add_parser("flower", help="classify a concatenation as a flower")
    flower.add_argument("--matroid", required=True)
    flower.add_argument("--ordering", required=True)
    flower.add_argument("--petal-sizes", required=True, help="comma-separated sizes, e.g. 2,2,2,2")
    flower.add_argument("--k", type=int, required=True)

    infl = sub.add_parser("inflate", help="truncate + Higgs-lift, certifying (t+2)-cyclicity")
    infl.add_argument("--matroid", required=True)
    infl.add_argument("--ordering", required=True)
    infl.add_argument("--t", type=int, required=True)
    infl.add_argument("--iterations", type=int, default=1)
    infl.add_argument("--matroid-out", default=None)
    infl.add_argument("--trace-out", default=None)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("--suite", required=True, choices=harness.SUITE_NAMES)
    verify.add_argument("--r-min", type=int, default=3)
    verify.add_argument("--r-max", type=int, default=6)
    verify.add_argument("--t", type=int, default=None)
    verify.add_argument("--families", default=None, help="comma-separated family filter")

    rep = sub.add_parser("report", help="re-render a saved report file")
    rep.add_argument("--in", dest="infile", required=True)
    return parser


def _cmd_gen(args) -> int:
    if args.family == "uniform":
        if args.n is None:
            raise ValueError("uniform needs --n")
        matroid = families.uniform(args.r, args.n)
        io.write_json(args.matroid_out, io.matroid_to_dict(matroid))
        return 0
    maker = {"wheel": families.wheel, "whirl": families.whirl, "spike": families.spike, "swirl": families.swirl}
    bundle = maker[args.family](args.r)
    io.write_json(args.matroid_out, io.matroid_to_dict(bundle.matroid))
    ordering_out = args.ordering_out or f"{args.matroid_out}.ordering.json"
    io.write_json(ordering_out, io.ordering_to_dict(bundle.ordering, bundle.t, bundle.parity))
    return 0


def _cmd_check(args) -> int:
    matroid = io.matroid_from_dict(io.read_json(args.matroid), max_n=args.max_n)
    ordering, _, _ = io.ordering_from_dict(io.read_json(args.ordering))
    if args.mode == "property":
        ok = has_cyclic_property(matroid, ordering, args.t)
        payload = {"mode": "property", "t": args.t, "valid": ok}
    else:
        verdict = is_t_cyclic_ordering(matroid, ordering, args.t)
        ok = verdict.parity != "none"
        payload = {"mode": "t_cyclic", "t": args.t, "valid": ok, "parity": verdict.parity,
                   "anchor": verdict.anchor, "both_clauses": verdict.both}
    _write_out(json.dumps(payload, indent=2) if args.format == "json" else
               ("valid" if ok else "invalid") + (f" ({payload.get('parity')})" if "parity" in payload else ""),
               args.out)
    return 0 if ok else 1


def _cmd_find(args) -> int:
    matroid = io.matroid_from_dict(io.read_json(args.matroid), max_n=args.max_n)
    found = find_cyclic_ordering(matroid, args.t, mode=args.mode)
    if found is None:
        _write_out("not found" if args.format == "text" else json.dumps({"found": False}), args.out)
        return 1
    verdict = is_t_cyclic_ordering(matroid, found, args.t)
    payload = io.ordering_to_dict(found, args.t, verdict.parity)
    if args.ordering_out:
        io.write_json(args.ordering_out, payload)
    _write_out(json.dumps({"found": True, **payload}, indent=2) if args.format == "json"
               else f"found: {list(found.seq)} (parity: {verdict.parity})", args.out)
    return 0


def _cmd_flower(args) -> int:
    matroid = io.matroid_from_dict(io.read_json(args.matroid), max_n=args.max_n)
    ordering, _, _ = io.ordering_from_dict(io.read_json(args.ordering))
    sizes = [int(s) for s in args.petal_sizes.split(",") if s]
    petals = petals_from_sizes(ordering, sizes)
    verdict = classify_flower(matroid, petals, args.k)
    payload = {
        "k": args.k,
        "petal_sizes": sizes,
        "verdict": verdict.verdict,
        "evidence": [{"petals": list(indices), "lambda": value} for indices, value in verdict.evidence],
    }
    _write_out(json.dumps(payload, indent=2), args.out)
    return 0 if verdict.verdict != "not_a_flower" else 1


def _cmd_inflate(args) -> int:
    matroid = io.matroid_from_dict(io.read_json(args.matroid), max_n=args.max_n)
    ordering, _, _ = io.ordering_from_dict(io.read_json(args.ordering))
    t = args.t
    traces = []
    current = matroid
    for _ in range(args.iterations):
        trace = inflate(current, ordering, t)
        traces.append(trace)
        current = trace.output
        t += 2
    if args.matroid_out:
        io.write_json(args.matroid_out, io.matroid_to_dict(current))
    trace_payload = [
        {
            "t_in": tr.t_in,
            "t_out": tr.t_out,
            "parity": tr.parity,
            "rank_in": tr.input.r,
            "rank_out": tr.output.r,
            "merged_cocircuit_witnesses": [
                {"start": start, "window": list(window)} for start, window in tr.merged_cocircuit_witnesses
            ],
            "merged_circuit_witnesses": [
                {"start": start, "window": list(window)} for start, window in tr.merged_circuit_witnesses
            ],
        }
        for tr in traces
    ]
    if args.trace_out:
        io.write_json(args.trace_out, {"steps": trace_payload})
    _write_out(json.dumps({"steps": trace_payload}, indent=2) if args.format == "json"
               else f"inflated to {t}-cyclic ({traces[-1].parity}); rank {current.r} on {current.n} elements",
               args.out)
    return 0


def _cmd_verify(args) -> int:
    fams = tuple(f for f in args.families.split(",") if f) if args.families else ()
    spec = harness.SuiteSpec(args.suite, families=fams, r_min=args.r_min, r_max=args.r_max, t=args.t)
    report = harness.run_suite(spec)
    _write_out(harness.emit_report(report, args.format), args.out)
    return 0 if report.all_passed else 1


def _cmd_report(args) -> int:
    from .report import VerificationReport

    report = VerificationReport.from_json(open(args.infile, encoding="utf-8").read())
    _write_out(harness.emit_report(report, args.format), args.out)
    return 0 if report.all_passed else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "check-ordering": _cmd_check,
    "find-ordering": _cmd_find,
    "flower": _cmd_flower,
    "inflate": _cmd_inflate,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.max_n > 20:
        parser.error("--max-n cannot exceed 20")
    try:
        return _COMMANDS[args.command](args)
    except (SizeCapError, ValueError, TheoremContradiction, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
