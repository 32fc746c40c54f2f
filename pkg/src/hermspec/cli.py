"""Command-line entry point: ``hermspec <command> ...`` (or ``python3 -m hermspec``).

Exit codes: 0 success, 1 a check failed (verify, or ``charpoly --method both`` disagreeing),
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .classify import classify_eq2, classify_le2
from .enumeration import ScopeTooLarge
from .families import FamilyError, SignClass, Unrealizable, enumerate_family_members, generate, orient_with_signs
from .graph import GraphError, MixedGraph, parse_mixed_graph, serialize
from .spectra import charpoly, compare_radius, eigenvalues, spectral_radius
from .structure import enumerate_cycles, sign_vector


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 2 with our own message rather than argparse's
        raise UsageError(message)


def _load(path: str) -> MixedGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_mixed_graph(text)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def cmd_spectrum(args) -> int:
    D = _load(args.file)
    ev = [float(x) for x in eigenvalues(D)]
    rho = spectral_radius(D)
    if args.json:
        print(json.dumps({"eigenvalues": [float(_fmt(x)) for x in ev], "spectral_radius": float(_fmt(rho))}))
    else:
        print("eigenvalues: " + " ".join(_fmt(x) for x in ev))
        print(f"rho: {_fmt(rho)}")
    return 0


def cmd_charpoly(args) -> int:
    D = _load(args.file)
    if args.method == "both":
        a, b = charpoly(D, "sachs"), charpoly(D, "leverrier")
        if a != b:
            print(f"sachs:     {a}\nleverrier: {b}", file=sys.stderr)
            return 1
        p = a
    else:
        p = charpoly(D, args.method)
    if args.json:
        print(json.dumps({"coefficients": p.to_list(), "method": args.method}))
    else:
        print(p)
    return 0


def cmd_classify(args) -> int:
    D = _load(args.file)
    fn = classify_eq2 if args.eq2 else classify_le2
    verdict = fn(D, crosscheck=False)
    out = verdict.to_dict()
    out["crosscheck"] = compare_radius(D, Fraction(args.exact_bound)).to_dict()
    if not args.per_component:
        out.pop("components", None)
    print(json.dumps(out, indent=None if args.json else 2))
    return 0


def cmd_cycles(args) -> int:
    D = _load(args.file)
    cycles = enumerate_cycles(D)
    signs = sign_vector(D, cycles)
    if args.json:
        print(json.dumps([{"vertices": list(c.vertices), "sign": s.value} for c, s in zip(cycles, signs)]))
    else:
        for c, s in zip(cycles, signs):
            print(f"{' '.join(map(str, c.vertices))}\t{s.value}")
    return 0


def cmd_family(args) -> int:
    G = generate(args.spec)
    if args.signs is None:
        print(serialize(G), end="")
        return 0
    sc = SignClass(args.signs)
    if args.all:
        members = enumerate_family_members(G, sc)
        if args.json:
            print(json.dumps([serialize(D) for D in members]))
        else:
            print("\n".join(serialize(D) for D in members), end="")
        return 0
    target = {c: sc for c in enumerate_cycles(G)}
    print(serialize(orient_with_signs(G, target)), end="")
    return 0


def cmd_verify(args) -> int:
    from .verify import verify_scope

    report = verify_scope(args.max_n, identities_max_n=args.identities_max_n, workers=args.workers)
    if args.json:
        Path(args.json).write_text(report.to_json(indent=1))
    s = report.summary
    for check, row in sorted(report.by_check().items()):
        print(f"{check}: {row['total'] - row['failed']}/{row['total']} passed")
    if report.census:
        print("census: " + ", ".join(f"{k}={v}" for k, v in sorted(report.census.items())))
    print(f"summary: {s['passed']}/{s['total']} passed, {s['failed']} failed in {report.elapsed_seconds:.1f}s")
    for r in report.failures[:20]:
        print(f"FAIL {r.check_id} {r.instance}: expected {r.expected}, observed {r.observed}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hermspec", description="Hermitian spectra of mixed graphs")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, file=True):
        q = sub.add_parser(name, help=help_)
        if file:
            q.add_argument("file", help=".mg file, or - for stdin")
        q.add_argument("--json", action="store_true", help="machine-readable output")
        q.set_defaults(fn=fn)
        return q

    add("spectrum", cmd_spectrum, "eigenvalues and spectral radius")
    q = add("charpoly", cmd_charpoly, "exact characteristic polynomial")
    q.add_argument("--method", choices=["sachs", "leverrier", "both"], default="leverrier")
    q = add("classify", cmd_classify, "list membership verdict with exact radius cross-check")
    q.add_argument("--exact-bound", default="2", help="rational bound for the cross-check (default 2)")
    q.add_argument("--eq2", action="store_true", help="use the rho = 2 list instead of rho <= 2")
    q.add_argument("--per-component", action="store_true", help="include per-component verdicts")
    add("cycles", cmd_cycles, "cycles with their signs")

    fam = sub.add_parser("family", help="named graph families")
    fsub = fam.add_subparsers(dest="action", required=True, parser_class=_Parser)
    g = fsub.add_parser("gen", help="print a family member as .mg text")
    g.add_argument("spec", help='e.g. "C6(2,0,0,2)", "theta(3,5,5)", "S(1,2,5)"')
    g.add_argument("--signs", choices=[s.value for s in SignClass], help="orient so every cycle has this sign class")
    g.add_argument("--all", action="store_true", help="every member of the sign class, not one representative")
    g.add_argument("--json", action="store_true")
    g.set_defaults(fn=cmd_family)

    q = sub.add_parser("verify", help="run the enumeration harness")
    q.add_argument("--max-n", type=int, required=True)
    q.add_argument("--identities-max-n", type=int, default=5, help="exhaustive identity sweep bound (default 5)")
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--json", metavar="OUT", help="write the JSON report here")
    q.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, FamilyError, Unrealizable, ScopeTooLarge, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
