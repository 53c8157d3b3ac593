"""``hyperres`` command line: analyze | check | bounds | construct | search.

Exit codes: 0 success, 1 check-suite violation, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from pathlib import Path

from . import bounds as bnd
from .constructions import construct
from .core import (
    FamilyError,
    KFamily,
    format_family,
    intersection_level,
    maximum_matching,
    minimum_cover,
    parse_family,
    vertices_of,
    write_family,
)
from .resilience import resilience_profile
from .search.engine import MODES, SearchSpec, SearchSpecError, default_threads, max_resilient_family
from .search.suite import DEFAULT_SEED, SUITES, check_paper_suite
from .sunflower import find_pseudo_sunflower

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def analyze_family(F: KFamily, sunflower_sizes: list[int] | None = None) -> dict:
    """The analysis report as a JSON-ready dict."""
    mm = maximum_matching(F)
    cover = minimum_cover(F)
    nu = mm.size
    if sunflower_sizes is None:
        sunflower_sizes = sorted({3, F.k * nu + 1}) if nu else [3]
    report = {
        "k": F.k,
        "n": F.n,
        "size": len(F),
        "nu": nu,
        "matching": mm.matching.edge_lists(),
        "tau": cover.size,
        "cover": vertices_of(cover.cover),
        "resilience": resilience_profile(F).to_json() if len(F) else None,
        "intersection_level": intersection_level(F) if len(F) else None,
        "pseudo_sunflowers": {},
        "bounds": {},
    }
    for size in sunflower_sizes:
        w = find_pseudo_sunflower(F, size)
        report["pseudo_sunflowers"][str(size)] = w.to_json() if w else None
    if nu:
        k = F.k
        printed, corollary = bnd.lovasz_bound(k, nu)
        b = {
            "complete_construction": comb(k * nu + k - 1, k),
            "lovasz_as_printed": int(printed.value),
            "lovasz_as_corollary": int(corollary.value),
            "size_within_corollary_reading": len(F) <= corollary.value,
        }
        if k == 3 and nu >= 3:
            b["fw"] = str(bnd.fw_cubic_bound(nu).value)
        report["bounds"] = b
    return report


def _print_human(obj: dict, indent: str = "") -> None:
    for key, value in obj.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_human(value, indent + "  ")
        else:
            print(f"{indent}{key}: {value}")


def _emit(obj: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=False))
    else:
        _print_human(obj)


def cmd_analyze(args) -> int:
    try:
        with open(args.file, "rb") as fh:
            F = parse_family(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    sizes = None
    if args.sunflower_sizes:
        sizes = [int(x) for x in args.sunflower_sizes.split(",")]
        if any(x < 2 for x in sizes):
            raise UsageError("pseudo sunflower sizes must be at least 2")
    _emit(analyze_family(F, sizes), args.json)
    return EXIT_OK


def cmd_check(args) -> int:
    report = check_paper_suite(args.suite, args.seed)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        for c in report.checks:
            print(f"[{c.status.upper()}] {c.name}: {c.detail} ({c.cases} cases, {c.seconds:.2f}s)")
    if report.ok:
        return EXIT_OK
    dump = Path(args.dump_dir)
    dump.mkdir(parents=True, exist_ok=True)
    for c in report.checks:
        for i, F in enumerate(c.counterexamples):
            path = dump / f"{c.name}-{i}.txt"
            write_family(F, path, comment=f"counterexample for check {c.name}")
            print(f"counterexample written to {path}", file=sys.stderr)
    return EXIT_VIOLATION


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.formula} needs {' '.join(missing)}")
    return [getattr(args, n) for n in names]


def cmd_bounds(args) -> int:
    f = args.formula
    try:
        if f == "emc":
            out = bnd.emc_bound(*_need(args, "n", "k", "s")).to_json()
        elif f == "lovasz":
            printed, corollary = bnd.lovasz_bound(*_need(args, "k", "s"))
            out = {"formula": "lovasz", "params": dict(printed.params),
                   "as_printed": int(printed.value), "as_corollary": int(corollary.value),
                   "notes": [bnd.LOVASZ_NOTE]}
        elif f == "fw":
            out = bnd.fw_cubic_bound(*_need(args, "s")).to_json()
        elif f == "el":
            out = bnd.el_lower_bound(*_need(args, "k")).to_json()
        elif f == "fpoly":
            out = bnd.f_poly(*_need(args, "s", "t")).to_json()
        else:
            out = {"formula": "anchors", "values": bnd.misc_anchors()}
            if args.k is not None and args.t is not None:
                out["binom_2k_minus_t"] = bnd.binom_2k_minus_t(args.k, args.t).to_json()
    except bnd.BoundError as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps(out))
    return EXIT_OK


def cmd_construct(args) -> int:
    F = construct(args.name)
    text = format_family(F, comment=args.name)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_search(args) -> int:
    threads = args.threads if args.threads is not None else default_threads()
    try:
        spec = SearchSpec(args.k, args.s, args.t, args.max_n, budget=args.budget, mode=args.mode,
                          target=args.target, seed_lower_bound=not args.no_seed, threads=threads)
    except SearchSpecError as exc:
        raise UsageError(str(exc)) from None
    result = max_resilient_family(spec)
    out = result.to_json()
    if args.output:
        outdir = Path(args.output)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, W in enumerate(result.witnesses):
            write_family(W, outdir / f"witness-{i}.txt",
                         comment=f"k={spec.k} s={spec.s} t={spec.t} max_n={spec.max_n} size={len(W)}")
    if args.json:
        print(json.dumps(out))
    else:
        witnesses = out.pop("witnesses")
        _print_human(out)
        for i, w in enumerate(witnesses):
            print(f"witness {i}: {w}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperres", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report invariants of a family file")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.add_argument("--sunflower-sizes", help="comma-separated pseudo sunflower sizes to scan")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="run the verification suite")
    c.add_argument("suite", choices=SUITES)
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.add_argument("--dump-dir", default="hyperres-counterexamples")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("bounds", help="evaluate a bound formula exactly")
    b.add_argument("formula", choices=("emc", "lovasz", "fw", "el", "fpoly", "anchors"))
    for name in ("n", "k", "s", "t"):
        b.add_argument(f"--{name}", type=int)
    b.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    b.set_defaults(func=cmd_bounds)

    g = sub.add_parser("construct", help="emit a named construction in the family file format")
    g.add_argument("name", help="complete:N,K | erdos:N,K,S | fixture | gallery:NAME")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", help="exact search for maximum t-resilient k-graphs")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--budget", type=int, default=2_000_000, help="search-tree node limit")
    s.add_argument("--mode", choices=MODES, default="maximize")
    s.add_argument("--target", type=int)
    s.add_argument("--no-seed", action="store_true", help="do not seed with the complete-graph lower bound")
    s.add_argument("--threads", type=int, help="worker processes (default: $HYPERRES_THREADS or 1)")
    s.add_argument("-o", "--output", help="directory for witness family files")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FamilyError) as exc:
        print(f"hyperres: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
