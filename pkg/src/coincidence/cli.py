"""Command line: ``compute``, ``census``, ``validate`` and ``tables``.

Exit codes are 0 on success, 1 for usage errors and violated hypotheses,
2 when the catalog lacks required data and 3 when a catalog fails to load
or validate.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .abelian import INFINITE
from .catalog import Catalog, default_catalog, load_catalog, validate_catalog
from .census import (
    census_bruteforce,
    census_closed_form,
    format_level_classes,
    format_rows,
    level_classes,
    sphere_census,
)
from .errors import CatalogError, CoincidenceError, MissingData
from .minimum import Undecided, mc
from .nielsen import NielsenQuery, levels, nielsen_number

EXIT_OK, EXIT_USAGE, EXIT_MISSING, EXIT_INVALID = 0, 1, 2, 3
CATALOG_ENV = "NIELSEN_CATALOG"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _infinite_or_int(text: str):
    if text.lower() in ("inf", "infinity", "oo"):
        return INFINITE
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative value, got {value}")
    return value


def _level_arg(text: str):
    return "all" if text == "all" else _infinite_or_int(text)


def _vector(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _show(x):
    if isinstance(x, Undecided):
        return str(x)
    if x == INFINITE:
        return "INFINITE"
    return x


def _level(r) -> str:
    return "inf" if r == INFINITE else str(r)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def _load(args) -> Catalog:
    path = args.catalog or os.environ.get(CATALOG_ENV)
    return load_catalog(path) if path else default_catalog()


def _element(G, coeffs, flag):
    if len(coeffs) != len(G.factors):
        raise argparse.ArgumentTypeError(
            f"{flag} has {len(coeffs)} coefficients but {G} has {len(G.factors)} factors")
    return G.element(coeffs)


def cmd_compute(args) -> int:
    cat = _load(args)
    G = cat.group((args.m, args.n))
    f1 = _element(G, args.f1, "--f1")
    f2 = _element(G, args.f2, "--f2")
    q = NielsenQuery(args.m, args.n, args.k, args.r, f1, f2)
    nv = nielsen_number(cat, q)
    mv = mc(cat, q, kervaire=args.kervaire, hopf_not_div4=args.hopf_not_div4)
    lvl = _level(args.r)
    report = {
        "query": {"m": args.m, "n": args.n, "k": _level(args.k), "r": lvl,
                  "f1": list(f1.coeffs), "f2": list(f2.coeffs)},
        "group": str(G),
        "nielsen": {"value": nv.value, "clause": nv.clause.value,
                    "witness": {k: list(v) for k, v in nv.witness.items()}},
        "mcc": _show(mv.mcc),
        "mc": _show(mv.mc),
        "certainty": mv.certainty.value,
        "rule": mv.rule,
        "mc_criterion": mv.mc_criterion,
    }
    if args.names:
        report["generators"] = list(G.generator_names)
    if args.format == "json":
        _emit(_dump(report))
        return EXIT_OK
    lines = [f"pi_{args.m}(S^{args.n}) = {G}"]
    if args.names:
        lines += [f"  coefficient {i + 1}: {name}" for i, name in enumerate(G.generator_names)]
    lines += [
        f"N_{lvl} = {nv.value}    clause {nv.clause.value}",
        f"MCC = {report['mcc']}    {mv.certainty.value}: {mv.rule}",
        f"MC = {report['mc']}" + (f"    {mv.mc_criterion}" if mv.mc_criterion else ""),
    ]
    if nv.witness:
        lines.append("witness:")
        lines += [f"  {k} = {tuple(v)}" for k, v in nv.witness.items()]
    _emit("\n".join(lines))
    return EXIT_OK


def _closed_row(cat, m, n, k, r):
    return sphere_census(cat, m, n, r) if k == 1 else census_closed_form(cat, m, n, k, r)


def cmd_census(args) -> int:
    cat = _load(args)
    m, n, k = args.m, args.n, args.k
    rs = levels(cat, m, n) if args.r == "all" else [args.r]
    if m == n and args.r == "all":
        rs = [0, INFINITE]
    rows, verdicts = [], []
    for r in rs:
        if args.method == "brute":
            rows.append(census_bruteforce(cat, m, n, k, r, workers=args.workers))
            continue
        row = _closed_row(cat, m, n, k, r)
        rows.append(row)
        if args.method == "both":
            brute = census_bruteforce(cat, m, n, k, r, workers=args.workers)
            verdicts.append("AGREE" if (brute.counts, brute.ker) == (row.counts, row.ker)
                            else "DISAGREE")
    if args.format == "json":
        out = []
        for i, row in enumerate(rows):
            item = row.to_json()
            if verdicts:
                item["verdict"] = verdicts[i]
            out.append(item)
        _emit(_dump({"m": m, "n": n, "k": _level(k) if k == INFINITE else k,
                     "method": args.method, "rows": out}))
    else:
        text = format_rows(rows).split("\n")
        if verdicts:
            width = max(len(t) for t in text)
            text = [text[0].ljust(width) + "  verdict"] + [
                t.ljust(width) + "  " + v for t, v in zip(text[1:], verdicts)]
        _emit("\n".join(text))
    return EXIT_OK if "DISAGREE" not in verdicts else EXIT_INVALID


def cmd_validate(args) -> int:
    cat = _load(args)
    results = validate_catalog(cat)
    ok = all(r.passed for r in results)
    if args.format == "json":
        _emit(_dump({"passed": ok, "checks": [
            {"name": r.name, "passed": r.passed, "details": r.details} for r in results]}))
    else:
        _emit("\n".join([str(r) for r in results] + [f"overall: {'PASS' if ok else 'FAIL'}"]))
    return EXIT_OK if ok else EXIT_INVALID


def cmd_tables(args) -> int:
    cat = _load(args)
    data = level_classes(cat, args.m, args.n)
    _emit(_dump(data) if args.format == "json" else format_level_classes(data))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--catalog", help=f"catalog file (default: ${CATALOG_ENV} or the bundled data)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="nielsen-coincidence",
                     description="Nielsen and minimum coincidence numbers for maps S^m -> S^n/G.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def space(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=_infinite_or_int, default=2, help="order of G (or 'inf')")

    p = sub.add_parser("compute", parents=[common], help="N_r, MCC and MC for one pair")
    space(p)
    p.add_argument("--r", type=_infinite_or_int, default=0, help="suspension level (or 'inf')")
    p.add_argument("--f1", type=_vector, required=True, help="coefficients of the first lifting")
    p.add_argument("--f2", type=_vector, required=True, help="coefficients of the second lifting")
    p.add_argument("--names", action="store_true", help="echo the generator legend")
    p.add_argument("--kervaire", choices=("0", "1"), default=None,
                   help="Kervaire invariant of the lifting, for m = 2n-2")
    p.add_argument("--hopf-not-div4", choices=("yes", "no"), default=None,
                   help="whether the Hopf invariant of the lifting is prime to 4, for m = 2n-1")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("census", parents=[common], help="value distribution of N_r over all pairs")
    space(p)
    p.add_argument("--r", type=_level_arg, default="all")
    p.add_argument("--method", choices=("closed", "brute", "both"), default="closed")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("validate", parents=[common], help="run the catalog invariants")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("tables", parents=[common], help="counts grouped by Nielsen function")
    p.add_argument("--m", type=int, default=16)
    p.add_argument("--n", type=int, default=6)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "kervaire", None) is not None:
        args.kervaire = args.kervaire == "1"
    if getattr(args, "hopf_not_div4", None) is not None:
        args.hopf_not_div4 = args.hopf_not_div4 == "yes"
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MissingData as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except CatalogError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CoincidenceError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
