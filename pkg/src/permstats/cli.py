"""Command-line front end.

Exit codes: 0 success, 1 verification counterexample, 2 usage or parse
error, 3 map applied outside its domain.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Callable

from . import signed, triple
from .perm import Permutation, PermutationError, first_letter, inversions, parse_permutation, sign
from .statistics import cyclic_stats, depth, displacement, drp, linear_stats
from .verify import (
    MAX_VERIFY_N, SCALAR_STATS, SET_STATS, THEOREMS, check_theorem,
    joint_polynomial, set_valued_distribution,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

BIJECTIONS: dict[str, Callable[[Permutation], Permutation]] = {
    "phi-triple": triple.phi_triple_image,
    "phi-triple-inv": triple.phi_triple_inverse,
    "foata": signed.foata_map,
    "foata-inv": signed.foata_map_inverse,
    "phi-tilde": signed.phi_tilde,
    "psi1": signed.psi1,
    "psi2": signed.psi2,
    "f": signed.f_map,
}


class UsageError(Exception):
    pass


def stats_document(p: Permutation) -> dict:
    lin = linear_stats(p)
    cyc = cyclic_stats(p)
    return {
        "permutation": list(p),
        "n": len(p),
        "first_letter": first_letter(p),
        "des_positions": list(lin.des_positions),
        "des_values": list(lin.des_values),
        "des_count": lin.des_count,
        "asc2": list(lin.asc2_values),
        "suc_positions": list(lin.suc_positions),
        "suc_values": list(lin.suc_values),
        "asc_count": lin.asc_count,
        "exc_positions": list(cyc.exc_positions),
        "exc_count": cyc.exc_count,
        "exc_hat": list(cyc.exc_hat_values),
        "aexc": list(cyc.aexc_values),
        "fix_hat": list(cyc.fix_hat_values),
        "fix_positions": list(cyc.fix_positions_capped),
        "drop_positions": list(cyc.drop_positions),
        "nexc": cyc.nexc_count,
        "depth": depth(p),
        "drp": drp(p),
        "displacement": displacement(p),
        "inv": inversions(p),
        "sign": sign(p),
    }


def _parse(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except PermutationError as exc:
        raise UsageError(str(exc)) from None


def cmd_stats(args, out) -> int:
    p = _parse(" ".join(args.permutation))
    json.dump(stats_document(p), out)
    out.write("\n")
    return EXIT_OK


def cmd_map(args, out) -> int:
    p = _parse(" ".join(args.permutation))
    try:
        image = BIJECTIONS[args.bijection](p)
    except signed.DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    out.write(f"{image}\n")
    return EXIT_OK


def cmd_trace(args, out) -> int:
    p = _parse(" ".join(args.permutation))
    out.write(triple.render_trace(p) + "\n")
    return EXIT_OK


def cmd_dist(args, out) -> int:
    if not 1 <= args.n <= MAX_VERIFY_N:
        raise UsageError(f"--n must be in 1..{MAX_VERIFY_N}")
    names = [s.strip().replace("_", "-") for s in args.stats.split(",") if s.strip()]
    if len(names) == 1 and names[0] in SET_STATS:
        if args.signed:
            raise UsageError("--signed applies only to scalar statistics")
        table = set_valued_distribution(args.n, names[0])
        if args.format == "json":
            json.dump(table.to_json(), out)
            out.write("\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["key", "count"])
            writer.writerows(table.rows())
        return EXIT_OK
    bad = [s for s in names if s not in SCALAR_STATS]
    if bad or not names:
        raise UsageError(
            f"unknown statistic(s) {bad}; scalar: {', '.join(SCALAR_STATS)}; "
            f"set-valued (alone): {', '.join(SET_STATS)}")
    poly = joint_polynomial(args.n, names, signed=args.signed)
    if args.format == "json":
        json.dump(poly.to_json(), out)
        out.write("\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([*poly.variables, "coefficient"])
        for exps, c in poly.sorted_terms():
            writer.writerow([*exps, c])
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if not 1 <= args.n_max <= MAX_VERIFY_N:
        raise UsageError(f"--n-max must be in 1..{MAX_VERIFY_N}")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    names = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    first_failure = None
    for name in names:
        for n in range(1, args.n_max + 1):
            report = check_theorem(name, n, jobs=args.jobs)
            out.write(report.line() + "\n")
            out.flush()
            if not report.passed and first_failure is None:
                first_failure = report
    if first_failure is not None:
        out.write(f"first counterexample: {first_failure.theorem} n={first_failure.n} "
                  f"witness={first_failure.witness}\n")
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permstats",
        description="Permutation statistics, bijections and exhaustive checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="print every statistic of a permutation as JSON")
    p.add_argument("permutation", nargs="+", help="one-line notation, e.g. '4 5 3 1 6 2' or 4,5,3")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("map", help="apply a bijection")
    p.add_argument("--bijection", "-b", required=True, choices=list(BIJECTIONS))
    p.add_argument("permutation", nargs="+")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("trace", help="show the gluing steps of phi-triple")
    p.add_argument("--bijection", "-b", default="phi-triple", choices=["phi-triple"])
    p.add_argument("permutation", nargs="+")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("dist", help="joint distribution polynomial or set-valued table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", required=True,
                   help="comma-separated scalar statistics, or one set-valued statistic")
    p.add_argument("--signed", action="store_true", help="weight by sign")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="check every identity over S_1..S_k")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--theorem", default="all", choices=["all", *THEOREMS])
    p.add_argument("--jobs", type=int, default=1, help="worker processes per check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
