"""Command-line front end: multiplicity tables, cross-check sweeps, diagrams.

Exit codes: 0 on success, 2 on usage errors, 3 when a cross-check or a
method=all row disagrees.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, IO

from . import charseries, orbits, positive
from .oracle import branch_so3
from .orbits import LocalizationTable, Method, Orbit, k_mult, orbit_table
from .positive import REGION_FOR_ORBIT, mult_positive
from .regions_svg import render_regions_svg

DEFAULT_LAMBDA_CAP = 10000
CAP_ENV_VAR = "BLATTNER_LAMBDA_CAP"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISAGREE = 3


def _lambda_cap() -> int:
    return int(os.environ.get(CAP_ENV_VAR, str(DEFAULT_LAMBDA_CAP)))


def methods_for_orbit(orbit: Orbit) -> list[Method]:
    base = [Method.POSITIVE, Method.LOCALIZATION, Method.TSERIES]
    if orbit is Orbit.OPEN:
        base.append(Method.ORACLE)
    if orbit is Orbit.CLOSED:
        base.append(Method.BLATTNER_CLOSED)
    return base


def compute_mult(method: Method, orbit: Orbit, a: int, b: int, lam: int,
                 table: LocalizationTable) -> int:
    if method is Method.POSITIVE:
        return mult_positive(REGION_FOR_ORBIT[orbit], a, b, lam)
    if method is Method.LOCALIZATION:
        return k_mult(table, lam)
    if method is Method.TSERIES:
        return sum(charseries.k_mults_from_tk(table, lam, d)
                   for d in range(table.codim, lam + table.codim + 1))
    if method is Method.ORACLE:
        return branch_so3(a, b, lam)
    if method is Method.BLATTNER_CLOSED:
        return orbits.blattner_closed(a, b, lam)
    raise ValueError(f"unknown method {method}")


def dump_json(obj: dict) -> str:
    """Canonical JSON used for all reports (round-trips byte-identically)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def format_mult_report(a: int, b: int, orbit: Orbit, methods: list[Method],
                       lambda_max: int, fmt: str) -> tuple[str, bool]:
    """Render the multiplicity table; also reports whether all methods agree."""
    table = orbit_table(orbit, a, b)
    rows = []
    all_agree = True
    for lam in range(lambda_max + 1):
        values = [compute_mult(m, orbit, a, b, lam, table) for m in methods]
        agree = len(set(values)) == 1
        all_agree = all_agree and agree
        rows.append((lam, values, agree))

    single = len(methods) == 1
    if fmt == "tsv":
        if single:
            lines = ["lambda\tmult"]
            lines += [f"{lam}\t{vals[0]}" for lam, vals, _ in rows]
        else:
            lines = ["lambda\t" + "\t".join(m.value for m in methods) + "\tagree"]
            lines += ["\t".join([str(lam)] + [str(v) for v in vals]
                                + [str(int(agree))])
                      for lam, vals, agree in rows]
        return "\n".join(lines) + "\n", all_agree

    if single:
        obj = {
            "a": a, "b": b, "orbit": orbit.value, "method": methods[0].value,
            "mults": [{"lambda": lam, "mult": vals[0]} for lam, vals, _ in rows],
        }
    else:
        obj = {
            "a": a, "b": b, "orbit": orbit.value, "method": "all",
            "mults": [dict({"lambda": lam, "agree": agree},
                           **{m.value: v for m, v in zip(methods, vals)})
                      for lam, vals, agree in rows],
        }
    return dump_json(obj), all_agree


def crosscheck(a_max: int, b_max: int, lambda_max: int,
               table_fn: Callable[[Orbit, int, int], LocalizationTable] = orbit_table,
               out: IO[str] | None = None) -> int:
    """Sweep positive-formula vs localization equality; 0 if all agree."""
    if out is None:
        out = sys.stdout
    cells = 0
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            for orbit in (Orbit.CLOSED, Orbit.O1, Orbit.O2, Orbit.OPEN):
                table = table_fn(orbit, a, b)
                for lam in range(lambda_max + 1):
                    pos = mult_positive(REGION_FOR_ORBIT[orbit], a, b, lam)
                    loc = k_mult(table, lam)
                    cells += 1
                    if pos != loc:
                        out.write(
                            f"counterexample: orbit={orbit.value} a={a} b={b} "
                            f"lambda={lam}: positive={pos} localization={loc}\n")
                        return EXIT_DISAGREE
    out.write(f"checked {cells} orbit-lambda cells "
              f"(a<={a_max}, b<={b_max}, lambda<={lambda_max}): all agree\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl3ktypes",
        description="SO(3)-multiplicities of the four sl3 modules with a "
                    "given integral infinitesimal character, by three "
                    "independent exact methods.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mult = sub.add_parser("mult", help="print a multiplicity table")
    p_mult.add_argument("--a", type=int, required=True)
    p_mult.add_argument("--b", type=int, required=True)
    p_mult.add_argument("--orbit", required=True,
                        choices=[o.value for o in
                                 (Orbit.CLOSED, Orbit.O1, Orbit.O2, Orbit.OPEN)])
    p_mult.add_argument("--lambda-max", type=int, required=True, dest="lambda_max")
    p_mult.add_argument("--method", default="all",
                        choices=[m.value for m in Method] + ["all"])
    p_mult.add_argument("--format", default="tsv", choices=["tsv", "json"])
    p_mult.add_argument("--out", default=None, help="output file (default stdout)")

    p_cc = sub.add_parser("crosscheck", help="sweep all methods for agreement")
    p_cc.add_argument("--a-max", type=int, required=True, dest="a_max")
    p_cc.add_argument("--b-max", type=int, required=True, dest="b_max")
    p_cc.add_argument("--lambda-max", type=int, required=True, dest="lambda_max")

    p_reg = sub.add_parser("regions", help="write the region diagram as SVG")
    p_reg.add_argument("--a", type=int, required=True)
    p_reg.add_argument("--b", type=int, required=True)
    p_reg.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_reg.add_argument("--out", required=True, help="SVG output path")

    return parser


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def run_mult(args: argparse.Namespace) -> int:
    if args.a < 0 or args.b < 0 or args.lambda_max < 0:
        return _usage_error("--a, --b and --lambda-max must be nonnegative")
    if args.lambda_max > _lambda_cap():
        return _usage_error(
            f"--lambda-max exceeds the cap {_lambda_cap()} "
            f"(override with {CAP_ENV_VAR})")
    orbit = Orbit(args.orbit)
    if args.method == "all":
        methods = methods_for_orbit(orbit)
    else:
        method = Method(args.method)
        if method is Method.ORACLE and orbit is not Orbit.OPEN:
            return _usage_error("--method oracle is only valid with --orbit open")
        if method is Method.BLATTNER_CLOSED and orbit is not Orbit.CLOSED:
            return _usage_error("--method blattner is only valid with --orbit closed")
        methods = [method]
    report, all_agree = format_mult_report(
        args.a, args.b, orbit, methods, args.lambda_max, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)
    if len(methods) > 1 and not all_agree:
        print("error: methods disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def run_crosscheck(args: argparse.Namespace) -> int:
    if args.a_max < 0 or args.b_max < 0 or args.lambda_max < 0:
        return _usage_error("bounds must be nonnegative")
    if args.lambda_max > _lambda_cap():
        return _usage_error(
            f"--lambda-max exceeds the cap {_lambda_cap()} "
            f"(override with {CAP_ENV_VAR})")
    return crosscheck(args.a_max, args.b_max, args.lambda_max)


def run_regions(args: argparse.Namespace) -> int:
    if args.a < 0 or args.b < 0 or args.n_max < 0:
        return _usage_error("--a, --b and --n-max must be nonnegative")
    svg = render_regions_svg(args.a, args.b, args.n_max)
    try:
        with open(args.out, "w") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {args.out}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "mult":
        return run_mult(args)
    if args.command == "crosscheck":
        return run_crosscheck(args)
    if args.command == "regions":
        return run_regions(args)
    return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
