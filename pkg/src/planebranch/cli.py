"""Command-line front end.

Subcommands:

* ``analyze P M``: full report for one pair (Euclidean table, recursion
  steps, minimal generators, conductor, tau by the requested methods).
* ``verify P M``: run every implementation and cross-check; exit 0 on
  agreement, 1 on a mathematical disagreement.
* ``sweep``: verify every coprime pair in a range, one row per pair.

Formats: ``table`` (hand-calculation layout: Euclidean data on top, one
row per recursion step), ``json`` (one object per report, stable key
order), ``csv`` (sweep rows).  Exit codes: 0 all checks pass,
1 disagreement, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from . import delorme, recursion, tjurina, verify
from .semigroup import MAX_M, Semigroup

TAU_METHODS = ("staircase", "abm", "oracle", "all")


class InputError(Exception):
    """Invalid user input; maps to exit code 2."""


def _parse_pair(p: int, m: int) -> Semigroup:
    if not 2 <= p < m:
        raise InputError(f"need 2 <= p < m, got p = {p}, m = {m}")
    if m > MAX_M:
        raise InputError(f"m = {m} exceeds the supported bound {MAX_M}")
    if gcd(p, m) != 1:
        raise InputError("p and m must be coprime")
    return Semigroup(p, m)


# ----------------------------- analyze -----------------------------

def build_report(p: int, m: int, tau_method: str = "all") -> dict:
    """Report dict with stable key order; the JSON format dumps it as is."""
    sg = _parse_pair(p, m)
    summary = recursion.summarize(sg)
    eu = summary.euclid

    taus: dict[str, int | None] = {"staircase": None, "abm": None, "oracle": None}
    if tau_method in ("staircase", "all"):
        taus["staircase"] = tjurina.tau_staircase(sg, summary.generators)
    if tau_method in ("abm", "all") and eu is not None:
        taus["abm"] = tjurina.tau_abm(sg, eu)
    trace = None
    if tau_method in ("oracle", "all"):
        trace = delorme.run_naive(sg)
        taus["oracle"] = tjurina.tau_oracle(sg, trace)

    known = [t for t in taus.values() if t is not None]
    ok = all(t == known[0] for t in known)
    if trace is not None:
        ok = ok and trace.generators == summary.generators
        ok = ok and trace.conductor == summary.conductor

    euclid_obj = None
    if eu is not None:
        euclid_obj = {
            "s": eu.s,
            "p_seq": list(eu.p_seq),
            "k_seq": list(eu.k_seq),
            "A": list(eu.A),
            "B": list(eu.B),
            "n": list(eu.n_seq),
            "N": list(eu.N_seq),
        }
    steps_obj = [
        {
            "i": st.i,
            "j": st.level,
            "gamma": st.gamma,
            "r": st.jump,
            "g": st.g,
            "u": st.u,
            "c": st.c,
            "minimal": st.minimal,
        }
        for st in summary.steps
    ]
    return {
        "input": {"p": p, "m": m},
        "euclid": euclid_obj,
        "steps": steps_obj,
        "G": list(summary.generators),
        "card": summary.cardinality,
        "mu": sg.mu,
        "conductor_lambda": summary.conductor,
        "tau": taus,
        "ok": ok,
    }


def _render_table(report: dict, out: io.TextIOBase) -> None:
    p, m = report["input"]["p"], report["input"]["m"]
    out.write(f"p = {p}  m = {m}  mu = {report['mu']}\n")
    eu = report["euclid"]
    if eu is not None:
        out.write("\neuclid:\n")
        out.write("  i |  p_i  k_i  n_i  N_i |  A_i  B_i\n")
        for i in range(eu["s"] + 1):
            n_i = eu["n"][i - 1] if 1 <= i <= eu["s"] else None
            N_i = eu["N"][i - 1] if 1 <= i <= eu["s"] else None
            out.write(
                f"{i:>3} | {eu['p_seq'][i]:>4} {eu['k_seq'][i]:>4}"
                f" {n_i if n_i is not None else '-':>4}"
                f" {N_i if N_i is not None else '-':>4}"
                f" | {eu['A'][i]:>4} {eu['B'][i]:>4}\n"
            )
    if report["steps"]:
        out.write("\nsteps (parenthesized rows are beyond the stop or non-minimal):\n")
        out.write("  i |  j | gamma |   r |      g      u |      c\n")
        for st in report["steps"]:
            wrap = (lambda v: f"({v})") if not st["minimal"] else str
            out.write(
                f"{st['i']:>3} | {st['j'] if st['j'] is not None else '-':>2}"
                f" | {st['gamma']:>5} | {st['r'] if st['r'] is not None else '-':>3}"
                f" | {wrap(st['g']):>6} {wrap(st['u']):>6} | {st['c']:>6}\n"
            )
    out.write(f"\nG = {report['G']}\n")
    out.write(f"|G| = {report['card']}\n")
    out.write(f"c(Lambda_gen) = {report['conductor_lambda']}\n")
    tau = report["tau"]
    shown = ", ".join(f"{k}={v}" for k, v in tau.items() if v is not None)
    out.write(f"tau_gen: {shown}\n")
    out.write(f"ok = {report['ok']}\n")


def render_report(report: dict, fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "json":
        buf.write(json.dumps(report, indent=2))
        buf.write("\n")
    else:
        _render_table(report, buf)
    return buf.getvalue()


def cmd_analyze(args) -> int:
    report = build_report(args.p, args.m, args.tau_method)
    sys.stdout.write(render_report(report, args.format))
    return 0 if report["ok"] else 1


# ----------------------------- verify -----------------------------

def cmd_verify(args) -> int:
    _parse_pair(args.p, args.m)
    check = verify.verify_pair(args.p, args.m)
    if check.ok:
        print(f"verify {args.p} {args.m}: ok "
              f"(|G| = {check.summary.cardinality}, "
              f"conductor = {check.summary.conductor}, tau = {check.tau})")
        return 0
    print(f"verify {args.p} {args.m}: MISMATCH", file=sys.stderr)
    for line in check.mismatches:
        print(f"  {line}", file=sys.stderr)
    return 1


# ----------------------------- sweep -----------------------------

SWEEP_MAX_M = 2000
SWEEP_COLUMNS = ("p", "m", "s", "N1", "card", "conductor_lambda", "tau", "ok")


def _sweep_row(pair: tuple[int, int]) -> dict:
    p, m = pair
    check = verify.verify_pair(p, m)
    eu = check.summary.euclid
    return {
        "p": p,
        "m": m,
        "s": eu.s if eu is not None else 0,
        "N1": eu.N(1) if eu is not None else 0,
        "card": check.summary.cardinality,
        "conductor_lambda": check.summary.conductor,
        "tau": check.tau,
        "ok": check.ok,
    }


def sweep_pairs(min_p: int, max_p: int, max_m: int):
    for p in range(min_p, max_p + 1):
        for m in range(p + 1, max_m + 1):
            if gcd(p, m) == 1:
                yield (p, m)


def cmd_sweep(args) -> int:
    min_p, max_p, max_m = args.min_p, args.max_p, args.max_m
    if min_p is None or max_p is None or max_m is None:
        raise InputError("sweep needs min_p, max_p and max_m")
    if not (2 <= min_p <= max_p <= max_m <= SWEEP_MAX_M):
        raise InputError(
            f"need 2 <= min_p <= max_p <= max_m <= {SWEEP_MAX_M}, "
            f"got {min_p} {max_p} {max_m}"
        )
    pairs = list(sweep_pairs(min_p, max_p, max_m))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_row, pairs, chunksize=16))
    else:
        rows = [_sweep_row(pair) for pair in pairs]

    failures = sum(1 for r in rows if not r["ok"])
    if args.format == "json":
        for r in rows:
            print(json.dumps(r))
        print(json.dumps({"pairs": len(rows), "failures": failures}))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(SWEEP_COLUMNS)
        for r in rows:
            writer.writerow([r[c] for c in SWEEP_COLUMNS])
        print(f"pairs: {len(rows)}, failures: {failures}", file=sys.stderr)
    else:
        for r in rows:
            print(
                f"({r['p']:>4},{r['m']:>4})  s={r['s']}  N1={r['N1']:>3}  "
                f"|G|={r['card']:>3}  c={r['conductor_lambda']:>7}  "
                f"tau={r['tau']:>8}  {'ok' if r['ok'] else 'FAIL'}"
            )
        print(f"pairs: {len(rows)}, failures: {failures}")
    return 0 if failures == 0 else 1


# ----------------------------- entry point -----------------------------

def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planebranch",
        description="Minimal generators, conductor and generic Tjurina number "
        "of the generic value set for plane branches with semigroup <p, m>.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="report for one pair")
    pa.add_argument("p", type=int)
    pa.add_argument("m", type=int)
    pa.add_argument("--format", choices=("table", "json"), default="table")
    pa.add_argument("--tau-method", choices=TAU_METHODS, default="all")
    pa.set_defaults(func=cmd_analyze)

    pv = sub.add_parser("verify", help="cross-check all implementations on one pair")
    pv.add_argument("p", type=int)
    pv.add_argument("m", type=int)
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("sweep", help="verify every coprime pair in a range")
    ps.add_argument("pos_min_p", nargs="?", type=int, metavar="min_p")
    ps.add_argument("pos_max_p", nargs="?", type=int, metavar="max_p")
    ps.add_argument("pos_max_m", nargs="?", type=int, metavar="max_m")
    ps.add_argument("--min-p", type=int, dest="flag_min_p")
    ps.add_argument("--max-p", type=int, dest="flag_max_p")
    ps.add_argument("--max-m", type=int, dest="flag_max_m")
    ps.add_argument("--jobs", type=int, default=1)
    ps.add_argument("--format", choices=("table", "json", "csv"), default="csv")
    ps.add_argument("--tau-method", choices=TAU_METHODS, default="all")
    ps.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep":
        args.min_p = args.flag_min_p if args.flag_min_p is not None else args.pos_min_p
        args.max_p = args.flag_max_p if args.flag_max_p is not None else args.pos_max_p
        args.max_m = args.flag_max_m if args.flag_max_m is not None else args.pos_max_m
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
