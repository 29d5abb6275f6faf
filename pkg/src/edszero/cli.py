"""Command-line front end.

Every subcommand prints either aligned text (default) or, with ``--json``,
one JSON record per line with integers as decimal strings.  Exit status is 0
on success, 1 when a cross-check or verification fails and 2 for usage errors
(including inadmissible parameters).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import closed_form as cf
from . import conditions as cd
from . import periodicity as per
from . import power_classifier as pc
from .eds_core import EquivalenceScale, apply_equivalence, sequence
from .errors import (BadPrime, EdsError, InvalidAlpha, NotApplicable, RankTooSmall,
                     UnknownCondition, UnsupportedRank, ZeroTermResidue)
from .published import PERIOD_PRIMES, RANK6_PERIODS, RANK12_ALPHA3_TERMS
from .tate_curves import (PROPER_RANKS, SUPPORTED_RANKS, CurveCoefficients, EdsSpec,
                          admissible_alphas, initial_values, initial_values_from_curve,
                          integerize, tate_normal_form, tate_parameters)

DEFAULT_CAP = 200
USAGE_ERRORS = (InvalidAlpha, BadPrime, UnknownCondition, UnsupportedRank, ZeroTermResidue,
                NotApplicable, RankTooSmall)


class VerificationFailed(Exception):
    pass


class Out:
    """Collects records and renders them as text or JSON lines."""

    def __init__(self, args):
        self.json = args.json
        self.digits = getattr(args, "digits", None)
        self.stream = sys.stdout

    def num(self, x) -> str:
        s = str(x)
        if self.digits and not self.json:
            body = s.lstrip("-")
            if len(body) > self.digits:
                half = max(self.digits // 2, 1)
                return "%s%s...%s (%d digits)" % ("-" if s.startswith("-") else "",
                                                 body[:half], body[-half:], len(body))
        return s

    def record(self, command, spec, payload, text_lines):
        if self.json:
            rec = {"command": command}
            if spec is not None:
                rec["spec"] = {"rank": spec.rank, "alpha": str(spec.alpha)}
            rec["payload"] = _jsonable(payload)
            self.stream.write(json.dumps(rec, ensure_ascii=False, sort_keys=True) + "\n")
        else:
            for line in text_lines:
                self.stream.write(line + "\n")


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a range like -5..5, got %r" % text)


def _primes(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated primes, got %r" % text)


def _table(rows, header) -> list[str]:
    cols = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    return ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cols]


def _check_cap(n: int, cap: int):
    if n > cap:
        raise InvalidAlpha("index %d exceeds the cap %d (raise it with --cap)" % (n, cap))


# ---- subcommands -------------------------------------------------------------

def cmd_term(args, out):
    spec = EdsSpec(args.rank, args.alpha)
    _check_cap(args.index, args.cap)
    values = {}
    if args.method in ("closed", "both"):
        values["closed"] = cf.closed_term(spec, args.index)
    if args.method in ("recurrence", "both"):
        values["recurrence"] = sequence(initial_values(spec), args.index)[args.index]
    if len(set(values.values())) != 1:
        raise VerificationFailed("closed form and recurrence disagree at n=%d" % args.index)
    h = next(iter(values.values()))
    out.record("term", spec, {"index": args.index, "value": h, "method": args.method},
               [out.num(h)])


def cmd_seq(args, out):
    spec = EdsSpec(args.rank, args.alpha)
    _check_cap(args.count, args.cap)
    if args.mod:
        terms = list(per.reduce_mod(spec, args.mod, args.count).terms)
    else:
        terms = list(sequence(initial_values(spec), args.count).terms[: args.count + 1])
    out.record("seq", spec, {"count": args.count, "mod": args.mod, "terms": terms},
               ["h%d = %s" % (i, out.num(t)) for i, t in enumerate(terms)])


def cmd_curve(args, out):
    spec = EdsSpec(args.rank, args.alpha)
    if spec.improper:
        raise NotApplicable("ranks 2 and 3 carry raw coefficients, not a Tate parameter")
    b, c = tate_parameters(spec)
    tate = tate_normal_form(spec)
    model = integerize(spec, tate)
    iv = initial_values_from_curve(model)
    closed = initial_values(spec)
    if iv != closed:
        raise VerificationFailed("curve initial values %s differ from closed %s" % (iv, closed))
    payload = {"b": b, "c": c, "tate": [str(x) for x in tate.coefficients()],
               "integral_model": [str(x) for x in model.coefficients()],
               "initial_values": iv.as_list(), "discriminant": tate.discriminant()}
    out.record("curve", spec, payload, [
        "Tate normal form: b = %s, c = %s" % (b, c),
        "  coefficients %s" % tate,
        "integral model   %s" % model,
        "initial values   %s" % iv,
    ])


def cmd_period(args, out):
    spec = EdsSpec(args.rank, args.alpha)
    payload, lines = {"prime": args.prime}, []
    if args.method in ("direct", "both"):
        payload["direct"] = per.period_direct(spec, args.prime)
        lines.append("period (direct)  = %d" % payload["direct"])
    if args.method in ("formula", "both"):
        r = per.period_formula(spec, args.prime)
        payload["formula"] = r.pi
        payload["report"] = {"rho": r.rho, "a1": r.a1, "a2": r.a2, "e": r.e, "k": r.k,
                             "nu": r.nu, "tau": r.tau, "pi": r.pi, "branch": r.branch,
                             "branch_pi": r.branch_pi}
        lines.append("period (formula) = %d   rho=%d a1=%d a2=%d e=%d k=%d nu=%d tau=%s"
                     % (r.pi, r.rho, r.a1, r.a2, r.e, r.k, r.nu, r.tau))
        lines.append("  order-of-a1 branch: %s gives %s" % (r.branch, r.branch_pi))
    if args.method == "both" and payload["direct"] != payload["formula"]:
        raise VerificationFailed("direct period %d != formula period %d"
                                 % (payload["direct"], payload["formula"]))
    out.record("period", spec, payload, lines)


def _grid_cache_path(args, rank, lo, hi, primes):
    root = args.cache_dir or os.environ.get("EDSZERO_CACHE_DIR")
    if not root:
        return None
    name = "periods_N%d_%d_%d_%s.json" % (rank, lo, hi, "-".join(map(str, primes)))
    return Path(root) / name


def cmd_period_table(args, out):
    lo, hi = args.alpha_range
    primes = args.primes or list(PERIOD_PRIMES)
    cache = _grid_cache_path(args, args.rank, lo, hi, primes)
    grid = None
    if cache and cache.exists():
        raw = json.loads(cache.read_text())
        grid = {(int(a), int(p)): v for a, p, v in raw}
    if grid is None:
        grid = {}
        for a in admissible_alphas(args.rank, lo, hi):
            spec = EdsSpec(args.rank, a)
            for p in primes:
                try:
                    d = per.period_direct(spec, p)
                except BadPrime:
                    grid[(a, p)] = None
                    continue
                f = per.period_formula(spec, p).pi
                if f != d:
                    raise VerificationFailed("alpha=%d p=%d: direct %d formula %d" % (a, p, d, f))
                grid[(a, p)] = d
        if cache:
            cache.parent.mkdir(parents=True, exist_ok=True)
            cache.write_text(json.dumps(sorted([a, p, v] for (a, p), v in grid.items())))
    alphas = sorted({a for a, _ in grid})
    rows = [["α=%d" % a] + ["—" if grid[(a, p)] is None else grid[(a, p)] for p in primes]
            for a in alphas]
    payload = {"rank": args.rank, "primes": primes,
               "cells": [[a, p, grid[(a, p)]] for a in alphas for p in primes]}
    out.record("period-table", None, payload, _table(rows, [""] + ["F%d" % p for p in primes]))


def cmd_rank(args, out):
    spec = EdsSpec(args.rank, args.alpha)
    rho = per.rank_of_apparition(spec, args.prime)
    out.record("rank", spec, {"prime": args.prime, "rho": rho}, ["rho = %d" % rho])


def cmd_classify(args, out):
    rows = pc.summary_table(args.rank, args.power)
    M = pc.modulus(args.rank, args.power)
    lines = ["%s terms for rank %d, n mod %d" % (args.power, args.rank, M)]
    lines += _table([[r.kind, r.label, ",".join(map(str, r.residues)), r.note] for r in rows],
                    ["verdict", "condition", "residues", "note"])
    payload = {"modulus": M, "rows": [{"kind": r.kind, "condition": r.condition, "equation": r.equation,
                                       "residues": list(r.residues), "note": r.note} for r in rows]}
    failed = False
    spec = None
    if args.alpha is not None:
        spec = EdsSpec(args.rank, args.alpha)
        top = args.max_index or 6 * args.rank
        sweep = []
        for n in range(1, top + 1):
            if n % args.rank == 0:
                continue
            p, a = pc.predict_and_check(spec, n, args.power)
            sweep.append({"n": n, "predicted": p, "actual": a})
            failed |= p != a
        payload["sweep"] = sweep
        lines.append("")
        lines += _table([[s["n"], s["predicted"], s["actual"], "" if s["predicted"] == s["actual"] else "MISMATCH"]
                         for s in sweep], ["n", "predicted", "actual", ""])
    out.record("classify", spec, payload, lines)
    if failed:
        raise VerificationFailed("prediction and actual term disagree")


def cmd_solve(args, out):
    cond = cd.get_condition(args.condition)
    sol = cd.solve_condition(cond, args.bound)
    payload = {"condition": cond.key, "text": cond.text, "kind": sol.kind, "alphas": list(sol.alphas),
               "provenance": sol.provenance, "description": sol.description,
               "consistent": sol.consistent, "search_alphas": list(sol.search_alphas)}
    lines = ["%s  %s" % (cond.key, cond.text),
             "kind: %s   provenance: %s" % (sol.kind, sol.provenance),
             "alpha: {%s}" % ", ".join(map(str, sol.alphas)),
             "reduction: %s" % sol.description]
    if not sol.consistent:
        lines.append("note: search and published list disagree (search found {%s})"
                     % ", ".join(map(str, sol.search_alphas)))
    out.record("solve", None, payload, lines)


def _suite_closed_form(args):
    lo, hi = args.alpha_range or (-10, 10)
    top = args.max_index or 120
    fails = []
    for N in SUPPORTED_RANKS:
        for lab, n in cf.check_integrality(N):
            fails.append("rank %d: exponent of %s not integral at n=%d" % (N, lab, n))
        for a in admissible_alphas(N, lo, hi):
            r = cf.verify_closed_form(EdsSpec(N, a), top)
            if not r.ok:
                fails.append("rank %d alpha %d: first mismatch at n=%d" % (N, a, r.first_mismatch))
    return fails


def _suite_periods(args):
    lo, hi = args.alpha_range or (-5, 5)
    fails = []
    for N in PROPER_RANKS:
        for a in admissible_alphas(N, lo, hi):
            spec = EdsSpec(N, a)
            for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
                try:
                    d = per.period_direct(spec, p)
                    f = per.period_formula(spec, p).pi
                except (BadPrime, RankTooSmall):
                    continue
                if d != f:
                    fails.append("rank %d alpha %d p %d: direct %d formula %d" % (N, a, p, d, f))
    return fails


def _suite_powers(args):
    lo, hi = args.alpha_range or (-20, 20)
    fails = []
    for N in PROPER_RANKS:
        for power in ("square", "cube"):
            fixed = pc.corrected_transcription(N, power)
            for r, expected in fixed.items():
                v = pc.classify(N, r, power)
                if (v.kind, v.condition) != expected:
                    fails.append("rank %d %s residue %d: derived %s, table %s"
                                 % (N, power, r, (v.kind, v.condition), expected))
            top = args.max_index or 6 * N
            for a in admissible_alphas(N, lo, hi):
                spec = EdsSpec(N, a)
                for n in range(1, top + 1):
                    if n % N and len(set(pc.predict_and_check(spec, n, power))) != 1:
                        fails.append("rank %d %s alpha %d n %d: prediction wrong" % (N, power, a, n))
    return fails


def _suite_published(args):
    """Compare with the printed values; discrepancies here are reported, not repaired."""
    fails = []
    spec = EdsSpec(12, 3)
    seq = sequence(initial_values(spec), 8)
    for i, printed in enumerate(RANK12_ALPHA3_TERMS, start=1):
        if str(seq[i]) != printed:
            fails.append("rank 12 alpha 3: h%d printed %d digits, computed %d digits"
                         % (i, len(printed.lstrip("-")), len(str(seq[i]).lstrip("-"))))
    for (a, p), printed in sorted(RANK6_PERIODS.items()):
        spec = EdsSpec(6, a)
        try:
            got = per.period_direct(spec, p)
        except BadPrime:
            got = None
        if got != printed:
            fails.append("rank 6 period table alpha %d p %d: printed %s, computed %s" % (a, p, printed, got))
    ex = sequence(initial_values_from_curve(CurveCoefficients(17, -60, -120)), 8)
    scaled = apply_equivalence(ex, EquivalenceScale(2), 4)
    if ex.terms[2:5] != (-120, -864000, -186624000000) or ex[8] != 0 or \
            scaled.terms[2:5] != (-960, -221184000, -6115295232000000):
        fails.append("worked rank 8 example differs")
    for (N, power), table in sorted(pc.TRANSCRIBED.items()):
        for r, expected in sorted(table.items()):
            v = pc.classify(N, r, power)
            if (v.kind, v.condition) != expected:
                fails.append("rank %d %s residue %d: printed %s, derived %s"
                             % (N, power, r, expected, (v.kind, v.condition)))
    return fails


SUITES = {"closed-form": _suite_closed_form, "periods": _suite_periods,
          "powers": _suite_powers, "published": _suite_published}


def cmd_verify(args, out):
    names = ["closed-form", "periods", "powers"] if args.suite == "all" else [args.suite]
    results = {name: SUITES[name](args) for name in names}
    lines = []
    for name, fails in results.items():
        lines.append("%-12s %s" % (name, "ok" if not fails else "%d mismatches" % len(fails)))
        lines += ["  " + f for f in fails]
    out.record("verify", None, {name: f for name, f in results.items()}, lines)
    if any(results.values()):
        raise VerificationFailed("verification failed")


def _write_csv(rows, header, target):
    w = csv.writer(target, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


CLOSED_FORM_HEADER = ["rank", "factor", "modulus", "residue", "a", "offset", "d", "sign"]
REGISTRY_HEADER = ["id", "condition", "power", "ranks", "reduction", "comment", "known_solutions", "note"]


def cmd_tables(args, out):
    targets = []
    if args.which in ("closed-form", "both"):
        targets.append(("closed_form.csv", list(cf.table_rows()), CLOSED_FORM_HEADER))
    if args.which in ("conditions", "both"):
        targets.append(("conditions.csv", list(cd.registry_rows()), REGISTRY_HEADER))
    for name, rows, header in targets:
        if args.out:
            Path(args.out).mkdir(parents=True, exist_ok=True)
            with open(Path(args.out) / name, "w", newline="", encoding="utf-8") as fh:
                _write_csv(rows, header, fh)
        elif out.json:
            out.record("tables", None, {"table": name, "header": header, "rows": rows}, [])
        else:
            sys.stdout.write("# %s\n" % name)
            _write_csv(rows, header, sys.stdout)


# ---- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON record per line")
    common.add_argument("--digits", type=int, help="abbreviate integers longer than this")

    p = argparse.ArgumentParser(prog="edszero", description="Elliptic divisibility sequences with a zero term.")
    sub = p.add_subparsers(dest="command", required=True)

    def spec_args(sp, alpha_required=True):
        sp.add_argument("--rank", "-N", type=int, required=True)
        sp.add_argument("--alpha", "-a", type=int, required=alpha_required,
                        help="family parameter (raw b or a3 for ranks 2 and 3)")

    sp = sub.add_parser("term", parents=[common], help="one term h_n")
    spec_args(sp)
    sp.add_argument("--index", "-n", type=int, required=True)
    sp.add_argument("--method", choices=["closed", "recurrence", "both"], default="closed")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_term)

    sp = sub.add_parser("seq", parents=[common], help="terms h_0..h_M")
    spec_args(sp)
    sp.add_argument("--count", "-M", type=int, required=True)
    sp.add_argument("--mod", type=int)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser("curve", parents=[common], help="Tate normal form and initial values")
    spec_args(sp)
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("period", parents=[common], help="period modulo a prime")
    spec_args(sp)
    sp.add_argument("--prime", "-p", type=int, required=True)
    sp.add_argument("--method", choices=["direct", "formula", "both"], default="both")
    sp.set_defaults(func=cmd_period)

    sp = sub.add_parser("period-table", parents=[common], help="grid of periods")
    sp.add_argument("--rank", "-N", type=int, required=True)
    sp.add_argument("--alpha-range", type=_range, default=(-5, 5),
                    help="lo..hi; write --alpha-range=-5..5 when lo is negative")
    sp.add_argument("--primes", type=_primes)
    sp.add_argument("--cache-dir", help="reuse grids stored here (or $EDSZERO_CACHE_DIR)")
    sp.set_defaults(func=cmd_period_table)

    sp = sub.add_parser("rank", parents=[common], help="rank of apparition modulo a prime")
    spec_args(sp)
    sp.add_argument("--prime", "-p", type=int, required=True)
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("classify", parents=[common], help="square/cube verdicts by residue class")
    spec_args(sp, alpha_required=False)
    sp.add_argument("--power", choices=["square", "cube"], required=True)
    sp.add_argument("--max-index", type=int)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("solve", parents=[common], help="solution set of a condition")
    sp.add_argument("--condition", required=True, help="eq1..eq49, a=sq, a-1=cube, ...")
    sp.add_argument("--bound", type=int, default=cd.DEFAULT_ALPHA_BOUND)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", parents=[common], help="cross-validation suites")
    sp.add_argument("--suite", choices=["closed-form", "periods", "powers", "published", "all"], default="all")
    sp.add_argument("--alpha-range", type=_range, help="lo..hi (use the = form for negative bounds)")
    sp.add_argument("--max-index", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("tables", parents=[common], help="dump closed-form and condition tables as CSV")
    sp.add_argument("--which", choices=["closed-form", "conditions", "both"], default="both")
    sp.add_argument("--out", help="directory to write CSV files into")
    sp.set_defaults(func=cmd_tables)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Out(args)
    try:
        args.func(args, out)
    except VerificationFailed as exc:
        sys.stderr.write(json.dumps({"error": "verification-failed", "message": str(exc)}) + "\n")
        return 1
    except EdsError as exc:
        sys.stderr.write(json.dumps(exc.record(), ensure_ascii=False) + "\n")
        return 2 if isinstance(exc, USAGE_ERRORS) else 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
