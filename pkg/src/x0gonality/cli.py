"""Command-line entry point.

Exit codes: 0 for a conclusive answer, 2 when a budget ran out or a table
row is still open, 1 for errors (bad label, missing fixture, invalid prime,
table mismatch).
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import boundskb as kbm
from .curve import FIXTURE_ENV, CurveError, load_curve, reduce_mod_p
from .ffield import FieldError, is_prime
from .gonsearch import BudgetExceeded, find_function_of_degree, prove_gonality_lower_bound
from .picard import SieveResult, sieve

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2
TABLE_COLUMNS = ("N", "g", "gonQ", "LB", "UB", "gonC", "LB", "UB")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    fixtures: str | None = None
    primes: list = field(default_factory=list)
    target: int | None = None
    max_divisors: int | None = None
    max_seconds: float | None = None
    workers: int = 1
    fmt: str = "text"
    deterministic: bool = False

    def check(self):
        if self.max_divisors is not None and self.max_divisors <= 0:
            raise UsageError("--max-divisors must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise UsageError("--max-seconds must be positive")
        if self.workers <= 0:
            raise UsageError("--workers must be positive")
        for p in self.primes:
            if not is_prime(p):
                raise UsageError(f"{p} is not prime")


# --------------------------------------------------------------------------
# output helpers

def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if "elapsed" not in k}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def _emit_json(obj, cfg: RunConfig, out):
    if cfg.deterministic:
        obj = _strip_timing(obj)
    json.dump(obj, out, indent=2, sort_keys=True)
    out.write("\n")


def _emit_rows(header, rows, cfg: RunConfig, out):
    if cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _elapsed(cfg, seconds):
    return "" if cfg.deterministic else f" ({seconds:.1f}s)"


# --------------------------------------------------------------------------
# subcommands

def cmd_invariants(args, cfg, out):
    inv = kbm.arithmetic_invariants(args.N)
    rec = asdict(inv)
    if cfg.fmt == "json":
        _emit_json(rec, cfg, out)
    else:
        _emit_rows(list(rec), [list(rec.values())], cfg, out)
    return EXIT_OK


def cmd_ogg_filter(args, cfg, out):
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    levels = kbm.ogg_gonality_filter(range(args.start, args.stop + 1), args.d)
    if cfg.fmt == "json":
        _emit_json({"d": args.d, "from": args.start, "to": args.stop, "levels": levels}, cfg, out)
    elif cfg.fmt == "csv":
        _emit_rows(["N"], [[n] for n in levels], cfg, out)
    else:
        out.write(", ".join(map(str, levels)) + "\n")
    return EXIT_OK


def _fp_curve(cfg, label, p):
    model = load_curve(label, cfg.fixtures)
    if p not in model.good_primes:
        raise UsageError(f"{p} is not a good prime of {label} (fixture primes: {model.good_primes})")
    return reduce_mod_p(model, p)


def _verdict_report(v, cfg, out):
    if cfg.fmt == "json":
        _emit_json(v.as_dict(), cfg, out)
    elif cfg.fmt == "csv":
        _emit_rows(["curve", "p", "claim", "bound", "divisors_examined"],
                   [[v.label, v.p, v.claim, v.bound if v.bound is not None else "", v.stats.divisors]], cfg, out)
    else:
        head = v.claim if v.bound is None or v.claim == "inconclusive" else f"{v.claim} {v.bound}"
        out.write(head + "\n")
        out.write(f"{v.label} over F_{v.p}: {v.stats.divisors} divisors examined"
                  f"{_elapsed(cfg, v.stats.elapsed)}\n")
        if v.witness is not None:
            out.write(f"witness divisor: {v.witness.divisor!r}\n")
        if v.reason:
            out.write(f"reason: {v.reason}\n")
    return EXIT_OK if v.conclusive else EXIT_INCONCLUSIVE


def cmd_fp_gonality(args, cfg, out):
    if args.target < 2:
        raise UsageError("--target must be at least 2")
    curve = _fp_curve(cfg, args.curve, args.p)
    v = prove_gonality_lower_bound(curve, args.target, cfg.max_divisors, cfg.max_seconds)
    return _verdict_report(v, cfg, out)


def cmd_find_function(args, cfg, out):
    if args.degree < 1:
        raise UsageError("--degree must be positive")
    curve = _fp_curve(cfg, args.curve, args.p)
    v = find_function_of_degree(curve, args.degree, cfg.max_divisors, cfg.max_seconds)
    return _verdict_report(v, cfg, out)


def _sieve_leg(job):
    label, fixtures, d, p, restrict, max_seconds = job
    return sieve(load_curve(label, fixtures), d, primes=(p,), restrict=restrict, max_seconds=max_seconds)


def cmd_sieve(args, cfg, out):
    model = load_curve(args.curve, cfg.fixtures)
    for p in cfg.primes:
        if p not in model.good_primes:
            raise UsageError(f"{p} is not a good prime of {args.curve}")
    jobs = [(args.curve, cfg.fixtures, args.d, p, args.restrict, cfg.max_seconds) for p in cfg.primes]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            legs = list(pool.map(_sieve_leg, jobs))
    else:
        legs = [_sieve_leg(j) for j in jobs]
    # merge in prime order, independent of completion order
    res = SieveResult(args.d, list(cfg.primes), model.torsion.group_shape)
    for p, leg in zip(cfg.primes, legs):
        res.per_prime[p] = leg.per_prime[p]
        res.witnesses[p] = leg.witnesses[p]
        res.counts[p] = leg.counts[p]
        res.elapsed[p] = leg.elapsed[p]
    if cfg.fmt == "json":
        _emit_json({"curve": args.curve, **res.as_dict()}, cfg, out)
    elif cfg.fmt == "csv":
        _emit_rows(["p", "divisors_scanned", "images"],
                   [[p, res.counts[p], " ".join(map(str, res.per_prime[p]))] for p in cfg.primes], cfg, out)
    else:
        out.write(res.conclusion + "\n")
        out.write(f"{args.curve}, d = {args.d}, torsion {list(res.group_shape)}\n")
        for p in cfg.primes:
            imgs = ", ".join(map(str, res.per_prime[p])) or "none"
            out.write(f"  p = {p}: {res.counts[p]} divisors, images {imgs}{_elapsed(cfg, res.elapsed[p])}\n")
        out.write(f"  intersection: {', '.join(map(str, res.intersection)) or 'none'}\n")
    return EXIT_OK


def _load_kb(args):
    files = args.facts or kbm.default_fact_files()
    facts = []
    for f in files:
        facts.extend(kbm.ingest_facts(f))
    # levels above the report range still feed degeneracy and quotient rules
    return kbm.KnowledgeBase(facts, max_N=max(args.max_N, args.universe))


def _bound_cells(iv: kbm.BoundInterval):
    return [iv.text(), iv.lb_provenance.short(), iv.ub_provenance.short() if iv.ub_provenance else ""]


def _table_rows(results, genus, max_N):
    rows = []
    for N in range(1, max_N + 1):
        lab = kbm.x0_label(N)
        if lab not in results:
            continue
        q, c = results[lab]
        rows.append([N, genus.get(N, "")] + _bound_cells(q) + _bound_cells(c))
    return rows


def cmd_bounds(args, cfg, out):
    kb = _load_kb(args)
    t0 = time.monotonic()
    results = kbm.propagate(kb)
    dt = time.monotonic() - t0
    genus = {N: kbm.arithmetic_invariants(N).genus for N in range(1, args.max_N + 1)}
    if cfg.fmt == "json":
        rows = []
        for N in range(1, args.max_N + 1):
            lab = kbm.x0_label(N)
            if lab in results:
                q, c = results[lab]
                rows.append({"N": N, "genus": genus[N], "Q": q.as_dict(), "C": c.as_dict()})
        _emit_json({"max_N": args.max_N, "rows": rows, "elapsed_seconds": round(dt, 3)}, cfg, out)
    else:
        _emit_rows(TABLE_COLUMNS, _table_rows(results, genus, args.max_N), cfg, out)
    return EXIT_OK


def cmd_check_tables(args, cfg, out):
    kb = _load_kb(args)
    expected = kbm.load_expected_table(args.expected or kbm.expected_table_path())
    t0 = time.monotonic()
    results = kbm.propagate(kb)
    dt = time.monotonic() - t0
    report = kbm.check_against_table(results, expected, args.max_N)
    if cfg.fmt == "json":
        _emit_json({**report.summary(), "elapsed_seconds": round(dt, 3),
                    "rows": [r for r in report.rows]}, cfg, out)
    elif cfg.fmt == "csv":
        _emit_rows(["N", "genus", "gonQ", "expected_gonQ", "statusQ", "gonC", "expected_gonC", "statusC"],
                   [[r["N"], "ok" if r["genus_ok"] else "differs", r["got_Q"], r["want_Q"], r["Q"], r["got_C"],
                     r["want_C"], r["C"]] for r in report.rows], cfg, out)
    else:
        for r in report.rows:
            if r["Q"] != "match" or r["C"] != "match":
                out.write(f"N={r['N']}: Q {r['got_Q']} vs {r['want_Q']} ({r['Q']}), "
                          f"C {r['got_C']} vs {r['want_C']} ({r['C']})\n")
        s = report.summary()
        out.write(f"rows {s['rows']}  gonQ {s['gonQ']}  gonC {s['gonC']}{_elapsed(cfg, dt)}\n")
        if s["genus_mismatches"]:
            out.write(f"genus differs from the table at N = {s['genus_mismatches']}\n")
    if not report.consistent:
        return EXIT_ERROR
    return EXIT_OK if report.closed else EXIT_INCONCLUSIVE


# --------------------------------------------------------------------------
# argument parsing

def _primes(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("text", "csv", "json"), default="text")
    common.add_argument("--deterministic", action="store_true", help="omit timing fields")
    common.add_argument("--fixtures", help=f"fixture directory (default: ${FIXTURE_ENV} or the shipped set)")
    common.add_argument("--max-divisors", type=int)
    common.add_argument("--max-seconds", type=float)
    common.add_argument("--workers", type=int, default=1)

    ap = argparse.ArgumentParser(prog="x0gonality", description="Gonality bounds for modular curves X0(N).")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common], help="index, cusps, elliptic points and genus")
    s.add_argument("N", type=int)
    s.set_defaults(run=cmd_invariants)

    s = sub.add_parser("ogg-filter", parents=[common], help="levels whose point-count bound rules out degree d")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--from", dest="start", type=int, required=True)
    s.add_argument("--to", dest="stop", type=int, required=True)
    s.set_defaults(run=cmd_ogg_filter)

    s = sub.add_parser("fp-gonality", parents=[common], help="prove gon over F_p is at least a target")
    s.add_argument("--curve", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--target", type=int, required=True)
    s.set_defaults(run=cmd_fp_gonality)

    s = sub.add_parser("find-function", parents=[common], help="search for a degree-e function over F_p")
    s.add_argument("--curve", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.set_defaults(run=cmd_find_function)

    s = sub.add_parser("sieve", parents=[common], help="Mordell-Weil sieve on W_d^1")
    s.add_argument("--curve", required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--primes", type=_primes, required=True)
    s.add_argument("--restrict", action="store_true", help="scan only pattern-restricted divisors")
    s.set_defaults(run=cmd_sieve)

    for name, run, hlp in (("bounds", cmd_bounds, "propagate bounds over the fact base"),
                           ("check-tables", cmd_check_tables, "compare propagated bounds to a table")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("--facts", action="append", help="fact file (repeatable; default: shipped facts)")
        s.add_argument("--max-N", dest="max_N", type=int, default=144 if name == "check-tables" else 100)
        if name == "check-tables":
            s.add_argument("--expected", help="expected table CSV (default: shipped table)")
        s.add_argument("--universe", type=int, default=400, help="largest level the engine reasons about")
        s.set_defaults(run=run)
    return ap


def run_command(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR
    primes = [args.p] if hasattr(args, "p") else getattr(args, "primes", [])
    cfg = RunConfig(args.command, args.fixtures or os.environ.get(FIXTURE_ENV) or None, list(primes),
                    getattr(args, "target", None), args.max_divisors, args.max_seconds, args.workers, args.fmt,
                    args.deterministic)
    try:
        cfg.check()
        return args.run(args, cfg, out)
    except (UsageError, CurveError, FieldError, kbm.FactError, FileNotFoundError, KeyError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceeded as e:
        print(f"inconclusive: budget exhausted ({e})", file=out)
        return EXIT_INCONCLUSIVE
    except kbm.KBInconsistent as e:
        print(f"error: inconsistent fact base: {e}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
