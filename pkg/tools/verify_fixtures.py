"""Check every fixture's reductions against the Hecke-trace point counts.

Usage: python3 tools/verify_fixtures.py [--prune] [--kmax K]
With --prune, primes where the reduced model fails (singular, wrong
Hilbert function, wrong counts) are removed from good_primes.
"""
import argparse
import json
import sys
import time
from pathlib import Path

from x0gonality import curve as C

ap = argparse.ArgumentParser()
ap.add_argument("--prune", action="store_true")
ap.add_argument("--kmax", type=int, default=2)
ap.add_argument("--only", default=None)
args = ap.parse_args()

H = json.loads(Path(__file__).parents[1].joinpath("tests/data/hecke_counts.json").read_text())
for label, path in C.fixture_labels().items():
    if args.only and label != args.only:
        continue
    d = json.loads(path.read_text())
    model = C.load_model(path)
    keep = []
    for p in model.good_primes:
        t = time.time()
        if p > 13:
            print(f"{label:14s} p={p:2d} dropped: outside the field scope", flush=True)
            continue
        try:
            cur = C.reduce_mod_p(model, p)
            kmax = args.kmax
            if model.genus > 12 or p > 11:
                kmax = min(kmax, 1)
            got = [cur.count_points(k) for k in range(1, kmax + 1)]
            exp = H.get(label, {}).get(str(p), [])[:kmax]
            ok = got == exp if exp else True
            status = "ok" if ok else f"MISMATCH {got} vs {exp}"
        except C.CurveError as exc:
            ok, status = False, f"fail: {exc}"
        print(f"{label:14s} p={p:2d} {status} ({time.time() - t:.1f}s)", flush=True)
        if ok:
            keep.append(p)
    if args.prune and keep != d["good_primes"]:
        d["good_primes"] = keep
        path.write_text(json.dumps(d, indent=1) + "\n")
        C._MODEL_CACHE.clear()
