# %% [markdown]
# # Sieving a Brill-Noether locus: X0(97) has no degree-5 map over Q
#
# X0(97) has genus 7 and w = w97 acts on it.  The argument runs as follows.
#
# * A rational degree-5 function gives a rational effective divisor D with
#   l(D) >= 2.
# * Then D - w(D) lies in the minus part of J0(97)(Q).  That part has rank
#   zero, and the cuspidal class D0 = (0) - (oo) generates its torsion, of
#   order 8.
# * Reducing mod a good odd prime p is injective on torsion, so D - w(D)
#   reduces to k * D0 for one k mod 8, the same at every prime.
#
# At each prime we list which k actually occur for degree-5 divisors with
# l(D) >= 2 over F_p.

# %%
import sys
import time

from x0gonality.curve import load_curve, reduce_mod_p
from x0gonality.picard import class_order, sieve

model = load_curve("X0(97)")
print(model.label, "genus", model.genus, "torsion", model.torsion)

# %% [markdown]
# The generator keeps its order after reduction.

# %%
from x0gonality.picard import torsion_generators

for p in (3, 5):
    X = reduce_mod_p(model, p)
    (D0,) = torsion_generators(X, model.torsion)
    print(f"p = {p}: order of D0 is", class_order(X, D0, 64))

# %% [markdown]
# p = 3 and p = 5 each leave candidates: {0} at 3 and {1, 7} at 5.  No single
# k survives both, so those two primes alone already finish the job.
# Pass `--all` to also run p = 7 (a few minutes), where no k survives at all.

# %%
primes = (3, 5, 7) if "--all" in sys.argv else (3, 5)
t = time.monotonic()
res = sieve(model, 5, primes=primes)
for p in res.primes:
    print(f"p = {p}: {res.counts[p]} divisors scanned, k in {[v[0] for v in res.per_prime[p]]}")
print("intersection", res.intersection, "->", res.conclusion, f"({time.monotonic() - t:.0f}s)")
