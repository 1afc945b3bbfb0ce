# %% [markdown]
# # Lower bounds for gonality over a finite field
#
# If a curve with good reduction at p has a function of degree d over Q, its
# reduction has one of degree at most d over F_p.  Over F_p everything is
# finite: a degree-e function has an effective polar divisor D with l(D) >= 2,
# and there are finitely many effective divisors of degree e.

# %%
from x0gonality.curve import load_curve, reduce_mod_p
from x0gonality.gonsearch import find_function_of_degree, prove_gonality_lower_bound, support_patterns
from x0gonality.rrspace import rr_dim

X = reduce_mod_p(load_curve("X0(38)"), 5)
print(X.label, "genus", X.genus)
for d in range(1, 4):
    print(f"  places of degree {d}:", len(X.places(d)))

# %% [markdown]
# Counting points cuts the search down.  X0(38) has n rational points over F_5
# and a degree-e map spreads them over the p + 1 = 6 rational fibres, so some
# fibre holds at most ceil(n / 6) - 1 of them, or every fibre holds exactly
# n / 6.  Each case is one support pattern, and only polar divisors that match
# some pattern need a Riemann-Roch computation.

# %%
n = len(X.places(1))
for e in (2, 3):
    print(f"e = {e}:", support_patterns(n, X.p, e))

v = prove_gonality_lower_bound(X, 4)
print(v.claim, v.bound, "after", v.stats.divisors, "divisors", v.stats.per_degree)

# %% [markdown]
# The same search finds functions when they exist.  X0(53) reduces mod 5 to a
# curve lying on a quadric cone, and the lines through the vertex cut out a
# rational pencil of degree 3.  Mod 7 the quadric is smooth with a non-square
# discriminant, so neither ruling is rational and the bound 4 holds.

# %%
for p in (5, 7):
    Y = reduce_mod_p(load_curve("X0(53)"), p)
    v = prove_gonality_lower_bound(Y, 4)
    print(f"X0(53) mod {p}:", v.claim, v.bound)
    if v.witness is not None:
        D = v.witness.divisor
        print("   polar divisor", D, "l(D) =", rr_dim(Y, D))

# %% [markdown]
# Quotients by Atkin-Lehner involutions are handled the same way.  For genus-4
# quotients, ruling out degree 3 over some F_p shows they are not trigonal.

# %%
for label, p in [("X0(110)/w55", 7), ("X0(188)/w47", 3)]:
    Z = reduce_mod_p(load_curve(label), p)
    print(label, f"mod {p}: degree 3 ->", find_function_of_degree(Z, 3).claim)
