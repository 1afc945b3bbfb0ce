# %% [markdown]
# # From facts to gonality intervals
#
# The knowledge base starts from arithmetic invariants of X0(N): genus, cusps
# and elliptic points.  It adds literature facts with citations and verdicts
# computed by this package.  Bound rules then run to a fixpoint, and every
# bound carries the chain of facts that produced it.

# %%
import time

from x0gonality import boundskb as kb

inv = kb.arithmetic_invariants(97)
print(inv)
print("Ogg bound L_2(97) =", kb.ogg_bound(97, 2))

# %%
base = kb.load_default_kb(400)
t = time.monotonic()
results = kb.propagate(base)
print(f"{len(base.facts)} facts, {len(results)} curves, fixpoint in {time.monotonic() - t:.2f}s")

# %% [markdown]
# X0(97): the lower bound 6 over Q comes from the sieve (see
# mordell_weil_sieve.py).  The upper bound comes from a degree-6 function.

# %%
q, c = results[kb.x0_label(97)]
print("gon_Q", q.text(), " gon_C", c.text())
print(q.lb_provenance.render())

# %% [markdown]
# Comparing with the expected table, values only.  N = 130 stays open over C:
# none of the shipped facts gives gon_C(X0(130)) >= 6.

# %%
rep = kb.check_against_table(results, kb.load_expected_table(kb.expected_table_path()), 144)
print(rep.summary())

# %% [markdown]
# Ogg's inequality bounds #X0(N)(F_{p^2}) from below.  A curve with a
# degree-d map over Q has at most d (q + 1) points over F_q, so large N
# cannot be hexagonal.

# %%
print(kb.ogg_gonality_filter(range(320, 345), 6))
