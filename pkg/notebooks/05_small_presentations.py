# %% [markdown]
# # Small presentations: Sp_2(Z/5) and the cyclic surrogates

# %%
import numpy as np

from braidquot import crystal_surrogate, enumerate_cosets, perm_rep, wajnryb_sp2_5
from braidquot.presentations import format_presentation, without_relator

p = wajnryb_sp2_5()
print(format_presentation(p))
short = without_relator(p, 3)
t, _ = enumerate_cosets(short)
print("without the last relator:", t.ncosets)
print("last relator acts trivially:", np.array_equal(perm_rep(t).image(p.relators[3]), np.arange(t.ncosets)))

# %% [markdown]
# Adding s_i^p and adjacent commutators [s_i^m, s_{i+1}^m] with p = mk + 1
# collapses B_n to a cyclic group of order p. The surrogate maps onto the
# quotient we care about, which in turn maps onto Z/p, so the orders pin it.

# %%
for n, m, k in [(3, 2, 1), (3, 3, 1), (4, 2, 2), (3, 4, 1), (5, 3, 2)]:
    q = m * k + 1
    order = enumerate_cosets(crystal_surrogate(n, m, q))[0].ncosets
    print(f"n={n} m={m} k={k}: order {order} (p = {q})")
