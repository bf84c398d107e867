# %% [markdown]
# # Coxeter quotients by coset enumeration
#
# Adding s1^m to the Artin presentation gives B_n / N_n(s1^m); enumerating
# cosets of the trivial subgroup counts its elements. The quotient is finite
# only when (m-2)(n-2) < 4, which for n, m >= 3 leaves five pairs.

# %%
import time

from braidquot import EnumLimits, coxeter_quotient, enumerate_cosets, perm_rep, element_order, full_twist
from braidquot.coset_enum import audit, format_table

for n, m in [(3, 3), (3, 4), (3, 5), (4, 3), (5, 3)]:
    p = coxeter_quotient(n, m)
    t0 = time.perf_counter()
    table, _ = enumerate_cosets(p)
    print(f"({n},{m}): order {table.ncosets:6d}  audit={audit(table, p)}  {time.perf_counter() - t0:.2f}s"
          f"  ({table.stats['total_defined']} defined, {table.stats['max_live']} live at peak)")

# %% [markdown]
# Both strategies end with the same canonical renumbering, so the tables
# agree entry for entry:

# %%
a, _ = enumerate_cosets(coxeter_quotient(3, 4), lim=EnumLimits(strategy="relator-first"))
b, _ = enumerate_cosets(coxeter_quotient(3, 4), lim=EnumLimits(strategy="coset-first"))
print(format_table(a) == format_table(b))
print(format_table(a).splitlines()[:4])

# %% [markdown]
# The coset action is the regular representation, so element orders are
# cycle-length lcms.

# %%
r = perm_rep(enumerate_cosets(coxeter_quotient(3, 5))[0])
print("Delta^2 has order", element_order(r, full_twist(3).word))
print("Delta^4 has order", element_order(r, full_twist(3).word * 2))

# %%
from braidquot.coset_enum import CosetLimitExceeded

try:
    enumerate_cosets(coxeter_quotient(3, 6), lim=EnumLimits(max_cosets=50_000))
except CosetLimitExceeded as exc:
    print("(3,6):", exc)
