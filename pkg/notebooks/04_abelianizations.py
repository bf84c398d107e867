# %% [markdown]
# # Abelianizing the Coxeter subgroups
#
# Reidemeister-Schreier turns the coset table into one relation per
# (coset, relator) over the Schreier generators; the Smith form of the
# exponent-sum matrix gives the abelian invariants.
#
# Run with `--long` to include the (5,3) case (a 933120 x 466561 matrix,
# rank computed modulo two primes; a few minutes).

# %%
import sys
import time

from braidquot import braid_presentation, coxeter_quotient, enumerate_cosets, rank_mod_p, relation_matrix
from braidquot import abelian_invariants, schreier_generators

for n, m in [(3, 3), (3, 4), (3, 5), (4, 3)]:
    table, tr = enumerate_cosets(coxeter_quotient(n, m))
    mat = relation_matrix(braid_presentation(n), table, tr)
    free, torsion = abelian_invariants(mat)
    print(f"({n},{m}): {mat.nrows} x {mat.ncols}, free rank {free}, torsion {list(torsion)}")

# %% [markdown]
# Schreier generators carry their ambient words, e.g. in the (3,3) case:

# %%
from braidquot import format_word

table, tr = enumerate_cosets(coxeter_quotient(3, 3))
sg = schreier_generators(table, tr)
for k in range(5):
    print(k + 1, format_word(sg.ambient_word(k)))

# %%
if "--long" in sys.argv:
    t0 = time.perf_counter()
    table, tr = enumerate_cosets(coxeter_quotient(5, 3))
    mat = relation_matrix(braid_presentation(5), table, tr)
    for p in (1000003, 999983):
        print(f"(5,3) mod {p}: free rank {mat.ncols - rank_mod_p(mat, p)}  [{time.perf_counter() - t0:.0f}s]")
