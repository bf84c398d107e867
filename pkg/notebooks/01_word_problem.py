# %% [markdown]
# # Braid words and the word problem
#
# Words are tuples of signed generator indices. Two words name the same
# braid exactly when their left normal forms agree, so the normal form is
# all we need to check identities in B_n.

# %%
from braidquot import braid, full_twist, garside_nf, parse_word, format_word, words_equal
from braidquot.braids import nf_to_word, permutation_of

w = parse_word("s1^-1*s2^-4*s1")
print(w, "->", format_word(w))

# %% [markdown]
# The braid relation, and centrality of the full twist:

# %%
print(words_equal(braid(3, [1, 2, 1]), braid(3, [2, 1, 2])))
d2 = full_twist(4)
x = braid(4, [2, -3, 1])
print(words_equal(d2 * x, x * d2), garside_nf(d2))

# %%
nf = garside_nf(braid(4, [1, -2, 3, 3, -1, 2]))
print("inf", nf.inf, "factors", nf.factors)
print("as a word:", format_word(nf_to_word(nf).word))
print("permutation:", permutation_of(braid(4, [1, -2, 3, 3, -1, 2])))

# %% [markdown]
# ## Conjugation action on the level-4 Coxeter subgroup of B_3
#
# Six elements x1..x6 generate the normal closure of s1^4 (written here as
# ambient words). Conjugating by s1 and s2 permutes them up to inner
# automorphisms; every rule below is checked as a braid identity.

# %%
from braidquot.scenarios import TABLE2_WORDS, TABLE3_ACTIONS, table2_word


def show(expr):
    return "*".join(f"x{abs(k)}" + ("" if k > 0 else "^-1") for k in expr)


for g, i, rhs in TABLE3_ACTIONS:
    lhs = braid(3, (g,) + TABLE2_WORDS[i] + (-g,))
    ok = words_equal(lhs, braid(3, table2_word(rhs)))
    print(f"s{g} x{i} s{g}^-1 = {show(rhs):18s} {ok}")
