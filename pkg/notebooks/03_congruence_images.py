# %% [markdown]
# # Burau matrices and congruence images
#
# At t = -1 the Burau matrices become integral. Reducing mod m and
# enumerating the matrix group gives |B_n / B_n[m]|; dividing the quotient
# orders by these gives the order of B_n[m] / N_n(s1^m).

# %%

from braidquot import braid, full_twist, image_order, in_congruence, invariant_form, rho, rho_m
from braidquot.burau import format_matrix, rho_generator

for i in (1, 2):
    print(f"s{i} ->", format_matrix(rho_generator(3, i)))
print("Delta_3^2 ->", format_matrix(rho(full_twist(3))))

# %% [markdown]
# For odd n the images preserve a symplectic form. For even n the full
# n x n matrices are used; they fix (1, ..., 1) and preserve a
# nondegenerate alternating form as well.

# %%
for n in (3, 4, 5):
    print(n, invariant_form(n).tolist())

# %%
group_orders = {(3, 3): 24, (3, 4): 96, (3, 5): 600, (4, 3): 648, (5, 3): 155520}
for (n, m), full in group_orders.items():
    img = image_order(n, m)
    print(f"({n},{m}): image {img:6d}   kernel {full // img}")

# %% [markdown]
# Named elements of the kernels:

# %%
A = (-4, -3, -3, -4, -2, 3, -2)
gen53 = (1, 2, 3) * 4 + A + (-1, -1) + tuple(-x for x in reversed(A))
print(in_congruence(braid(3, (1, 1, 2, 2, -1, -1, -2, -2)), 4))
print(in_congruence(braid(5, gen53), 3))
print("rho_3(Delta_5^2) =", rho_m(full_twist(5), 3))
