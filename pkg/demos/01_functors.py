# %% [markdown]
# # Functors on the stable category of Lambda(n, t)
#
# Indecomposable non-projective modules are uniserial and written S[i,l]: top at
# vertex i, Loewy length l with 1 <= l <= t-1. Every functor used later acts on
# them by a permutation of this finite set, so we can look at each one directly.

# %%
from nakayama_cy import make_algebra, IndecModule
from nakayama_cy.algebra import ar_translate, nakayama, omega_pow, serre, shift, shift_order_global

A = make_algebra(3, 4)
X = IndecModule(0, 1)
print("algebra", A, "with", A.num_indecomposables, "non-projective indecomposables")

# %% [markdown]
# The cosyzygy [1] swaps Loewy length l with t - l. Applying it twice only moves the top.

# %%
for k in range(-2, 3):
    print(f"Omega^{k}({X}) = {omega_pow(A, X, k)}")

# %% [markdown]
# The Serre functor can be built three ways, and all of them agree.

# %%
print("F(X)          =", serre(A, X))
print("Omega N (X)   =", omega_pow(A, nakayama(A, X), 1))
print("[1] tau (X)   =", shift(A, ar_translate(A, X), 1))

# %% [markdown]
# Shift periodicity. The shift [1] has finite order on the whole category.
# Here the order is 6, and the loop below confirms that nothing smaller works.

# %%
o = shift_order_global(A)
print("o([1]) =", o)
for r in range(1, o + 1):
    fixed = all(shift(A, Y, r) == Y for Y in A.indecomposables())
    print(f"  [{r}] = id? {fixed}")
