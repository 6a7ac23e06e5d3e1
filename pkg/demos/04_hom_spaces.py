# %% [markdown]
# # Hom spaces from matrices
#
# Up to here everything was combinatorics on labels. This demo builds actual
# representations and solves for module maps. S[i,l] becomes a quiver representation
# with basis b_0..b_{l-1}. Each arrow sends b_u to b_{u+1}. Hom(X, Y) is the kernel of
# the intertwiner equations, solved exactly over Q.

# %%
import numpy as np

from nakayama_cy import make_algebra, IndecModule
from nakayama_cy.algebra import serre
from nakayama_cy.homspace import DEFAULT_PRIME, hom_dim, matrix_rep, stable_dim_table, stable_hom

A = make_algebra(2, 3)
R = matrix_rep(A, 0, 3)
print("P(0) over Lambda(2,3): vertex dims", R.vertex_dims.tolist())
for j, m in enumerate(R.arrow_maps):
    print(f"  arrow {j}->{(j + 1) % 2}:", m.tolist())
print("dim Hom(P(0), P(0)) =", hom_dim(A, (0, 3), (0, 3)))

# %% [markdown]
# Stable Hom subtracts maps that factor through projectives. The table below lists
# the stable dimensions between all non-projective indecomposables of Lambda(3,4).

# %%
B = make_algebra(3, 4)
ind = B.indecomposables()
table = stable_dim_table(B)
print("      " + " ".join(f"{str(Y):>7}" for Y in ind))
for X, row in zip(ind, table):
    print(f"{str(X):>6} " + " ".join(f"{v:>7}" for v in row))

# %% [markdown]
# Serre duality on dimensions says dim Hom(X, Y) = dim Hom(Y, F X).
# We check it for every pair, and again modulo a large prime.

# %%
X, Y = IndecModule(0, 1), IndecModule(2, 3)
print(stable_hom(B, X, Y), "vs", stable_hom(B, Y, serre(B, X)))
ok = all(
    stable_hom(B, X, Y).stable_dim == stable_hom(B, Y, serre(B, X)).stable_dim for X in ind for Y in ind
)
print("duality on all pairs:", ok)
print("same table mod", DEFAULT_PRIME, ":", np.array_equal(table, stable_dim_table(B, DEFAULT_PRIME)))
