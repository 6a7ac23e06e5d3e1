# %% [markdown]
# # Minimal d-Calabi-Yau objects
#
# An object X is d-CY when F(X) = X[d]. Minimal ones admit no proper d-CY summand.
# The classification returns them in closed form. Each one comes with a case tag
# and the integer N(d, n, t) that controls the number of summands.

# %%
from nakayama_cy import make_algebra
from nakayama_cy.classify import cy_dimension, cy_params, minimal_cy_modules

A = make_algebra(2, 4)
res = minimal_cy_modules(A, 3)
p = cy_params(A, 3)
print(f"Lambda{A}, d=3: case {res.case_tag}, d(t) = {p.dt}, N = {res.bigN}")
for M in res.minimal_objects:
    print(f"  {M}   CY dimension {cy_dimension(A, M)}")

# %% [markdown]
# Each of these objects is 3-CY. The middle one is 0-CY as well, so the degree of a
# minimal object does not determine its CY dimension.
#
# When d(t) is a half-integer the summand count doubles. Over Lambda(2,3) with d = 0,
# everything collapses into one four-summand object.

# %%
B = make_algebra(2, 3)
r = minimal_cy_modules(B, 0)
print(r.case_tag, cy_params(B, 0).dt, [str(M) for M in r.minimal_objects])

# %% [markdown]
# Whole categories. Lambda(3,4) is Calabi-Yau of dimension 5.
# Lambda(4,6) is not CY as a category, but the S[i,3] are 2-CY.

# %%
from nakayama_cy.classify import category_report

for n, t in [(3, 4), (2, 4), (4, 6)]:
    rep = category_report(make_algebra(n, t))
    cy = ", ".join(f"{X}:{d}" for X, d in rep.indecomposable_cy) or "none"
    print(f"Lambda({n},{t}): CY category={rep.is_cy_category} dim={rep.cydim}; CY indecomposables: {cy}")
