# %%
# The Narayana triangle is not a Riordan array but still has continued fractions.
from riordancf.cfrac import cf_expand
from riordancf.riordan import riordan_from_bivariate, triangle_from_bivariate, triangle_sums
from riordancf.triangles import (named_triangle, narayana_cf_suite, narayana_thron_variants,
                                 schroeder_alternating_transform)

n = 8
nar = named_triangle("narayana", n)
print(nar)
print(riordan_from_bivariate(nar.bivariate()).is_riordan)

# %%
suite = narayana_cf_suite()
print(suite.jacobi, triangle_from_bivariate(cf_expand(suite.jacobi, n)) == nar)

# %% [markdown]
# ### Which Thron reading is right?
# Three readings of the horizontal weights; only one reproduces the triangle.

for name, cf in narayana_thron_variants().items():
    print(name, triangle_from_bivariate(cf_expand(cf, n)) == nar)

# %%
# conjugating by the binomial matrix and summing diagonals
conj = named_triangle("nb_conjugate", 10)
print([str(v) for v in triangle_sums(conj).diagonal])
print(schroeder_alternating_transform(11)[1:])
