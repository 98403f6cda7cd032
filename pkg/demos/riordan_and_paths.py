# %%
# Riordan arrays, continued fractions and the lattice paths they count.
from riordancf import catalog
from riordancf.cfrac import cf_expand, jacobi, seq, thron
from riordancf.lattice import count_weighted_paths, path_kind_for, weights_for_cfrac
from riordancf.riordan import ftra_apply, riordan_matrix, triangle_from_bivariate
from riordancf.series import FPS, Y

# %% [markdown]
# ### Schroeder paths with marked level-0 rises
# Give every rise from the x-axis the weight y.  Row n of the triangle
# splits the Schroeder paths of size n by how often they leave the axis.

cf = thron(1, seq(Y, tail=1))
print(cf)
print(triangle_from_bivariate(cf_expand(cf, 6)))

# %%
# the same triangle from its pair (1/(1-x), x S(x)/(1-x))
pair = catalog.pairs(8)["schroeder_level0"]
print(riordan_matrix(pair, 6))

# %%
# applying it to 1, 3, 9, 27, ...
powers = FPS([3 ** k for k in range(8)], order=8)
print(ftra_apply(pair, powers).tolist())

# %% [markdown]
# ### Brute force agrees
# Count weighted Motzkin paths directly and compare with the expansion.

cf = jacobi(seq(Y + 2, tail=1), seq(Y + 3, tail=4))
weights = weights_for_cfrac(cf, 7)
by_paths = [count_weighted_paths(path_kind_for(cf), n, weights) for n in range(6)]
print(by_paths == cf_expand(cf, 6).tolist())
print(by_paths[3])
