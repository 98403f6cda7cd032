# %%
# One Riordan array, three continued fractions, and a production matrix.
from riordancf import catalog
from riordancf.cfrac import cf_expand, stieltjes_to_jacobi
from riordancf.production import production_matrix, tridiagonal_to_jacobi
from riordancf.riordan import bivariate_gf, riordan_matrix

pairs, cfs = catalog.pairs(12), catalog.cfracs()
bell = pairs["bell_schroeder"]  # (1, x S(x))
print(riordan_matrix(bell, 6))

# %%
target = bivariate_gf(bell, 12)
for name in ("bell_schroeder_stieltjes", "bell_schroeder_jacobi", "bell_schroeder_thron"):
    print(name, cfs[name], cf_expand(cfs[name], 12) == target)

# %%
# contracting the Stieltjes form gives the Jacobi form
print(stieltjes_to_jacobi(cfs["bell_schroeder_stieltjes"]))

# %% [markdown]
# ### Production matrices
# Here every row of the production matrix continues with 2s, so it is
# lower Hessenberg rather than tridiagonal.

p = production_matrix(riordan_matrix(bell, 8))
print(p)
print(p.is_tridiagonal())

# %%
# Inverting the coefficient array of an orthogonal family gives a
# tridiagonal one, and its bands are a Jacobi fraction for the moments.
from riordancf.orthopoly import coefficient_array, moments, orthogonal

spec = orthogonal(2, 1, 1, 0)
inv = riordan_matrix(coefficient_array(spec, 9), 9).inverse()
cf = tridiagonal_to_jacobi(production_matrix(inv))
print(cf)
print(cf_expand(cf, 8).tolist() == moments(spec, 8))
