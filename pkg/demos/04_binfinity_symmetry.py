"""The involution on B(infinity) in three models.

Run with ``python3 demos/04_binfinity_symmetry.py``.
"""

# %% Generate a truncated B(infinity) in the polyhedral model.
from ancrystals import bridges as br
from ancrystals.crystal_core import generate_graph
from ancrystals.polyhedral import BInfinityPoly, binfty_f, zero_vector

n = 2
g = generate_graph(BInfinityPoly(n), zero_vector(n), depth=3)
print(len(g), "vectors within three steps of 0")

# %% rho swaps f_i and f_{n+1-i}.
for x in g.nodes[:6]:
    y = br.rho_poly_infty(x)
    print(f"{x!s:>12} -> {y}")
    assert br.rho_poly_infty(binfty_f(x, 1)) == binfty_f(y, n)

# %% The same element as a reverse tableau, a marginally large tableau and
# Lusztig data.
x = g.nodes[-1]
z = br.psi_infty_inv(x)
print("rmlt counts:", z.as_dict())
print("mlt counts :", br.eta(z).as_dict())
print("lusztig    :", br.pl_map(x).as_dict())
