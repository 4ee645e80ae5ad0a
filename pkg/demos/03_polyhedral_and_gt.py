"""Lattice points, Gelfand-Tsetlin patterns and reverse tableaux.

Run with ``python3 demos/03_polyhedral_and_gt.py``.
"""

# %% The polyhedral B(lambda) is a set of triangular integer arrays.
from ancrystals import bridges as br
from ancrystals.cartan_an import weyl_dim
from ancrystals.gt import enumerate_gt, varsigma, varsigma_inv
from ancrystals.polyhedral import (
    enumerate_sigma_lambda,
    in_sigma_lambda,
    sigma_i_max,
    zero_vector,
)

n, lam = 3, (3, 2, 0, 0)
points = list(enumerate_sigma_lambda(n, lam))
print(len(points), "points; weyl_dim =", weyl_dim(lam))

# %% Each point is a GT pattern with lambda subtracted along the diagonals.
x = points[len(points) // 2]
g = varsigma_inv(x, lam)
print("x  =", x)
print(g)
assert varsigma(g) == x
assert sum(1 for _ in enumerate_gt(lam)) == len(points)

# %% psi_lambda fills a reverse tableau from the Lambda sequences.
for seq in br.lambda_sequences(x, lam):
    print("Lambda:", seq)
T = br.psi_lambda(x, lam)
print("tableau rows:", T.rows)
assert br.psi_lambda_inv(T, lam) == x

# %% sigma^{(i)} drives the operators; the highest vector has all of them zero.
print([sigma_i_max(zero_vector(n), i) for i in range(1, n + 1)])
print("in B(lambda):", in_sigma_lambda(x, lam))
