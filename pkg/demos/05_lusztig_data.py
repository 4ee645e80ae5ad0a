"""Lusztig data read off a reverse tableau, and the commuting square.

Run with ``python3 demos/05_lusztig_data.py``.
"""

# %% xi counts columns between equal entries of adjacent rows.
from ancrystals import bridges as br
from ancrystals.reverse_models import RSSYT, materialize_rmlt

lam = (12, 10, 8, 3, 0)
T = RSSYT(
    4,
    [
        [5] * 8 + [4, 4, 3, 2],
        [4] * 6 + [3, 2, 2, 1],
        [3, 3, 3, 2, 2, 2, 1, 1],
        [2, 2, 1],
    ],
)
print("xi_1^1 =", br.xi(T, 1, 1))

# %% ml sends T to a reverse marginally large tableau.
z = br.ml_embed(T)
for row in materialize_rmlt(z):
    print(" ".join(map(str, row)))
print("in image:", br.in_ml_image(z, lam))

# %% Lusztig data two ways.
a = br.lusztig_data(T)
print(a.as_dict())
assert br.chi_of_mlt(br.eta(z)) == a
assert br.pl_map(br.psi_lambda_inv(T, lam)) == a

# %% The whole diagram on a small weight.
print(br.verify_diagram(3, (2, 1, 0, 0), depth=3).summary())
