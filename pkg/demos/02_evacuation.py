"""Evacuation on tableaux and the Lusztig-Schutzenberger involution.

Run with ``python3 demos/02_evacuation.py``.
"""

# %% Evacuation by jeu de taquin on the rotated complement.
from ancrystals.crystal_core import generate_graph
from ancrystals.ssyt import (
    SSYTCrystal,
    evacuation,
    highest_tableau,
    lowest_tableau,
    rho_lambda_word,
)

n, lam = 2, (3, 1, 0)
T = highest_tableau(n, lam)
print("highest:", T.rows, "-> evacuated:", evacuation(T).rows)
assert evacuation(T) == lowest_tableau(n, lam)

# %% The same involution written as a word in raising and lowering operators.
g = generate_graph(SSYTCrystal(n), T)
agree = sum(rho_lambda_word(U) == evacuation(U) for U in g.nodes)
print(f"{agree}/{len(g)} tableaux agree")

# %% It swaps f_i with e_{n+1-i} and reverses the weight.
crystal = SSYTCrystal(n)
U = g.nodes[3]
print("wt:", crystal.stats(U).wt, "->", crystal.stats(evacuation(U)).wt)
