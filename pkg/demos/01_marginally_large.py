"""Marginally large tableaux as a model of B(infinity).

Run with ``python3 demos/01_marginally_large.py``.
"""

# %% A tableau is stored by its counts y_j^i: how many i's sit in row j.
from ancrystals import mlt
from ancrystals.cartan_an import root_combination

T = mlt.MLT.from_rows(4, [[1] * 9 + [2], [2] * 5 + [3, 3, 4], [3, 3, 3, 4], [4, 5]])
print("counts:", T.as_dict())

# %% The displayed tableau is rebuilt on demand.  Padding adds full columns
# of 1..j on the left and leaves the crystal data unchanged.
for pad in (0, 2):
    print(f"pad={pad}:", [list(r) for r in mlt.materialize(T, pad=pad).rows])

# %% Weight, epsilon and phi.
s = mlt.stats(T)
print("wt  =", s.wt)
assert s.wt == root_combination(4, (-1, -3, -2, -1))
print("eps =", s.eps)
print("phi =", s.phi)

# %% Kashiwara operators move one count at a time.
F, E = mlt.f_op(T, 2), mlt.e_op(T, 2)
print("f_2:", [list(r) for r in mlt.materialize(F).rows])
print("e_2:", [list(r) for r in mlt.materialize(E, pad=1).rows])
assert mlt.e_op(F, 2) == T

# %% epsilon also has a closed form in the counts; compare with the signature rule.
for i in range(1, 5):
    print(i, mlt.epsilon_closed_form(T, i), mlt.epsilon_signature(T, i))
