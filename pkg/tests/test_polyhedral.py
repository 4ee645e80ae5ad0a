from __future__ import annotations

import random
from itertools import product

import pytest
from conftest import LAM9, x9
from hypothesis import given, settings
from hypothesis import strategies as st

from ancrystals.cartan_an import DomainError, pairing, partitions, weyl_dim
from ancrystals.crystal_core import check_axioms, generate_graph
from ancrystals.polyhedral import (
    BInfinityPoly,
    BLambdaPoly,
    PolyVector,
    binfty_e,
    binfty_f,
    blambda_e,
    blambda_f,
    enumerate_sigma_lambda,
    in_sigma,
    in_sigma_lambda,
    iota,
    sigma0_i,
    sigma_all,
    sigma_closed_form,
    sigma_i_max,
    sigma_k,
    triangle_cells,
    weight_offset,
    zero_vector,
)
from ancrystals.suites import random_sigma_element


def brute_sigma_max(x: PolyVector, i: int, extra: int = 3) -> int:
    upto = x.support + extra * x.n
    return max(sigma_k(x, k) for k in range(1, upto + 1) if iota(x.n, k) == i)


def test_flat_layout_and_rows():
    x = PolyVector.from_rows(3, [(1, 2, 3), (4, 5), (6,)])
    # x_j^{(i)} sits at (j-1) n + i.
    assert x.flat == (1, 4, 6, 2, 5, 0, 3)
    assert x.x(2, 2) == 5 and x.x(3, 1) == 3 and x.x(0, 1) == 0
    assert x.rows() == ((1, 2, 3), (4, 5), (6,))
    assert PolyVector(3, (0, 0, 0)) == zero_vector(3)


def test_sigma_of_zero_and_single_entry():
    assert all(sigma_k(zero_vector(2), k) == 0 for k in range(1, 7))
    x = PolyVector.from_rows(2, [(1,)])
    # Only later entries contribute, so nothing pushes sigma_2 below zero.
    assert [sigma_k(x, k) for k in (1, 2, 3)] == [1, 0, 0]
    assert sigma_all(x, 3) == [1, 0, 0]


def test_sigma_all_matches_sigma_k():
    x = x9()
    upto = x.support + 9
    assert sigma_all(x, upto) == [sigma_k(x, k) for k in range(1, upto + 1)]


def test_sigma_max_of_zero():
    for i in (1, 2, 3):
        assert sigma_i_max(zero_vector(3), i) == (0, (i,))


def test_f_and_e_on_zero():
    z = zero_vector(3)
    for i in (1, 2, 3):
        assert binfty_f(z, i) == z.add_at(i, 1)
        assert binfty_e(z, i) is None


def test_window_is_exact_on_x9():
    x = x9()
    for i in range(1, 10):
        assert sigma_i_max(x, i)[0] == brute_sigma_max(x, i)


def test_membership_in_sigma():
    assert in_sigma(zero_vector(4))
    assert in_sigma(x9())
    assert in_sigma(PolyVector.from_rows(2, [(0,), (1,)]))
    # x_1^{(2)} >= x_2^{(1)} fails.
    assert not in_sigma(PolyVector.from_rows(2, [(0, 1)]))
    # Entries outside the triangle are never allowed.
    assert not in_sigma(PolyVector.from_rows(2, [(0, 0, 1)]))


def test_sigma0_of_zero():
    lam = (5, 3, 3, 0)
    for i in (1, 2, 3):
        assert sigma0_i(zero_vector(3), lam, i) == -(lam[i - 1] - lam[i])
        assert sigma0_i(zero_vector(3), lam, i) == -pairing(i, lam)


def test_membership_in_sigma_lambda():
    assert in_sigma_lambda(x9(), LAM9)
    assert not in_sigma_lambda(x9(), (1,) + (0,) * 9)
    with pytest.raises(DomainError):
        in_sigma_lambda(x9(), (1, 0))


def test_blambda_edges_at_zero():
    lam = (2, 1, 1, 0)
    z = zero_vector(3)
    for i in (1, 2, 3):
        assert blambda_e(z, lam, i) is None
    # f_i acts on the highest weight vector exactly when lambda_i > lambda_{i+1}.
    assert [blambda_f(z, lam, i) is not None for i in (1, 2, 3)] == [True, False, True]


def test_closed_form_on_x9():
    x = x9()
    for i in range(1, 10):
        assert sigma_closed_form(x, i) == sigma_i_max(x, i)[0]


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_closed_form_fuzz(n, seed):
    x = random_sigma_element(n, random.Random(seed))
    assert in_sigma(x)
    for i in range(1, n + 1):
        assert sigma_closed_form(x, i) == sigma_i_max(x, i)[0] == brute_sigma_max(x, i)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_count_is_weyl_dimension(n):
    for lam in partitions(n, 5):
        assert sum(1 for _ in enumerate_sigma_lambda(n, lam)) == weyl_dim(lam)


def test_enumeration_box_is_implied():
    # Search a looser box and confirm nothing outside the tight one is a member.
    n, lam = 2, (3, 1, 0)
    cells = triangle_cells(n)
    found = set()
    for values in product(range(5), repeat=len(cells)):
        rows: list[list[int]] = [[0] * (n + 1 - i) for i in range(1, n + 1)]
        for (j, i), v in zip(cells, values):
            rows[i - 1][j - 1] = v
        x = PolyVector.from_rows(n, rows)
        if in_sigma_lambda(x, lam):
            found.add(x)
    assert found == set(enumerate_sigma_lambda(n, lam))


def test_blambda_graph_matches_enumeration():
    lam = (3, 1, 0, 0)
    g = generate_graph(BLambdaPoly(3, lam), zero_vector(3))
    assert set(g.nodes) == set(enumerate_sigma_lambda(3, lam))
    assert check_axioms(g, BLambdaPoly(3, lam)).ok


def test_binfty_weights():
    g = generate_graph(BInfinityPoly(2), zero_vector(2), depth=3)
    for x in g.nodes:
        assert sum(weight_offset(x)) == 0
        assert in_sigma(x)
    # Depth-2 sphere of B(infinity) for n=2 has 1 + 2 + 4 elements.
    assert len(generate_graph(BInfinityPoly(2), zero_vector(2), depth=2).nodes) == 7
