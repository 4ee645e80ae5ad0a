from __future__ import annotations

import pytest
from conftest import GT7_LO_ROWS, LAM7, gt7_hi, gt7_lo

from ancrystals.bridges import lowest_vector
from ancrystals.cartan_an import DomainError, partitions, w0, weyl_dim
from ancrystals.crystal_core import check_axioms, check_morphism, generate_graph
from ancrystals.gt import (
    GTCrystal,
    GTPattern,
    enumerate_gt,
    gt_e,
    gt_f,
    gt_stats,
    gt_weight,
    lh_reading,
    varsigma,
    varsigma_inv,
)
from ancrystals.polyhedral import BLambdaPoly, zero_vector

TRUE_LOWEST_7 = (
    (2, 0, 2, 1, 0, 1, 0),
    (2, 2, 3, 1, 1, 1),
    (4, 3, 3, 2, 1),
    (5, 3, 4, 2),
    (5, 4, 4),
    (6, 4),
    (6,),
)


def test_interlacing_is_enforced():
    with pytest.raises(DomainError):
        GTPattern(2, (2, 1, 0), ((2, 2), (1,)))
    with pytest.raises(DomainError):
        GTPattern(2, (2, 1, 0), ((2,), (1,)))


@pytest.mark.parametrize(
    ("lam", "count"), [((2, 1, 0), 8), ((1, 0, 0), 3), ((0, 0, 0), 1)]
)
def test_enumeration_counts(lam, count):
    assert sum(1 for _ in enumerate_gt(lam)) == count == weyl_dim(lam)


def test_highest_pattern():
    hi = gt7_hi()
    assert varsigma(hi) == zero_vector(7)
    assert varsigma_inv(zero_vector(7), LAM7) == hi
    assert all(gt_e(hi, i) is None for i in range(1, 8))
    assert gt_weight(hi) == LAM7


def test_reference_lowest_pattern_is_not_lowest():
    lo = gt7_lo()
    assert varsigma_inv(varsigma(lo), LAM7) == lo
    assert [gt_f(lo, i) is not None for i in range(1, 8)] == [False] * 5 + [True, False]
    s = gt_stats(lo)
    assert s.phi[5] == 6
    assert s.wt == (1, 1, 2, 4, 4, 6, 0, 0)


def test_true_lowest_pattern():
    x = lowest_vector(7, LAM7)
    assert x.rows() == TRUE_LOWEST_7
    g = varsigma_inv(x, LAM7)
    assert all(gt_f(g, i) is None for i in range(1, 8))
    assert gt_weight(g) == w0(LAM7)
    assert g.rows[0] == tuple(sorted(LAM7, reverse=True)[:7])
    assert list(g.rows) != GT7_LO_ROWS


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lh_reading_equals_varsigma(n):
    for lam in partitions(n, 4):
        for g in enumerate_gt(lam):
            assert lh_reading(g) == varsigma(g)


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 1, 1, 0), (2, 2, 1, 0)])
def test_graph_and_morphism(lam):
    n = len(lam) - 1
    crystal = GTCrystal(n)
    top = varsigma_inv(zero_vector(n), lam)
    g = generate_graph(crystal, top)
    assert set(g.nodes) == set(enumerate_gt(lam))
    assert check_axioms(g, crystal).ok
    assert check_morphism(
        crystal, BLambdaPoly(n, lam), g.nodes, varsigma, "varsigma"
    ).ok


def test_varsigma_inv_rejects_non_members():
    with pytest.raises(DomainError):
        varsigma_inv(zero_vector(2).add_at(1, 5), (2, 1, 0))
