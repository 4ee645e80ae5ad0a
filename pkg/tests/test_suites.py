from __future__ import annotations

import random

import pytest

from ancrystals.cartan_an import partitions
from ancrystals.polyhedral import in_sigma_lambda
from ancrystals.suites import (
    all_rmlt,
    axioms_for,
    binfty_suite,
    image_suite,
    involution_lambda_suite,
    iso_suite,
    lambda_from_gaps,
    lambda_weights,
    lemma_fuzz,
    minimal_gaps,
    random_sigma_element,
)


@pytest.mark.parametrize("lam", [(1, 0), (2, 1, 0), (2, 1, 1, 0)])
def test_iso_suite(lam):
    r = iso_suite(len(lam) - 1, lam)
    assert r.report.ok, r.report.violations[:1]
    assert set(r.graphs) == {"ssyt", "rssyt", "poly", "gt", "ml"}
    assert axioms_for(r).ok


def test_involution_suite():
    r = involution_lambda_suite(2, (3, 1, 0))
    assert r.report.ok, r.report.violations[:1]


@pytest.mark.parametrize("n", [1, 2])
def test_binfty_suite(n):
    r = binfty_suite(n, 3)
    assert r.report.ok, r.report.violations[:1]
    assert axioms_for(r).ok


def test_image_suite_small():
    rep = image_suite(2, list(partitions(2, 4)), max_count=2)
    assert rep.ok and rep.checked == 3**3 * len(list(partitions(2, 4)))


def test_all_rmlt_count():
    assert sum(1 for _ in all_rmlt(2, 2)) == 27


def test_lemma_fuzz_small():
    rep = lemma_fuzz(300, seed=7)
    assert rep.ok and rep.checked >= 300


def test_minimal_gaps_are_tight():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 4)
        x = random_sigma_element(n, rng)
        gaps = minimal_gaps(x)
        assert in_sigma_lambda(x, lambda_from_gaps(gaps))
        for i, g in enumerate(gaps):
            if g:
                lowered = list(gaps)
                lowered[i] -= 1
                assert not in_sigma_lambda(x, lambda_from_gaps(lowered))


def test_lambda_weights_enumeration():
    pairs = list(lambda_weights(3, 6))
    assert len(pairs) == 46
    assert (1, (0, 0)) in pairs and (3, (2, 2, 1, 0)) in pairs
    assert all(lam[-1] == 0 for _, lam in pairs)
