import pytest
from hypothesis import given
from hypothesis import strategies as st

from ancrystals.cartan_an import (
    DomainError,
    alpha,
    cartan_entry,
    from_fundamental,
    omega,
    pairing,
    partition,
    partitions,
    root_combination,
    tau,
    w0,
    weyl_dim,
)


@pytest.mark.parametrize(
    "n, i, expected",
    [(2, 1, (1, -1, 0)), (2, 2, (0, 1, -1)), (4, 3, (0, 0, 1, -1, 0))],
)
def test_alpha(n, i, expected):
    assert alpha(n, i) == expected


def test_pairing_examples():
    assert pairing(1, alpha(2, 1)) == 2
    assert pairing(1, alpha(2, 2)) == -1
    assert pairing(2, (0, 0, 0)) == 0


def test_cartan_matrix_matches_pairing():
    n = 5
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert cartan_entry(i, j) == pairing(i, alpha(n, j))


def test_tau_examples():
    assert tau(alpha(2, 1)) == alpha(2, 2)
    assert tau((0, 0, 0)) == (0, 0, 0)
    mu = root_combination(4, (-1, -3, -2, -1))
    assert tau(mu) == root_combination(4, (-1, -2, -3, -1))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_tau_reverses_root_coordinates(coeffs):
    n = len(coeffs)
    assert tau(root_combination(n, coeffs)) == root_combination(n, coeffs[::-1])
    assert tau(tau(root_combination(n, coeffs))) == root_combination(n, coeffs)


def test_w0_is_reversal():
    assert w0((2, 1, 0)) == (0, 1, 2)


@pytest.mark.parametrize(
    "lam, dim",
    [
        ((1, 0, 0), 3),
        ((2, 1, 0), 8),
        ((0, 0, 0), 1),
        ((0,) * 6, 1),
        ((1, 1, 0), 3),
        ((2, 0, 0, 0), 10),
    ],
)
def test_weyl_dim(lam, dim):
    assert weyl_dim(lam) == dim


def test_fundamental_coordinates():
    assert from_fundamental(2, (1, 1)) == (2, 1, 0)
    assert omega(3, 2) == (1, 1, 0, 0)
    for i in range(1, 4):
        assert pairing(i, from_fundamental(3, (3, 1, 4))) == (3, 1, 4)[i - 1]


def test_partition_validation():
    assert partition(3, [2, 1]) == (2, 1, 0, 0)
    with pytest.raises(DomainError):
        partition(2, [1, 2])
    with pytest.raises(DomainError):
        partition(2, [1, 1, 1])
    with pytest.raises(DomainError):
        partition(2, [1, -1])


def test_partitions_enumeration():
    lams = list(partitions(2, 3))
    assert lams == sorted(set(lams))
    assert (3, 0, 0) in lams and (2, 1, 0) in lams and (0, 0, 0) in lams
    assert all(sum(lam) <= 3 and lam[-1] == 0 for lam in lams)
    assert all(max(lam) <= 2 for lam in partitions(3, 12, max_part=2))
