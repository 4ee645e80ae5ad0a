from __future__ import annotations

import pytest
from conftest import (
    HI_TABLEAU_7,
    LAM4,
    LAM7,
    LAM9,
    X9_LAMBDAS,
    mlt4,
    rs4,
    x9,
)

from ancrystals import bridges as br
from ancrystals.cartan_an import DomainError, partitions, tau, w0
from ancrystals.crystal_core import generate_graph
from ancrystals.polyhedral import (
    BLambdaPoly,
    PolyVector,
    blambda_stats,
    enumerate_sigma_lambda,
    zero_vector,
)
from ancrystals.reverse_models import RMLT, RSSYTCrystal, rssyt_highest, zero_rmlt

RS4_LUSZTIG = {
    (1, 2): 2, (1, 3): 3, (1, 4): 1, (1, 5): 2, (2, 3): 3,
    (2, 4): 1, (2, 5): 3, (3, 4): 2, (3, 5): 1, (4, 5): 2,
}  # fmt: skip


def test_lambda_sequences_and_round_trip():
    x = x9()
    seqs = br.lambda_sequences(x, LAM9)
    assert seqs == X9_LAMBDAS
    T = br.psi_lambda(x, LAM9)
    assert br.lambda_of_rssyt(T) == seqs
    assert br.psi_lambda_inv(T, LAM9) == x


def test_zero_maps_to_highest_tableau():
    assert br.psi_lambda(zero_vector(7), LAM7).rows == HI_TABLEAU_7
    assert br.psi_lambda(zero_vector(7), LAM7) == rssyt_highest(7, LAM7)
    assert br.psi_infty(zero_rmlt(3)) == zero_vector(3)


def test_psi_lambda_rejects_non_members():
    with pytest.raises(DomainError):
        br.psi_lambda(x9(), (1,) + (0,) * 9)
    with pytest.raises(DomainError):
        br.psi_lambda_inv(rs4(), (1, 0, 0, 0, 0))
    with pytest.raises(DomainError):
        br.psi_infty_inv(PolyVector.from_rows(2, [(0, 1)]))


def test_gt_and_rssyt_are_inverse():
    for lam in partitions(3, 4):
        for x in enumerate_sigma_lambda(3, lam):
            T = br.psi_lambda(x, lam)
            assert br.rssyt_of_gt(br.gt_of_rssyt(T)) == T


def test_xi_and_columns():
    T = rs4()
    assert br.xi(T, 1, 1) == 2
    for i in range(1, 5):
        for j in range(1, 6 - i):
            by_cols = br.xi_by_columns(T, i, j)
            if by_cols is not None:
                assert by_cols == br.xi(T, i, j)
    with pytest.raises(DomainError):
        br.xi(T, 4, 2)


def test_ml_image_and_r_inequalities():
    z = br.ml_embed(rs4())
    assert br.in_ml_image(z, LAM4)
    assert br.r_inequalities_hold(br.theta_r(z), 4, LAM4)
    assert not br.in_ml_image(z, (1, 0, 0, 0, 0))
    assert br.in_ml_image(zero_rmlt(4), (0,) * 5)


def test_lusztig_data():
    assert br.lusztig_data(rs4()).as_dict() == RS4_LUSZTIG
    chi = br.chi_of_mlt(mlt4()).as_dict()
    nonzero = {k: v for k, v in chi.items() if v}
    assert nonzero == {(1, 2): 1, (2, 3): 2, (2, 4): 1, (3, 4): 1, (4, 5): 1}
    assert br.mlt_of_lusztig(br.chi_of_mlt(mlt4())) == mlt4()


def test_pl_agrees_on_ml_image():
    T = rs4()
    x = br.psi_lambda_inv(T, LAM4)
    assert br.pl_map(x) == br.lusztig_data(T)


@pytest.mark.parametrize("lam", [(2, 1, 0), (2, 1, 0, 0)])
def test_diagram_commutes(lam):
    rep = br.verify_diagram(len(lam) - 1, lam, depth=3)
    assert rep.ok, rep.violations[:1]
    assert rep.checked > 0


def test_diagram_catches_broken_ml():
    def off_by_one(T):
        z = br.ml_embed(T)
        d = z.as_dict()
        d[(1, 1)] += 1
        return RMLT.from_dict(T.n, d)

    rep = br.verify_diagram(2, (2, 1, 0), depth=2, ml=off_by_one)
    assert not rep.ok


@pytest.mark.parametrize("lam", [(1, 0), (2, 1, 0), (3, 1, 0, 0)])
def test_rho_poly_lambda(lam):
    n = len(lam) - 1
    nodes = generate_graph(BLambdaPoly(n, lam), zero_vector(n)).nodes
    for x in nodes:
        y = br.rho_poly_lambda(x, lam)
        assert br.rho_poly_lambda(y, lam) == x
        assert blambda_stats(y, lam).wt == w0(blambda_stats(x, lam).wt)


def test_rho_weight_is_not_tau():
    # For n = 1 the highest vector of B((1, 0)) goes to the lowest one.
    y = br.rho_poly_lambda(zero_vector(1), (1, 0))
    assert blambda_stats(y, (1, 0)).wt == (0, 1)
    assert tau((1, 0)) != (0, 1)


def test_rho_poly_infty_is_involution():
    from ancrystals.polyhedral import BInfinityPoly

    for x in generate_graph(BInfinityPoly(2), zero_vector(2), depth=4).nodes:
        assert br.rho_poly_infty(br.rho_poly_infty(x)) == x


def test_rssyt_graph_maps_onto_sigma_lambda():
    lam = (2, 2, 1, 0)
    g = generate_graph(RSSYTCrystal(3), rssyt_highest(3, lam))
    images = {br.psi_lambda_inv(T, lam) for T in g.nodes}
    assert images == set(enumerate_sigma_lambda(3, lam))
