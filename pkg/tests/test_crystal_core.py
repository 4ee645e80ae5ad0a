import pytest
from conftest import mlt4

from ancrystals.cartan_an import alpha
from ancrystals.crystal_core import (
    MINUS_INFINITY,
    CrystalGraph,
    ElementStats,
    NodeCapExceeded,
    RLambda,
    RLambdaCrystal,
    TensorCrystal,
    check_axioms,
    generate_graph,
    graph_isomorphic,
    relabel_colors,
    rooted_mapping,
)
from ancrystals.mlt import MLTCrystal
from ancrystals.polyhedral import BInfinityPoly, PolyVector, in_sigma, triangle_cells
from ancrystals.reverse_models import RSSYTCrystal, rssyt_highest
from ancrystals.ssyt import SSYT, SSYTCrystal, highest_tableau


def test_minus_infinity_orders_below_integers():
    assert MINUS_INFINITY < -(10**9)
    assert not MINUS_INFINITY > 0
    assert max(MINUS_INFINITY, -3) == -3


def test_r_lambda():
    c = RLambdaCrystal((2, 1, 0))
    r = c.element
    assert c.f(r, 1) is None and c.e(r, 2) is None
    s = c.stats(r)
    assert s.wt == (2, 1, 0)
    assert s.eps == (-1, -1) and s.phi == (0, 0)


def test_tensor_rule_on_two_boxes():
    # B(box) x B(box) for n=1 decomposes into a 3-chain and a singleton.
    box = SSYTCrystal(1)
    t = TensorCrystal(box, box)
    one, two = SSYT(1, [[1]]), SSYT(1, [[2]])
    assert t.f((one, one), 1) == (two, one)
    assert t.f((two, one), 1) == (two, two)
    assert t.f((one, two), 1) is None
    assert t.e((one, two), 1) is None
    s = t.stats((one, one))
    assert s == ElementStats((2, 0), (0,), (2,))


def test_tensor_with_r_lambda_shifts_weight():
    lam = (1, 0, 0)
    t = TensorCrystal(BInfinityPoly(2), RLambdaCrystal(lam))
    s = t.stats((PolyVector(2, ()), RLambda(lam)))
    assert s.wt == lam
    assert s.phi == (1, 0)


def test_generate_small_chain():
    g = generate_graph(SSYTCrystal(2), highest_tableau(2, (1, 0, 0)))
    assert len(g) == 3
    assert sorted((i for _, i, _ in g.edges)) == [1, 2]
    assert [n.rows for n in g.nodes] == [((1,),), ((2,),), ((3,),)]


def test_depth_zero_is_a_single_node():
    g = generate_graph(MLTCrystal(2), mlt4().__class__.from_dict(2, {}), depth=0)
    assert len(g) == 1 and g.edges == []


def test_binfty_depth_five_matches_brute_force():
    n, depth = 2, 5
    g = generate_graph(BInfinityPoly(n), PolyVector(n, ()), depth=depth)
    cells = triangle_cells(n)
    brute = set()

    def rec(k, acc):
        if k == len(cells):
            x = PolyVector.from_rows(n, _rows_of(n, cells, acc))
            if in_sigma(x):
                brute.add(x)
            return
        for v in range(depth + 1 - sum(acc)):
            rec(k + 1, acc + [v])

    rec(0, [])
    assert set(g.nodes) == brute


def _rows_of(n, cells, values):
    rows = [[0] * (n + 1 - i) for i in range(1, n + 1)]
    for (j, i), v in zip(cells, values):
        rows[i - 1][j - 1] = v
    return rows


def test_node_cap_argument_and_env(monkeypatch):
    with pytest.raises(NodeCapExceeded):
        generate_graph(BInfinityPoly(2), PolyVector(2, ()), depth=5, node_cap=4)
    monkeypatch.setenv("CRYSTAL_NODE_CAP", "4")
    with pytest.raises(NodeCapExceeded):
        generate_graph(BInfinityPoly(2), PolyVector(2, ()), depth=5)
    monkeypatch.setenv("CRYSTAL_NODE_CAP", "100000")
    # PBW monomials of degree <= 2 for sl_3: 1 + 2 + (1 + 1 + 2)
    assert len(generate_graph(BInfinityPoly(2), PolyVector(2, ()), depth=2)) == 7


def test_bfs_order_is_deterministic():
    a = generate_graph(RSSYTCrystal(3), rssyt_highest(3, (2, 1, 0, 0)))
    b = generate_graph(RSSYTCrystal(3), rssyt_highest(3, (2, 1, 0, 0)))
    assert a.nodes == b.nodes and a.edges == b.edges


def test_axioms_hold_on_generated_graph():
    g = generate_graph(MLTCrystal(4), mlt4(), depth=3)
    rep = check_axioms(g, MLTCrystal(4))
    assert rep.ok, rep.violations[:3]
    assert rep.checked == len(g.nodes) + len(g.edges)


def test_axioms_catch_bad_weight_drop():
    n = 2
    stats = [
        ElementStats((1, 0, 0), (0, 0), (1, 0)),
        ElementStats((0, 0, 1), (1, 0), (0, 1)),
    ]
    g = CrystalGraph(
        n=n, nodes=["a", "b"], stats=stats, edges=[(0, 1, 1)], parents=[None, (0, 1)]
    )
    conditions = {v.condition for v in check_axioms(g).violations}
    assert "(iii)" in conditions
    stats[1] = ElementStats((0, 1, 0), (1, 0), (0, 1))
    assert check_axioms(g).ok
    assert (1, 0, 0) != alpha(n, 1)


def test_axioms_catch_duplicate_edges_and_unreachable_nodes():
    s = ElementStats((0, 0), (0,), (0,))
    g = CrystalGraph(
        n=1, nodes=["a", "b"], stats=[s, s], edges=[], parents=[None, None]
    )
    assert {v.condition for v in check_axioms(g).violations} == {"reachability"}


def test_isomorphism_true_and_false():
    g1 = generate_graph(SSYTCrystal(2), highest_tableau(2, (1, 0, 0)))
    g2 = generate_graph(SSYTCrystal(2), highest_tableau(2, (1, 1, 0)))
    assert graph_isomorphic(g1, g1)
    assert len(g1) == len(g2) == 3
    assert not graph_isomorphic(g1, g2)
    # Mirroring the colors turns the standard representation into its dual.
    assert graph_isomorphic(relabel_colors(g1, lambda i: 3 - i), g2)
    assert rooted_mapping(g1, g1) == {0: 0, 1: 1, 2: 2}


def test_ssyt_and_polyhedral_graphs_are_isomorphic():
    from ancrystals.polyhedral import BLambdaPoly

    lam = (2, 1, 0)
    g1 = generate_graph(SSYTCrystal(2), highest_tableau(2, lam))
    g2 = generate_graph(BLambdaPoly(2, lam), PolyVector(2, ()))
    assert len(g1) == 8
    assert graph_isomorphic(g1, g2)


def test_raising_word_rebuilds_element():
    c = SSYTCrystal(3)
    g = generate_graph(c, highest_tableau(3, (2, 1, 0, 0)))
    top = g.nodes[0]
    for b in g.nodes:
        assert c.f_word(top, c.raising_word(b)) == b
        assert c.f_word(top, g.word(g.index[b])) == b
