"""Exhaustive verification suites over small ranks.

Each suite returns a ``Report``; the graphs it built are returned alongside
so callers can run further checks (for instance the axiom checker) on them.
"""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import product

from . import bridges as br
from .cartan_an import partition, partitions, tau, weyl_dim
from .crystal_core import (
    Crystal,
    CrystalGraph,
    Report,
    RLambda,
    RLambdaCrystal,
    TensorCrystal,
    check_axioms,
    check_morphism,
    generate_graph,
    graph_isomorphic,
    relabel_colors,
    rooted_mapping,
)
from .gt import GTCrystal, enumerate_gt, lh_reading, varsigma, varsigma_inv
from .mlt import MLTCrystal, t_infinity
from .polyhedral import (
    BInfinityPoly,
    BLambdaPoly,
    PolyVector,
    enumerate_sigma_lambda,
    flat_index,
    in_sigma,
    in_sigma_lambda,
    sigma0_i,
    sigma_closed_form,
    sigma_i_max,
    zero_vector,
)
from .reverse_models import (
    RMLT,
    RMLTCrystal,
    RSSYTCrystal,
    eta,
    eta_inv,
    rho_infinity,
    rssyt_highest,
    zero_rmlt,
)
from .ssyt import (
    SSYTCrystal,
    enumerate_ssyt,
    evacuation,
    highest_tableau,
    rho_lambda_word,
)


@dataclass
class SuiteResult:
    report: Report
    graphs: dict[str, tuple[CrystalGraph, Crystal]] = field(default_factory=dict)


def _iso(rep: Report, name: str, g1: CrystalGraph, g2: CrystalGraph) -> None:
    rep.checked += 1
    if not graph_isomorphic(g1, g2):
        rep.add("isomorphism", f"{name}: graphs are not color-isomorphic")


# ---------------------------------------------------------------- B(lambda)


def lambda_graphs(
    n: int, lam: Sequence[int]
) -> dict[str, tuple[CrystalGraph, Crystal]]:
    """The five realizations of B(lambda), each generated from its highest element."""
    lam = partition(n, lam)
    ml_crystal = TensorCrystal(RMLTCrystal(n), RLambdaCrystal(lam))
    top = rssyt_highest(n, lam)
    seeds: dict[str, tuple[Crystal, object]] = {
        "ssyt": (SSYTCrystal(n), highest_tableau(n, lam)),
        "rssyt": (RSSYTCrystal(n), top),
        "poly": (BLambdaPoly(n, lam), zero_vector(n)),
        "gt": (GTCrystal(n), varsigma_inv(zero_vector(n), lam)),
        "ml": (ml_crystal, (br.ml_embed(top), RLambda(lam))),
    }
    return {name: (generate_graph(c, seed), c) for name, (c, seed) in seeds.items()}


def iso_suite(n: int, lam: Sequence[int]) -> SuiteResult:
    """All models of B(lambda) agree: sizes, isomorphism, element maps."""
    lam = partition(n, lam)
    rep = Report(f"iso[n={n}, lambda={lam}]")
    graphs = lambda_graphs(n, lam)
    dim = weyl_dim(lam)
    for name, (g, _) in graphs.items():
        rep.checked += 1
        if len(g) != dim:
            rep.add("size", f"{name} graph has {len(g)} nodes, weyl_dim = {dim}")
    base = graphs["rssyt"][0]
    for name in ("ssyt", "poly", "gt", "ml"):
        _iso(rep, f"rssyt vs {name}", base, graphs[name][0])

    rssyt_c = graphs["rssyt"][1]
    poly_g, poly_c = graphs["poly"]
    gt_g, gt_c = graphs["gt"]
    ml_g, ml_c = graphs["ml"]
    tableaux = base.nodes
    r_lam = RLambda(lam)

    # Element maps intertwine and the graph isomorphisms are induced by them.
    to_poly = lambda T: br.psi_lambda_inv(T, lam)
    to_ml = lambda T: (br.ml_embed(T), r_lam)
    rep.extend(check_morphism(rssyt_c, poly_c, tableaux, to_poly, "psi_lambda^-1"))
    rep.extend(check_morphism(gt_c, poly_c, gt_g.nodes, varsigma, "varsigma"))
    rep.extend(check_morphism(rssyt_c, ml_c, tableaux, to_ml, "ml"))
    for name, g, fmap in (("poly", poly_g, to_poly), ("ml", ml_g, to_ml)):
        mapping = rooted_mapping(base, g)
        if mapping is not None:
            for k, T in enumerate(tableaux):
                rep.checked += 1
                if g.nodes[mapping[k]] != fmap(T):
                    rep.add(
                        "induced",
                        f"{name}: graph isomorphism disagrees with the element map at {T.rows}",
                    )

    # Independent enumerations.
    enumerated = {
        "ssyt": len(enumerate_ssyt(n, lam)),
        "sigma_lambda": sum(1 for _ in enumerate_sigma_lambda(n, lam)),
        "gt": sum(1 for _ in enumerate_gt(lam, n)),
    }
    for name, count in enumerated.items():
        rep.checked += 1
        if count != dim:
            rep.add(
                "enumeration", f"{name} enumerates {count} elements, weyl_dim = {dim}"
            )
    rep.checked += 1
    if set(poly_g.nodes) != set(enumerate_sigma_lambda(n, lam)):
        rep.add(
            "enumeration",
            "graph of Sigma[lambda] differs from the inequality enumeration",
        )
    rep.checked += 1
    if set(gt_g.nodes) != set(enumerate_gt(lam, n)):
        rep.add("enumeration", "GT graph differs from the interlacing enumeration")

    for T in tableaux:
        rep.checked += 1
        x = br.psi_lambda_inv(T, lam)
        if br.psi_lambda(x, lam) != T:
            rep.add("round trip", f"psi_lambda(psi_lambda^-1(T)) != T at {T.rows}")
        g = br.gt_of_rssyt(T)
        if varsigma(g) != x:
            rep.add("triangle", f"varsigma(g_T) != psi_lambda^-1(T) at {T.rows}")
        if br.rssyt_of_gt(g) != T:
            rep.add("round trip", f"rssyt_of_gt(g_T) != T at {T.rows}")
        z = br.ml_embed(T)
        if br.psi_infty(z) != x:
            rep.add("aji=xji", f"psi_inf(ml(T)) != psi_lambda^-1(T) at {T.rows}")
        if not br.in_ml_image(z, lam):
            rep.add("image", f"ml(T) fails the image test at {T.rows}")
        for i in range(1, n + 1):
            for j in range(1, n + 2 - i):
                by_cols = br.xi_by_columns(T, i, j)
                if by_cols is not None and by_cols != br.xi(T, i, j):
                    rep.add(
                        "xi",
                        f"xi_{i}^{j} column count {by_cols} != {br.xi(T, i, j)} at {T.rows}",
                    )
    for g in gt_g.nodes:
        rep.checked += 1
        if lh_reading(g) != varsigma(g):
            rep.add("lh reading", f"#L-#H reading differs from varsigma at {g.rows}")
        if varsigma_inv(varsigma(g), lam) != g:
            rep.add("round trip", f"varsigma_inv(varsigma(g)) != g at {g.rows}")
    return SuiteResult(rep, graphs)


def involution_lambda_suite(n: int, lam: Sequence[int]) -> SuiteResult:
    """rho_lambda by words equals evacuation; both flip the crystal."""
    lam = partition(n, lam)
    rep = Report(f"involutions[n={n}, lambda={lam}]")
    crystal = SSYTCrystal(n)
    g = generate_graph(crystal, highest_tableau(n, lam))
    for k, T in enumerate(g.nodes):
        rep.checked += 1
        ev = evacuation(T)
        by_bfs = rho_lambda_word(T, g.word(k))
        by_raise = rho_lambda_word(T)
        if not (ev == by_bfs == by_raise):
            rep.add(
                "rho=evac",
                f"{T.rows}: evac {ev.rows}, BFS word {by_bfs.rows}, raising word {by_raise.rows}",
            )
        if evacuation(ev) != T:
            rep.add("involution", f"evacuation is not an involution at {T.rows}")
        for i in range(1, n + 1):
            lhs = crystal.f(T, i)
            lhs = None if lhs is None else evacuation(lhs)
            if lhs != crystal.e(ev, n + 1 - i):
                rep.add("flip", f"evac(f_{i} T) != e_{n + 1 - i}(evac T) at {T.rows}")
    poly = BLambdaPoly(n, lam)
    for x in enumerate_sigma_lambda(n, lam):
        rep.checked += 1
        y = br.rho_poly_lambda(x, lam)
        if br.rho_poly_lambda(y, lam) != x:
            rep.add("involution", f"rho_lambda^poly is not an involution at {x}")
        if poly.weight(y) != tuple(reversed(poly.weight(x))):
            rep.add("weight", f"wt(rho(x)) is not w0 wt(x) at {x}")
        for i in range(1, n + 1):
            lhs = poly.f(x, i)
            lhs = None if lhs is None else br.rho_poly_lambda(lhs, lam)
            if lhs != poly.e(y, n + 1 - i):
                rep.add("flip", f"rho(f_{i} x) != e_{n + 1 - i}(rho x) at {x}")
    return SuiteResult(rep, {"ssyt": (g, crystal)})


# ---------------------------------------------------------------- B(infinity)


def random_raising_word(crystal: Crystal, b, rng: random.Random) -> tuple[int, ...]:
    """Like ``Crystal.raising_word`` but picks a random defined e_i each step."""
    path = []
    while True:
        options = [i for i in range(1, crystal.n + 1) if crystal.e(b, i) is not None]
        if not options:
            return tuple(reversed(path))
        i = rng.choice(options)
        path.append(i)
        b = crystal.e(b, i)


def binfty_graphs(n: int, depth: int) -> dict[str, tuple[CrystalGraph, Crystal]]:
    seeds: dict[str, tuple[Crystal, object]] = {
        "mlt": (MLTCrystal(n), t_infinity(n)),
        "rmlt": (RMLTCrystal(n), zero_rmlt(n)),
        "poly": (BInfinityPoly(n), zero_vector(n)),
    }
    return {
        name: (generate_graph(c, seed, depth=depth), c)
        for name, (c, seed) in seeds.items()
    }


def binfty_suite(n: int, depth: int, seed: int = 0) -> SuiteResult:
    rep = Report(f"binfty[n={n}, depth={depth}]")
    rng = random.Random(seed)
    graphs = binfty_graphs(n, depth)
    mlt_g, mlt_c = graphs["mlt"]
    rmlt_g, rmlt_c = graphs["rmlt"]
    poly_g, poly_c = graphs["poly"]
    flip = lambda i: n + 1 - i

    rep.extend(
        check_morphism(rmlt_c, poly_c, rmlt_g.nodes, br.psi_infty, "psi_infinity")
    )
    _iso(rep, "rmlt vs poly", rmlt_g, poly_g)
    rep.checked += 1
    if {br.psi_infty(T) for T in rmlt_g.nodes} != set(poly_g.nodes):
        rep.add(
            "psi_infinity",
            "psi_inf does not map the truncated graph onto the polyhedral one",
        )
    _iso(rep, "mlt vs relabeled rmlt", mlt_g, relabel_colors(rmlt_g, flip))
    _iso(rep, "mirror", mlt_g, relabel_colors(mlt_g, flip))
    for T in rmlt_g.nodes:
        rep.checked += 1
        if eta_inv(eta(T)) != T:
            rep.add("eta", f"eta is not inverted at {T.counts}")
        if rmlt_c.weight(T) != tau(mlt_c.weight(eta(T))):
            rep.add("weight", f"wt(T) != tau(wt(eta T)) at {T.counts}")
        if not in_sigma(br.psi_infty(T)):
            rep.add("membership", f"psi_inf(T) leaves the cone at {T.counts}")

    for k, X in enumerate(mlt_g.nodes):
        rep.checked += 1
        words = {
            mlt_g.word(k),
            mlt_c.raising_word(X),
            random_raising_word(mlt_c, X, rng),
        }
        images = {rho_infinity(X, w) for w in words}
        if len(images) != 1:
            rep.add("word independence", f"rho_inf depends on the word at {X.counts}")
        Y = images.pop()
        if rho_infinity(Y) != X:
            rep.add("involution", f"rho_inf(rho_inf(X)) != X at {X.counts}")
        sx, sy = mlt_c.stats(X), mlt_c.stats(Y)
        if sy.wt != tau(sx.wt):
            rep.add("weight", f"wt(rho X) != tau(wt X) at {X.counts}")
        if sy.eps != tuple(reversed(sx.eps)):
            rep.add("eps", f"eps(rho X) is not the mirror of eps(X) at {X.counts}")
        for i in range(1, n + 1):
            if rho_infinity(mlt_c.f(X, i)) != mlt_c.f(Y, flip(i)):
                rep.add("intertwine", f"rho f_{i} != f_{flip(i)} rho at {X.counts}")
    for x in poly_g.nodes:
        rep.checked += 1
        y = br.rho_poly_infty(x)
        if br.rho_poly_infty(y) != x:
            rep.add("involution", f"rho_inf^poly is not an involution at {x}")
        for i in range(1, n + 1):
            if br.rho_poly_infty(poly_c.f(x, i)) != poly_c.f(y, flip(i)):
                rep.add("intertwine", f"rho^poly f_{i} != f_{flip(i)} rho^poly at {x}")
    return SuiteResult(rep, graphs)


# ---------------------------------------------------------------- predicates


def all_rmlt(n: int, max_count: int) -> Iterator[RMLT]:
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 2 - i)]
    for values in product(range(max_count + 1), repeat=len(cells)):
        yield RMLT.from_dict(n, dict(zip(cells, values)))


def image_suite(n: int, lams: Sequence[Sequence[int]], max_count: int = 3) -> Report:
    """in_ml_image(T, lam) <=> psi_inf(T) in Sigma[lam] <=> r-inequalities."""
    rep = Report(f"image[n={n}, counts<={max_count}, {len(lams)} weights]")
    lams = [partition(n, lam) for lam in lams]
    for T in all_rmlt(n, max_count):
        x = br.psi_infty(T)
        r = br.theta_r(T)
        for (i, m), v in r.items():
            if v != x.x(m, i):
                rep.add("r=x", f"r_{i},{m} != x_{m}^({i}) at {T.counts}")
        for lam in lams:
            rep.checked += 1
            a = br.in_ml_image(T, lam)
            b = in_sigma_lambda(x, lam)
            c = br.r_inequalities_hold(r, n, lam)
            if not a == b == c:
                rep.add(
                    "equivalence",
                    f"{T.counts}, lambda={lam}: image={a}, sigma={b}, r={c}",
                )
    return rep


# ---------------------------------------------------------------- lemmas


def lemma_check(x: PolyVector, lam: Sequence[int], rep: Report) -> None:
    for i in range(1, x.n + 1):
        rep.checked += 1
        direct = sigma_i_max(x, i)[0]
        closed = sigma_closed_form(x, i)
        if direct != closed:
            rep.add(
                "closed form",
                f"sigma^({i}) = {direct} but the closed form gives {closed} at {x}",
            )
        s0 = sigma0_i(x, lam, i)
        if direct < s0:
            rep.add(
                "sigma>=sigma0",
                f"sigma^({i}) = {direct} < sigma_0 = {s0} at {x}, lambda={tuple(lam)}",
            )


def minimal_gaps(x: PolyVector) -> list[int]:
    """Smallest lambda_i - lambda_{i+1} allowed by the B(lambda) inequalities."""
    n = x.n
    return [
        max([0] + [x.x(j, i - j + 1) - x.x(j, i - j) for j in range(1, i + 1)])
        for i in range(1, n + 1)
    ]


def lambda_from_gaps(gaps: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(gaps[i:]) for i in range(len(gaps))) + (0,)


def random_sigma_element(n: int, rng: random.Random, top: int = 6) -> PolyVector:
    """Random member of the cone: each chain x_1^{(i)} >= ... >= x_i^{(1)} >= 0
    is a sorted random sample."""
    flat = [0] * (n * n)
    for i in range(1, n + 1):
        chain = sorted((rng.randint(0, top) for _ in range(i)), reverse=True)
        for m, v in enumerate(chain, start=1):
            flat[flat_index(n, m, i - m + 1) - 1] = v
    return PolyVector(n, tuple(flat))


def lemma_fuzz(samples: int, seed: int = 0, max_n: int = 5) -> Report:
    rep = Report(f"lemma fuzz[{samples} samples]")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, max_n)
        x = random_sigma_element(n, rng)
        lam = lambda_from_gaps([g + rng.randint(0, 2) for g in minimal_gaps(x)])
        lemma_check(x, lam, rep)
    return rep


def lambda_weights(max_n: int, max_size: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    for n in range(1, max_n + 1):
        for lam in partitions(n, max_size):
            yield n, lam


def axioms_for(result: SuiteResult) -> Report:
    rep = Report(f"axioms[{result.report.name}]")
    for g, c in result.graphs.values():
        rep.extend(check_axioms(g, c))
    return rep
