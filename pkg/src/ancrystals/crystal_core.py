"""Abstract crystals: the element contract, R_lambda, tensor products,
graph generation, the axiom checker and rooted graph isomorphism."""

from __future__ import annotations

import os
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field

from .cartan_an import Weight, alpha, pairing, sub


class _MinusInfinity:
    """phi_i = -infinity.  Kept for completeness; no model here produces it."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MINUS_INFINITY"

    def __lt__(self, other: object) -> bool:
        return other is not self

    def __le__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return False

    def __ge__(self, other: object) -> bool:
        return other is self


MINUS_INFINITY = _MinusInfinity()

DEFAULT_NODE_CAP = 10**6
NODE_CAP_ENV = "CRYSTAL_NODE_CAP"


class NodeCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"graph generation exceeded the node cap of {cap}")
        self.cap = cap


class InternalConsistencyError(AssertionError):
    """Two computations that must agree did not."""


@dataclass(frozen=True)
class ElementStats:
    """wt, eps_i and phi_i of one element (the two tuples are indexed by i-1)."""

    wt: Weight
    eps: tuple
    phi: tuple

    def consistent(self) -> bool:
        return all(
            p is MINUS_INFINITY or p - e == pairing(i, self.wt)
            for i, (e, p) in enumerate(zip(self.eps, self.phi), start=1)
        )


def stats_from_eps(wt: Weight, eps: Sequence[int]) -> ElementStats:
    """Fill in phi_i = eps_i + <alpha_i^vee, wt>."""
    eps = tuple(eps)
    phi = tuple(e + pairing(i, wt) for i, e in enumerate(eps, start=1))
    return ElementStats(wt, eps, phi)


class Crystal:
    """A type A_n crystal.  Elements are hashable immutable values.

    Subclasses implement ``f``, ``e`` and ``stats``.  Operators return
    ``None`` for the absent result.
    """

    n: int
    name = "crystal"

    def f(self, b, i: int):
        raise NotImplementedError

    def e(self, b, i: int):
        raise NotImplementedError

    def stats(self, b) -> ElementStats:
        raise NotImplementedError

    def weight(self, b) -> Weight:
        return self.stats(b).wt

    def epsilon(self, b, i: int):
        return self.stats(b).eps[i - 1]

    def phi(self, b, i: int):
        return self.stats(b).phi[i - 1]

    def f_word(self, b, word: Iterable[int]):
        """Apply f_{w[0]} first, then f_{w[1]}, ...; None if any step is absent."""
        for i in word:
            if b is None:
                return None
            b = self.f(b, i)
        return b

    def e_word(self, b, word: Iterable[int]):
        for i in word:
            if b is None:
                return None
            b = self.e(b, i)
        return b

    def raising_word(self, b) -> tuple[int, ...]:
        """A word w with b = f_{w[-1]} ... f_{w[0]}(highest), found by
        repeatedly applying the smallest e_i that is defined."""
        path = []
        while True:
            for i in range(1, self.n + 1):
                up = self.e(b, i)
                if up is not None:
                    path.append(i)
                    b = up
                    break
            else:
                return tuple(reversed(path))


@dataclass(frozen=True)
class RLambda:
    """The single element r_lambda."""

    lam: Weight


def r_lambda_stats(lam: Sequence[int]) -> ElementStats:
    lam = tuple(lam)
    n = len(lam) - 1
    eps = tuple(-pairing(i, lam) for i in range(1, n + 1))
    return ElementStats(lam, eps, (0,) * n)


class RLambdaCrystal(Crystal):
    name = "r_lambda"

    def __init__(self, lam: Sequence[int]):
        self.lam = tuple(lam)
        self.n = len(self.lam) - 1
        self.element = RLambda(self.lam)

    def f(self, b, i):
        return None

    def e(self, b, i):
        return None

    def stats(self, b):
        return r_lambda_stats(self.lam)


def tensor_apply(op: str, i: int, pair: tuple, left: Crystal, right: Crystal):
    """Apply e_i or f_i to ``(b1, b2)`` by the tensor product rule.

    e_i acts on b1 when phi_i(b1) >= eps_i(b2), otherwise on b2.
    f_i acts on b1 when phi_i(b1) > eps_i(b2), otherwise on b2.
    """
    b1, b2 = pair
    p1 = left.phi(b1, i)
    e2 = right.epsilon(b2, i)
    if op == "e":
        if p1 >= e2:
            c = left.e(b1, i)
            return None if c is None else (c, b2)
        c = right.e(b2, i)
        return None if c is None else (b1, c)
    if op == "f":
        if p1 > e2:
            c = left.f(b1, i)
            return None if c is None else (c, b2)
        c = right.f(b2, i)
        return None if c is None else (b1, c)
    raise ValueError(f"unknown operator {op!r}")


def tensor_stats(s1: ElementStats, s2: ElementStats) -> ElementStats:
    wt = tuple(a + b for a, b in zip(s1.wt, s2.wt))
    n = len(wt) - 1
    eps = []
    phi = []
    for i in range(1, n + 1):
        eps.append(max(s1.eps[i - 1], s2.eps[i - 1] - pairing(i, s1.wt)))
        phi.append(max(s2.phi[i - 1], s1.phi[i - 1] + pairing(i, s2.wt)))
    return ElementStats(wt, tuple(eps), tuple(phi))


class TensorCrystal(Crystal):
    """left (x) right; elements are pairs."""

    def __init__(self, left: Crystal, right: Crystal):
        if left.n != right.n:
            raise ValueError("tensor factors must have the same rank")
        self.left = left
        self.right = right
        self.n = left.n
        self.name = f"{left.name}*{right.name}"

    def f(self, b, i):
        return tensor_apply("f", i, b, self.left, self.right)

    def e(self, b, i):
        return tensor_apply("e", i, b, self.left, self.right)

    def stats(self, b):
        return tensor_stats(self.left.stats(b[0]), self.right.stats(b[1]))


# ---------------------------------------------------------------- graphs


@dataclass
class CrystalGraph:
    """Crystal graph with nodes in canonical BFS order (root has id 0).

    ``edges`` holds ``(u, i, v)`` with f_i(node u) = node v.  ``parents[v]``
    is the BFS tree edge ``(u, i)`` into v.
    """

    n: int
    nodes: list
    stats: list[ElementStats]
    edges: list[tuple[int, int, int]]
    parents: list[tuple[int, int] | None]
    root: int = 0
    depth: int | None = None
    model: str | None = None
    index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if (
            not self.index
            and self.nodes
            and all(isinstance(x, Hashable) for x in self.nodes)
        ):
            self.index = {b: k for k, b in enumerate(self.nodes)}

    def __len__(self) -> int:
        return len(self.nodes)

    def word(self, v: int) -> tuple[int, ...]:
        """Colors along the BFS tree path root -> v, first applied first."""
        out = []
        while self.parents[v] is not None:
            u, i = self.parents[v]
            out.append(i)
            v = u
        return tuple(reversed(out))

    def successors(self) -> dict[tuple[int, int], int]:
        return {(u, i): v for u, i, v in self.edges}

    def edge_multiset(self) -> dict[tuple[int, int], int]:
        """Edge count per (color, target layer); handy for coarse comparisons."""
        counts: dict[tuple[int, int], int] = {}
        for _, i, v in self.edges:
            key = (i, len(self.word(v)))
            counts[key] = counts.get(key, 0) + 1
        return counts


def node_cap_from_env(default: int = DEFAULT_NODE_CAP) -> int:
    raw = os.environ.get(NODE_CAP_ENV)
    if raw is None or raw.strip() == "":
        return default
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{NODE_CAP_ENV} must be positive")
    return cap


def generate_graph(
    crystal: Crystal,
    seed,
    depth: int | None = None,
    node_cap: int | None = None,
) -> CrystalGraph:
    """BFS closure of ``seed`` under every f_i, layer by layer and i ascending."""
    cap = node_cap_from_env() if node_cap is None else node_cap
    n = crystal.n
    nodes = [seed]
    index = {seed: 0}
    layer = [0]
    parents: list[tuple[int, int] | None] = [None]
    edges: list[tuple[int, int, int]] = []
    queue = deque([0])
    while queue:
        u = queue.popleft()
        if depth is not None and layer[u] >= depth:
            continue
        b = nodes[u]
        for i in range(1, n + 1):
            c = crystal.f(b, i)
            if c is None:
                continue
            v = index.get(c)
            if v is None:
                if len(nodes) >= cap:
                    raise NodeCapExceeded(cap)
                v = len(nodes)
                nodes.append(c)
                index[c] = v
                layer.append(layer[u] + 1)
                parents.append((u, i))
                queue.append(v)
            edges.append((u, i, v))
    stats = [crystal.stats(b) for b in nodes]
    return CrystalGraph(
        n=n,
        nodes=nodes,
        stats=stats,
        edges=edges,
        parents=parents,
        depth=depth,
        model=crystal.name,
        index=index,
    )


def relabel_colors(graph: CrystalGraph, perm: Callable[[int], int]) -> CrystalGraph:
    """Same graph with every color i replaced by perm(i).

    Stats are copied unchanged, so the result is only meant for structural
    comparison.
    """
    edges = [(u, perm(i), v) for u, i, v in graph.edges]
    parents = [None if p is None else (p[0], perm(p[1])) for p in graph.parents]
    return CrystalGraph(
        n=graph.n,
        nodes=list(graph.nodes),
        stats=list(graph.stats),
        edges=edges,
        parents=parents,
        root=graph.root,
        depth=graph.depth,
        model=graph.model,
        index=dict(graph.index),
    )


def rooted_mapping(g1: CrystalGraph, g2: CrystalGraph) -> dict[int, int] | None:
    """The color-preserving rooted isomorphism g1 -> g2 as a node map, or None.

    Starting from the roots, each colored out-edge forces the image of its
    target, so at most one candidate exists; it is built by simultaneous BFS
    and then checked edge by edge.
    """
    if len(g1.nodes) != len(g2.nodes) or len(g1.edges) != len(g2.edges):
        return None
    s1 = g1.successors()
    s2 = g2.successors()
    colors1: dict[int, set[int]] = {}
    for u, i in s1:
        colors1.setdefault(u, set()).add(i)
    colors2: dict[int, set[int]] = {}
    for u, i in s2:
        colors2.setdefault(u, set()).add(i)
    fwd = {g1.root: g2.root}
    back = {g2.root: g1.root}
    queue = deque([g1.root])
    while queue:
        u = queue.popleft()
        w = fwd[u]
        if colors1.get(u, set()) != colors2.get(w, set()):
            return None
        for i in sorted(colors1.get(u, ())):
            v, x = s1[(u, i)], s2[(w, i)]
            if v in fwd:
                if fwd[v] != x:
                    return None
            else:
                if x in back:
                    return None
                fwd[v] = x
                back[x] = v
                queue.append(v)
    if len(fwd) != len(g1.nodes):
        return None
    return fwd


def graph_isomorphic(g1: CrystalGraph, g2: CrystalGraph) -> bool:
    return rooted_mapping(g1, g2) is not None


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class Violation:
    condition: str
    witness: str


@dataclass
class Report:
    name: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, condition: str, witness: str) -> None:
        self.violations.append(Violation(condition, witness))

    def extend(self, other: Report) -> None:
        self.checked += other.checked
        self.violations.extend(other.violations)

    def summary(self) -> str:
        status = "OK" if self.ok else f"{len(self.violations)} violation(s)"
        return f"{self.name}: checked {self.checked}, {status}"


def check_axioms(graph: CrystalGraph, crystal: Crystal | None = None) -> Report:
    """Check the crystal axioms on every node and edge of ``graph``.

    Works from the stored annotations alone.  When ``crystal`` is given, the
    annotations and the edges are also recomputed from it.
    """
    rep = Report(f"axioms[{graph.model}]")
    n = graph.n
    size = len(graph.nodes)
    for k, s in enumerate(graph.stats):
        rep.checked += 1
        if len(s.wt) != n + 1 or len(s.eps) != n or len(s.phi) != n:
            rep.add("shape", f"node {k}: annotation lengths do not match n={n}")
            continue
        for i in range(1, n + 1):
            p, e = s.phi[i - 1], s.eps[i - 1]
            if p is not MINUS_INFINITY and p - e != pairing(i, s.wt):
                rep.add(
                    "(i)",
                    f"node {k}, i={i}: phi-eps={p - e}, pairing={pairing(i, s.wt)}",
                )
        if crystal is not None and crystal.stats(graph.nodes[k]) != s:
            rep.add("annotation", f"node {k}: stored stats differ from the model")
    seen_out: set[tuple[int, int]] = set()
    seen_in: set[tuple[int, int]] = set()
    for u, i, v in graph.edges:
        rep.checked += 1
        if not (0 <= u < size and 0 <= v < size and 1 <= i <= n):
            rep.add("shape", f"edge {(u, i, v)} out of range")
            continue
        if (u, i) in seen_out:
            rep.add("(vi)", f"node {u} has two outgoing {i}-edges")
        if (v, i) in seen_in:
            rep.add("(vi)", f"node {v} has two incoming {i}-edges")
        seen_out.add((u, i))
        seen_in.add((v, i))
        su, sv = graph.stats[u], graph.stats[v]
        if sub(su.wt, sv.wt) != alpha(n, i):
            rep.add(
                "(iii)", f"edge {u}-{i}->{v}: wt drop {sub(su.wt, sv.wt)} != alpha_{i}"
            )
        if sv.eps[i - 1] != su.eps[i - 1] + 1:
            rep.add(
                "(v)", f"edge {u}-{i}->{v}: eps_{i} {su.eps[i - 1]} -> {sv.eps[i - 1]}"
            )
        if sv.phi[i - 1] != su.phi[i - 1] - 1:
            rep.add(
                "(v)", f"edge {u}-{i}->{v}: phi_{i} {su.phi[i - 1]} -> {sv.phi[i - 1]}"
            )
        # (ii)/(iv) read the same edge backwards.
        if su.eps[i - 1] != sv.eps[i - 1] - 1 or su.phi[i - 1] != sv.phi[i - 1] + 1:
            rep.add("(iv)", f"edge {u}-{i}->{v}: e_{i} does not restore eps/phi")
        for s, node in ((su, u), (sv, v)):
            if s.phi[i - 1] is MINUS_INFINITY:
                rep.add(
                    "(vii)", f"node {node} has phi_{i} = -inf but carries an {i}-edge"
                )
        if crystal is not None:
            bu, bv = graph.nodes[u], graph.nodes[v]
            if crystal.f(bu, i) != bv:
                rep.add("(vi)", f"edge {u}-{i}->{v}: f_{i} recomputes differently")
            if crystal.e(bv, i) != bu:
                rep.add("(vi)", f"edge {u}-{i}->{v}: e_{i}(target) is not the source")
    reached = {graph.root}
    adj: dict[int, list[int]] = {}
    for u, _, v in graph.edges:
        adj.setdefault(u, []).append(v)
    queue = deque([graph.root])
    while queue:
        u = queue.popleft()
        for v in adj.get(u, ()):
            if v not in reached:
                reached.add(v)
                queue.append(v)
    if len(reached) != size:
        missing = min(set(range(size)) - reached)
        rep.add("reachability", f"node {missing} is not reachable from the root")
    return rep


def check_morphism(
    src: Crystal,
    dst: Crystal,
    elements: Iterable,
    fmap: Callable,
    name: str = "morphism",
) -> Report:
    """Check that ``fmap`` preserves wt/eps/phi and commutes with every e_i, f_i
    on the given elements of ``src``."""
    rep = Report(name)
    n = src.n
    for b in elements:
        rep.checked += 1
        c = fmap(b)
        if src.stats(b) != dst.stats(c):
            rep.add("stats", f"{b!r}: {src.stats(b)} vs {dst.stats(c)}")
        for i in range(1, n + 1):
            for op in ("f", "e"):
                lhs = getattr(src, op)(b, i)
                lhs = None if lhs is None else fmap(lhs)
                rhs = getattr(dst, op)(c, i)
                if lhs != rhs:
                    rep.add(
                        f"{op}_{i}",
                        f"{b!r}: map({op}(b)) = {lhs!r}, {op}(map(b)) = {rhs!r}",
                    )
    return rep
