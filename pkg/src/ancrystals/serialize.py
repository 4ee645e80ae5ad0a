"""JSON and DOT encodings for elements and crystal graphs."""

from __future__ import annotations

import json
from collections import deque
from typing import Any

from .bridges import LusztigData
from .crystal_core import CrystalGraph, ElementStats, RLambda
from .gt import GTPattern
from .mlt import MLT
from .polyhedral import PolyVector
from .reverse_models import RMLT, RSSYT
from .ssyt import SSYT

MODELS = ("ssyt", "rssyt", "mlt", "rmlt", "poly", "gt", "lusztig", "r_lambda", "tensor")


class ParseError(ValueError):
    """Malformed input.  ``pos``/``line``/``col`` locate JSON syntax errors."""

    def __init__(
        self,
        msg: str,
        pos: int | None = None,
        line: int | None = None,
        col: int | None = None,
    ):
        where = "" if line is None else f" (line {line}, column {col}, char {pos})"
        super().__init__(msg + where)
        self.pos = pos
        self.line = line
        self.col = col


def _pairs(d: dict[tuple[int, int], int]) -> dict[str, int]:
    return {f"{a},{b}": v for (a, b), v in d.items()}


def _unpairs(d: Any, what: str) -> dict[tuple[int, int], int]:
    if not isinstance(d, dict):
        raise ParseError(f"{what} must be an object keyed by 'a,b'")
    out = {}
    for key, v in d.items():
        try:
            a, b = (int(t) for t in key.split(","))
        except ValueError:
            raise ParseError(f"bad key {key!r} in {what}") from None
        if not isinstance(v, int):
            raise ParseError(f"{what}[{key!r}] must be an integer")
        out[(a, b)] = v
    return out


def element_to_data(b: Any) -> dict[str, Any]:
    if isinstance(b, SSYT):
        return {"model": "ssyt", "n": b.n, "rows": [list(r) for r in b.rows]}
    if isinstance(b, RSSYT):
        return {"model": "rssyt", "n": b.n, "rows": [list(r) for r in b.rows]}
    if isinstance(b, MLT):
        return {"model": "mlt", "n": b.n, "counts": _pairs(b.as_dict())}
    if isinstance(b, RMLT):
        return {"model": "rmlt", "n": b.n, "counts": _pairs(b.as_dict())}
    if isinstance(b, PolyVector):
        return {"model": "poly", "n": b.n, "x": [list(r) for r in b.rows()]}
    if isinstance(b, GTPattern):
        return {
            "model": "gt",
            "n": b.n,
            "lambda": list(b.lam),
            "rows": [list(r) for r in b.rows],
        }
    if isinstance(b, LusztigData):
        return {"model": "lusztig", "n": b.n, "a": _pairs(b.as_dict())}
    if isinstance(b, RLambda):
        return {"model": "r_lambda", "lambda": list(b.lam)}
    if isinstance(b, tuple) and len(b) == 2:
        return {
            "model": "tensor",
            "factors": [element_to_data(b[0]), element_to_data(b[1])],
        }
    raise TypeError(f"cannot serialize {type(b).__name__}")


def _int(d: dict, key: str) -> int:
    v = d.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"field {key!r} must be an integer")
    return v


def _rows(d: dict, key: str) -> list[list[int]]:
    v = d.get(key)
    if not isinstance(v, list) or not all(
        isinstance(r, list)
        and all(isinstance(a, int) and not isinstance(a, bool) for a in r)
        for r in v
    ):
        raise ParseError(f"field {key!r} must be a list of integer lists")
    return v


def _guess_model(d: dict) -> str:
    if "factors" in d:
        return "tensor"
    if "x" in d:
        return "poly"
    if "lambda" in d and "rows" in d:
        return "gt"
    if "lambda" in d:
        return "r_lambda"
    if "a" in d:
        return "lusztig"
    if "rows" in d:
        rows = _rows(d, "rows")
        # A decrease along the first row or down the first column marks a reverse tableau.
        if (
            rows
            and rows[0]
            and (
                rows[0][0] > rows[0][-1]
                or (len(rows) > 1 and rows[1] and rows[0][0] > rows[1][0])
            )
        ):
            return "rssyt"
        return "ssyt"
    raise ParseError(
        "cannot tell which model this element belongs to; pass the model explicitly"
    )


def element_from_data(d: Any, model: str | None = None) -> Any:
    if not isinstance(d, dict):
        raise ParseError("an element must be a JSON object")
    model = d.get("model", model) or _guess_model(d)
    try:
        if model == "ssyt":
            return SSYT(_int(d, "n"), _rows(d, "rows"))
        if model == "rssyt":
            return RSSYT(_int(d, "n"), _rows(d, "rows"))
        if model == "mlt":
            return MLT.from_dict(_int(d, "n"), _unpairs(d.get("counts"), "counts"))
        if model == "rmlt":
            return RMLT.from_dict(_int(d, "n"), _unpairs(d.get("counts"), "counts"))
        if model in ("poly", "poly-lambda"):
            return PolyVector.from_rows(_int(d, "n"), _rows(d, "x"))
        if model == "gt":
            lam = d.get("lambda")
            if not isinstance(lam, list):
                raise ParseError("field 'lambda' must be a list")
            return GTPattern(_int(d, "n"), tuple(lam), _rows(d, "rows"))
        if model == "lusztig":
            n = _int(d, "n")
            return LusztigData.from_dict(n, _unpairs(d.get("a"), "a"))
        if model == "r_lambda":
            return RLambda(tuple(d["lambda"]))
        if model == "tensor":
            f = d.get("factors")
            if not isinstance(f, list) or len(f) != 2:
                raise ParseError("field 'factors' must hold two elements")
            return (element_from_data(f[0]), element_from_data(f[1]))
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    raise ParseError(f"unknown model {model!r}")


def _stats_data(s: ElementStats) -> dict[str, list[int]]:
    return {"wt": list(s.wt), "eps": list(s.eps), "phi": list(s.phi)}


def graph_to_data(g: CrystalGraph) -> dict[str, Any]:
    return {
        "n": g.n,
        "model": g.model,
        "depth": g.depth,
        "root": g.root,
        "nodes": [
            {"id": k, "element": element_to_data(b), **_stats_data(s)}
            for k, (b, s) in enumerate(zip(g.nodes, g.stats))
        ],
        "edges": [[u, i, v] for u, i, v in g.edges],
    }


def graph_from_data(d: dict[str, Any]) -> CrystalGraph:
    try:
        n = d["n"]
        raw_nodes = d["nodes"]
        raw_edges = d["edges"]
        root = d.get("root", 0)
    except KeyError as exc:
        raise ParseError(f"graph is missing field {exc.args[0]!r}") from None
    if not isinstance(raw_nodes, list) or not isinstance(raw_edges, list):
        raise ParseError("graph 'nodes' and 'edges' must be lists")
    model = d.get("model")
    nodes = []
    stats = []
    for k, node in enumerate(raw_nodes):
        if not isinstance(node, dict) or node.get("id", k) != k:
            raise ParseError(f"node {k} must be an object with id {k}")
        el = node.get("element")
        nodes.append(None if el is None else element_from_data(el))
        try:
            stats.append(
                ElementStats(tuple(node["wt"]), tuple(node["eps"]), tuple(node["phi"]))
            )
        except KeyError as exc:
            raise ParseError(f"node {k} is missing {exc.args[0]!r}") from None
    edges = []
    for e in raw_edges:
        if not (
            isinstance(e, list) and len(e) == 3 and all(isinstance(t, int) for t in e)
        ):
            raise ParseError(f"edge {e!r} must be [src, i, dst]")
        edges.append(tuple(e))
    parents: list[tuple[int, int] | None] = [None] * len(nodes)
    seen = {root}
    adj: dict[int, list[tuple[int, int]]] = {}
    for u, i, v in edges:
        adj.setdefault(u, []).append((i, v))
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for i, v in sorted(adj.get(u, ())):
            if v not in seen and 0 <= v < len(nodes):
                seen.add(v)
                parents[v] = (u, i)
                queue.append(v)
    index = {b: k for k, b in enumerate(nodes) if b is not None}
    return CrystalGraph(
        n=n,
        nodes=nodes,
        stats=stats,
        edges=edges,
        parents=parents,
        root=root,
        depth=d.get("depth"),
        model=model,
        index=index,
    )


def to_json(obj: Any) -> str:
    if isinstance(obj, CrystalGraph):
        return json.dumps(graph_to_data(obj))
    return json.dumps(element_to_data(obj))


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos, exc.lineno, exc.colno) from None


def from_json(text: str, model: str | None = None) -> Any:
    d = loads(text)
    if isinstance(d, dict) and "nodes" in d and "edges" in d:
        return graph_from_data(d)
    return element_from_data(d, model)


def element_label(b: Any) -> str:
    if isinstance(b, (SSYT, RSSYT)):
        return (
            "/".join(
                "".join(map(str, r)) if b.n < 9 else ",".join(map(str, r))
                for r in b.rows
            )
            or "()"
        )
    if isinstance(b, (MLT, RMLT)):
        return ";".join(",".join(map(str, r)) for r in b.counts)
    if isinstance(b, PolyVector):
        return str(b)
    if isinstance(b, GTPattern):
        return "/".join(",".join(map(str, r)) for r in b.rows)
    if isinstance(b, tuple):
        return element_label(b[0])
    return repr(b)


def to_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for k, b in enumerate(g.nodes):
        label = element_label(b).replace('"', '\\"')
        lines.append(f'  {k} [label="{label}"];')
    for u, i, v in g.edges:
        lines.append(f'  {u} -> {v} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
