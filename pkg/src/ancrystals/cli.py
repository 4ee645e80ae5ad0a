"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 node cap exceeded,
4 domain violation, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import deque
from collections.abc import Callable, Sequence
from typing import Any

from . import bridges as br
from .cartan_an import (
    DomainError,
    check_rank,
    from_fundamental,
    partition,
    partitions,
    weyl_dim,
)
from .crystal_core import (
    Crystal,
    CrystalGraph,
    NodeCapExceeded,
    Report,
    check_axioms,
    generate_graph,
    node_cap_from_env,
)
from .gt import GTCrystal, GTPattern, varsigma, varsigma_inv
from .mlt import MLT, MLTCrystal, t_infinity
from .polyhedral import BInfinityPoly, BLambdaPoly, PolyVector, zero_vector
from .reverse_models import (
    RMLT,
    RSSYT,
    RMLTCrystal,
    RSSYTCrystal,
    eta,
    eta_inv,
    phi_inv,
    phi_map,
    rho_infinity,
    rssyt_evacuation,
    rssyt_highest,
    zero_rmlt,
)
from .serialize import (
    ParseError,
    element_from_data,
    element_to_data,
    graph_from_data,
    graph_to_data,
    loads,
    to_dot,
)
from .ssyt import SSYT, SSYTCrystal, evacuation, highest_tableau
from .suites import binfty_suite, image_suite, involution_lambda_suite, iso_suite

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4, 5

LAMBDA_MODELS = ("ssyt", "rssyt", "poly-lambda", "gt")
INFINITY_MODELS = ("mlt", "rmlt", "poly")
ELEMENT_MODELS = ("ssyt", "rssyt", "mlt", "rmlt", "poly", "gt", "lusztig")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _lambda(args: argparse.Namespace, required: bool = True) -> tuple[int, ...] | None:
    if args.lam is not None and args.fundamental is not None:
        raise UsageError("give --lambda or --fundamental, not both")
    try:
        if args.fundamental is not None:
            coeffs = _int_list(args.fundamental)
            coeffs += [0] * (args.n - len(coeffs))
            if len(coeffs) != args.n:
                raise UsageError(f"--fundamental takes at most {args.n} coefficients")
            return from_fundamental(args.n, coeffs)
        if args.lam is not None:
            return partition(args.n, _int_list(args.lam))
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    if required:
        raise UsageError("this command needs --lambda or --fundamental")
    return None


def _read_input(args: argparse.Namespace) -> str:
    if args.input is not None and args.input != "-":
        try:
            with open(args.input, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return sys.stdin.read()


def _emit(data: Any) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")


# ---------------------------------------------------------------- graph


def _seeded_crystal(
    model: str, n: int, lam: tuple[int, ...] | None
) -> tuple[Crystal, Any]:
    if model == "ssyt":
        return SSYTCrystal(n), highest_tableau(n, lam)
    if model == "rssyt":
        return RSSYTCrystal(n), rssyt_highest(n, lam)
    if model == "poly-lambda":
        return BLambdaPoly(n, lam), zero_vector(n)
    if model == "gt":
        return GTCrystal(n), varsigma_inv(zero_vector(n), lam)
    if model == "mlt":
        return MLTCrystal(n), t_infinity(n)
    if model == "rmlt":
        return RMLTCrystal(n), zero_rmlt(n)
    return BInfinityPoly(n), zero_vector(n)


def build_graph(
    model: str, n: int, lam: tuple[int, ...] | None, depth: int | None
) -> tuple[CrystalGraph, Crystal]:
    if model in LAMBDA_MODELS and lam is None:
        raise UsageError(f"model {model} needs --lambda or --fundamental")
    if model in INFINITY_MODELS and depth is None:
        raise UsageError(f"model {model} is infinite; pass --depth")
    crystal, seed = _seeded_crystal(model, n, lam)
    return generate_graph(
        crystal, seed, depth=depth, node_cap=node_cap_from_env()
    ), crystal


def cmd_graph(args: argparse.Namespace) -> int:
    lam = _lambda(args, required=False) if args.model in LAMBDA_MODELS else None
    g, _ = build_graph(args.model, args.n, lam, args.depth)
    if args.format == "dot":
        sys.stdout.write(to_dot(g))
    else:
        _emit(graph_to_data(g))
    return EXIT_OK


# ---------------------------------------------------------------- convert

# (source, target, needs lambda, map).  Order fixes the search, and the
# search fixes which composite is used.
Edge = tuple[str, str, bool, Callable[[Any, Any], Any]]
CONVERSIONS: list[Edge] = [
    ("poly", "rssyt", True, lambda x, lam: br.psi_lambda(x, lam)),
    ("rssyt", "poly", False, lambda T, lam: br.psi_lambda_inv(T, lam)),
    ("poly", "gt", True, lambda x, lam: varsigma_inv(x, lam)),
    ("gt", "poly", False, lambda g, lam: varsigma(g)),
    ("rssyt", "gt", False, lambda T, lam: br.gt_of_rssyt(T)),
    ("gt", "rssyt", False, lambda g, lam: br.rssyt_of_gt(g)),
    ("rssyt", "ssyt", False, lambda T, lam: phi_map(T)),
    ("ssyt", "rssyt", False, lambda T, lam: phi_inv(T)),
    ("rssyt", "rmlt", False, lambda T, lam: br.ml_embed(T)),
    ("rssyt", "lusztig", False, lambda T, lam: br.lusztig_data(T)),
    ("rmlt", "poly", False, lambda T, lam: br.psi_infty(T)),
    ("poly", "rmlt", False, lambda x, lam: br.psi_infty_inv(x)),
    ("rmlt", "mlt", False, lambda T, lam: eta(T)),
    ("mlt", "rmlt", False, lambda T, lam: eta_inv(T)),
    ("mlt", "lusztig", False, lambda T, lam: br.chi_of_mlt(T)),
    ("lusztig", "mlt", False, lambda a, lam: br.mlt_of_lusztig(a)),
    ("poly", "lusztig", False, lambda x, lam: br.pl_map(x)),
]


def conversion_path(src: str, dst: str, have_lambda: bool) -> list[Edge] | None:
    """Shortest chain of maps from ``src`` to ``dst`` (breadth first)."""
    usable = [e for e in CONVERSIONS if have_lambda or not e[2]]
    prev: dict[str, Edge | None] = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for e in usable:
            if e[0] == u and e[1] not in prev:
                prev[e[1]] = e
                queue.append(e[1])
    if dst not in prev:
        return None
    path = []
    node = dst
    while prev[node] is not None:
        e = prev[node]
        path.append(e)
        node = e[0]
    return path[::-1]


def _model_of(b: Any) -> str:
    return element_to_data(b)["model"]


def cmd_convert(args: argparse.Namespace) -> int:
    text = _read_input(args)
    element = element_from_data(loads(text), args.source)
    src = _model_of(element)
    if args.source is not None and args.source != src:
        raise UsageError(f"input is a {src} element, not {args.source}")
    n = getattr(element, "n", None)
    if args.n is not None and n is not None and args.n != n:
        raise UsageError(f"input has n={n} but --n {args.n} was given")
    args.n = n if n is not None else args.n
    lam = _lambda(args, required=False) if args.n is not None else None
    if src == args.target:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return EXIT_OK
    path = conversion_path(src, args.target, lam is not None)
    if path is None:
        hint = "" if lam is not None else " (some maps need --lambda)"
        raise UsageError(f"no conversion from {src} to {args.target}{hint}")
    for _, _, _, fn in path:
        element = fn(element, lam)
    _emit(element_to_data(element))
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _finish(reports: Sequence[Report]) -> int:
    failed = None
    for rep in reports:
        sys.stdout.write(rep.summary() + "\n")
        if not rep.ok and failed is None:
            failed = rep
    if failed is not None:
        v = failed.violations[0]
        sys.stdout.write(f"first violation [{v.condition}]: {v.witness}\n")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    suite = args.suite
    if suite == "axioms":
        if args.model is not None:
            if args.n is None:
                raise UsageError("--model needs --n")
            lam = _lambda(args, required=False) if args.model in LAMBDA_MODELS else None
            g, crystal = build_graph(args.model, args.n, lam, args.depth)
            return _finish([check_axioms(g, crystal)])
        data = loads(_read_input(args))
        if not isinstance(data, dict):
            raise ParseError("expected a graph object")
        return _finish([check_axioms(graph_from_data(data))])

    if args.n is None:
        raise UsageError(f"suite {suite} needs --n")
    lam = _lambda(args, required=False)
    if suite == "iso":
        if lam is None:
            raise UsageError("suite iso needs --lambda")
        return _finish([iso_suite(args.n, lam).report])
    if suite == "involutions":
        if lam is None and args.depth is None:
            raise UsageError("suite involutions needs --lambda, --depth or both")
        reports = []
        if lam is not None:
            reports.append(involution_lambda_suite(args.n, lam).report)
        if args.depth is not None:
            reports.append(binfty_suite(args.n, args.depth).report)
        return _finish(reports)
    if suite == "diagram":
        if lam is None:
            raise UsageError("suite diagram needs --lambda")
        depth = 4 if args.depth is None else args.depth
        return _finish([br.verify_diagram(args.n, lam, depth=depth)])
    # image
    lams = (
        [lam] if lam is not None else list(partitions(args.n, 4 * args.n, max_part=4))
    )
    return _finish([image_suite(args.n, lams, max_count=args.max_count)])


# ---------------------------------------------------------------- dim / evac


def cmd_dim(args: argparse.Namespace) -> int:
    lam = _lambda(args, required=False)
    if lam is None:
        lam = partition(args.n, [])
    expected = weyl_dim(lam)
    count = len(
        generate_graph(
            RSSYTCrystal(args.n),
            rssyt_highest(args.n, lam),
            node_cap=node_cap_from_env(),
        )
    )
    if expected != count:
        sys.stdout.write(f"{expected} {count} MISMATCH\n")
        return EXIT_VERIFY
    sys.stdout.write(f"{expected} {count} OK\n")
    return EXIT_OK


def cmd_evac(args: argparse.Namespace) -> int:
    b = element_from_data(loads(_read_input(args)), args.model)
    if isinstance(b, SSYT):
        out = evacuation(b)
    elif isinstance(b, RSSYT):
        out = rssyt_evacuation(b)
    elif isinstance(b, MLT):
        out = rho_infinity(b)
    elif isinstance(b, RMLT):
        out = eta_inv(rho_infinity(eta(b)))
    elif isinstance(b, GTPattern):
        out = varsigma_inv(br.rho_poly_lambda(varsigma(b), b.lam), b.lam)
    elif isinstance(b, PolyVector):
        args.n = b.n
        lam = _lambda(args, required=False)
        out = br.rho_poly_infty(b) if lam is None else br.rho_poly_lambda(b, lam)
    else:
        raise UsageError(f"no involution for {_model_of(b)} elements")
    _emit(element_to_data(out))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _rank(text: str) -> int:
    v = _nonneg(text)
    try:
        check_rank(v)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return v


def _add_weight(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--lambda", dest="lam", metavar="PARTS", help="parts lambda_1,...,lambda_n"
    )
    p.add_argument(
        "--fundamental", metavar="COEFFS", help="coefficients on omega_1,...,omega_n"
    )


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ancrystals",
        description="Type A_n crystal models and the maps between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="generate a crystal graph")
    p.add_argument("--model", required=True, choices=LAMBDA_MODELS + INFINITY_MODELS)
    p.add_argument("--n", type=_rank, required=True)
    _add_weight(p)
    p.add_argument("--depth", type=_nonneg)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("convert", help="map an element between models")
    p.add_argument("--from", dest="source", choices=ELEMENT_MODELS)
    p.add_argument("--to", dest="target", required=True, choices=ELEMENT_MODELS)
    p.add_argument("--n", type=_rank)
    _add_weight(p)
    p.add_argument("--input", help="JSON file (default: stdin)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=("axioms", "iso", "involutions", "diagram", "image"),
    )
    p.add_argument("--n", type=_rank)
    _add_weight(p)
    p.add_argument("--depth", type=_nonneg)
    p.add_argument(
        "--model",
        choices=LAMBDA_MODELS + INFINITY_MODELS,
        help="axioms: generate instead of reading",
    )
    p.add_argument(
        "--max-count", type=_nonneg, default=3, help="image: largest RMLT count"
    )
    p.add_argument("--input", help="axioms: graph JSON file (default: stdin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dim", help="compare the Weyl dimension with the crystal size")
    p.add_argument("--n", type=_rank, required=True)
    _add_weight(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("evac", help="apply evacuation or the matching involution")
    p.add_argument("--model", choices=ELEMENT_MODELS)
    p.add_argument("--n", type=_rank)
    _add_weight(p)
    p.add_argument("--input", help="JSON file (default: stdin)")
    p.set_defaults(func=cmd_evac)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except NodeCapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        # bad CRYSTAL_NODE_CAP and similar environment input
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
