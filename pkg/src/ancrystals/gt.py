"""Gelfand-Tsetlin patterns with their crystal structure and the map to
the polyhedral model."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .cartan_an import DomainError, Weight, check_index, check_rank, partition
from .crystal_core import (
    Crystal,
    ElementStats,
    InternalConsistencyError,
    NodeCapExceeded,
    stats_from_eps,
)
from .polyhedral import PolyVector, in_sigma_lambda


@dataclass(frozen=True)
class GTPattern:
    """Rows y^{(1)}, ..., y^{(n)} below the top row y^{(0)} = lambda.

    Row i has n+1-i entries and interlaces with the row above:
    y_k^{(i-1)} >= y_k^{(i)} >= y_{k+1}^{(i-1)}.
    """

    n: int
    lam: Weight
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        check_rank(self.n)
        object.__setattr__(self, "lam", partition(self.n, self.lam))
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n or any(
            len(r) != self.n + 1 - i for i, r in enumerate(rows, start=1)
        ):
            raise DomainError(f"GT pattern for n={self.n} has the wrong row lengths")
        for i in range(1, self.n + 1):
            for k in range(1, self.n + 2 - i):
                if not self.y(i - 1, k) >= self.y(i, k) >= self.y(i - 1, k + 1):
                    raise DomainError(f"interlacing fails at y_{k}^({i}) in {rows}")

    def y(self, i: int, k: int) -> int:
        """y_k^{(i)}, with y^{(0)} = lambda and 0 outside the pattern."""
        if i == 0:
            return self.lam[k - 1] if 1 <= k <= self.n + 1 else 0
        if 1 <= i <= self.n and 1 <= k <= self.n + 1 - i:
            return self.rows[i - 1][k - 1]
        return 0

    def all_rows(self) -> tuple[tuple[int, ...], ...]:
        return (self.lam,) + self.rows

    def _bump(self, i: int, k: int, delta: int) -> GTPattern:
        if not 1 <= k <= self.n + 1 - i:
            raise InternalConsistencyError(
                f"GT operator hit y_{k}^({i}) outside the pattern"
            )
        rows = [list(r) for r in self.rows]
        rows[i - 1][k - 1] += delta
        try:
            return GTPattern(self.n, self.lam, tuple(map(tuple, rows)))
        except DomainError as exc:
            raise InternalConsistencyError(
                f"GT operator broke interlacing: {exc}"
            ) from exc

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.all_rows())


def sigma_j(g: GTPattern, i: int, j: int) -> int:
    """y_j^{(i)} + 2 sum_{k=j+1}^{n+1-i} y_k^{(i)} - sum_{k=j}^{n-i} y_k^{(i+1)}
    - sum_{k=j+1}^{n+2-i} y_k^{(i-1)}   (j = 0 allowed, y_0 = 0)."""
    n = g.n
    v = g.y(i, j) if j >= 1 else 0
    v += 2 * sum(g.y(i, k) for k in range(j + 1, n + 2 - i))
    v -= sum(g.y(i + 1, k) for k in range(max(j, 1), n + 1 - i))
    v -= sum(g.y(i - 1, k) for k in range(j + 1, n + 3 - i))
    return v


def _sigma_max(g: GTPattern, i: int) -> tuple[int, list[int]]:
    values = [sigma_j(g, i, j) for j in range(1, g.n + 1)]
    best = max(values)
    return best, [j for j, v in enumerate(values, start=1) if v == best]


def gt_f(g: GTPattern, i: int) -> GTPattern | None:
    check_index(g.n, i)
    best, M = _sigma_max(g, i)
    if best <= sigma_j(g, i, 0):
        return None
    return g._bump(i, min(M), 1)


def gt_e(g: GTPattern, i: int) -> GTPattern | None:
    check_index(g.n, i)
    best, M = _sigma_max(g, i)
    if best <= 0:
        return None
    return g._bump(i, max(M), -1)


def gt_weight(g: GTPattern) -> Weight:
    n = g.n
    sums = [sum(r) for r in g.all_rows()] + [0]
    return tuple(sums[i - 1] - sums[i] for i in range(1, n + 2))


def gt_stats(g: GTPattern) -> ElementStats:
    eps = [_sigma_max(g, i)[0] for i in range(1, g.n + 1)]
    return stats_from_eps(gt_weight(g), eps)


class GTCrystal(Crystal):
    name = "gt"

    def __init__(self, n: int):
        check_rank(n)
        self.n = n

    def f(self, b: GTPattern, i: int) -> GTPattern | None:
        return gt_f(b, i)

    def e(self, b: GTPattern, i: int) -> GTPattern | None:
        return gt_e(b, i)

    def stats(self, b: GTPattern) -> ElementStats:
        return gt_stats(b)


# ---------------------------------------------------------------- to vectors


def varsigma(g: GTPattern) -> PolyVector:
    """x_k^{(i)} = y_k^{(i)} - lambda_{k+i}."""
    n = g.n
    rows = [
        [g.y(i, k) - g.lam[k + i - 1] for k in range(1, n + 2 - i)]
        for i in range(1, n + 1)
    ]
    return PolyVector.from_rows(n, rows)


def varsigma_inv(x: PolyVector, lam: Sequence[int]) -> GTPattern:
    n = x.n
    lam = partition(n, lam)
    if not in_sigma_lambda(x, lam):
        raise DomainError(f"{x} is not in the polyhedral B(lambda) for lambda={lam}")
    rows = tuple(
        tuple(x.x(k, i) + lam[k + i - 1] for k in range(1, n + 2 - i))
        for i in range(1, n + 1)
    )
    return GTPattern(n, lam, rows)


def lh_segments(g: GTPattern) -> list[tuple[int, ...]]:
    """Segment k is #L_k - #H_k, where L_k is the diagonal y_k^{(1)}, y_k^{(2)}, ...
    (top-left to bottom-right) and H_k is lambda_{k+1}, ..., lambda_{n+1}."""
    n = g.n
    out = []
    for k in range(1, n + 1):
        L = [g.y(m, k) for m in range(1, n + 2 - k)]
        H = list(g.lam[k:])
        out.append(tuple(a - b for a, b in zip(L, H, strict=True)))
    return out


def lh_sequence(g: GTPattern) -> tuple[int, ...]:
    """The vector as written left to right: (..., segment_n, ..., segment_1),
    each segment itself written right to left."""
    flat: list[int] = []
    for seg in lh_segments(g):
        flat.extend(seg)
    return tuple(reversed(flat))


def vector_from_lh_sequence(n: int, seq: Sequence[int]) -> PolyVector:
    """Inverse of ``lh_sequence``; a short ``seq`` is left-padded with zeros."""
    total = n * (n + 1) // 2
    if len(seq) > total:
        head = seq[: len(seq) - total]
        if any(head):
            raise DomainError("sequence is longer than the triangle")
        seq = seq[len(seq) - total :]
    flat = list(reversed(seq)) + [0] * (total - len(seq))
    rows: list[list[int]] = [[] for _ in range(n)]
    pos = 0
    for k in range(1, n + 1):
        for m in range(1, n + 2 - k):
            rows[m - 1].append(flat[pos])
            pos += 1
    return PolyVector.from_rows(n, rows)


def lh_reading(g: GTPattern) -> PolyVector:
    return vector_from_lh_sequence(g.n, lh_sequence(g))


def enumerate_gt(
    lam: Sequence[int], n: int | None = None, cap: int | None = None
) -> Iterator[GTPattern]:
    """All patterns with top row lam, in lexicographic order of the rows."""
    if n is None:
        n = len(lam) - 1
    lam = partition(n, lam)
    count = 0

    def rec(above: tuple[int, ...], acc: list[tuple[int, ...]]):
        nonlocal count
        if len(acc) == n:
            count += 1
            if cap is not None and count > cap:
                raise NodeCapExceeded(cap)
            yield GTPattern(n, lam, tuple(acc))
            return
        yield from _rows_between(above, [], acc)

    def _rows_between(above, row, acc):
        k = len(row)
        if k == len(above) - 1:
            yield from rec(tuple(row), acc + [tuple(row)])
            return
        for v in range(above[k + 1], above[k] + 1):
            yield from _rows_between(above, row + [v], acc)

    yield from rec(lam, [])
