"""Marginally large tableaux: the B(infinity) model T(infinity).

An element is stored by its counts y_j^i (number of i-boxes in row j,
i > j).  The infinite run of leading j-entries is implied.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .cartan_an import DomainError, Weight, check_index, check_rank, root_combination
from .crystal_core import (
    Crystal,
    ElementStats,
    InternalConsistencyError,
    stats_from_eps,
)
from .ssyt import SSYT, signature_of_rows

Counts = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MLT:
    """``counts[j-1][i-j-1]`` is y_j^i for 1 <= j <= n and j < i <= n+1."""

    n: int
    counts: Counts

    def __post_init__(self) -> None:
        check_rank(self.n)
        counts = tuple(tuple(int(v) for v in row) for row in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != self.n or any(
            len(row) != self.n + 1 - j for j, row in enumerate(counts, start=1)
        ):
            raise DomainError(f"MLT counts for n={self.n} have the wrong shape")
        if any(v < 0 for row in counts for v in row):
            raise DomainError("MLT counts must be nonnegative")

    def y(self, j: int, i: int) -> int:
        """y_j^i, read as 0 outside 1 <= j < i <= n+1."""
        if 1 <= j <= self.n and j < i <= self.n + 1:
            return self.counts[j - 1][i - j - 1]
        return 0

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {
            (j, i): self.y(j, i)
            for j in range(1, self.n + 1)
            for i in range(j + 1, self.n + 2)
        }

    @classmethod
    def from_dict(cls, n: int, values: Mapping[tuple[int, int], int]) -> MLT:
        rows = [[0] * (n + 1 - j) for j in range(1, n + 1)]
        for (j, i), v in values.items():
            if not (1 <= j <= n and j < i <= n + 1):
                raise DomainError(f"no count y_{j}^{i} for n={n}")
            rows[j - 1][i - j - 1] = v
        return cls(n, tuple(map(tuple, rows)))

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence[int]]) -> MLT:
        """Read counts off any finite marginally large window."""
        if len(rows) > n:
            raise DomainError(f"an MLT for n={n} has at most {n} rows")
        values = {}
        for j, row in enumerate(rows, start=1):
            for a in row:
                if a < j or a > n + 1:
                    raise DomainError(f"entry {a} cannot appear in row {j}")
                if a > j:
                    values[(j, a)] = values.get((j, a), 0) + 1
        return cls.from_dict(n, values)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in materialize(self).rows)


def t_infinity(n: int) -> MLT:
    return MLT(n, tuple((0,) * (n + 1 - j) for j in range(1, n + 1)))


def _rows(T: MLT, pad: int = 0) -> tuple[tuple[int, ...], ...]:
    n = T.n
    rows: list[tuple[int, ...]] = []
    below = 0
    for j in range(n, 0, -1):
        row = (j,) * (below + 1 + pad)
        for i in range(j + 1, n + 2):
            row += (i,) * T.y(j, i)
        rows.append(row)
        below = len(row) - pad
    rows.reverse()
    return tuple(rows)


def materialize(T: MLT, pad: int = 0) -> SSYT:
    """The finite marginally large representative.

    Row j starts with (length of row j+1) + 1 copies of j.  ``pad`` adds that
    many extra full columns, which must not change any crystal data.
    """
    return SSYT(T.n, _rows(T, pad))


def _shift(T: MLT, changes: dict[tuple[int, int], int]) -> MLT:
    d = T.as_dict()
    for key, delta in changes.items():
        d[key] += delta
    return MLT.from_dict(T.n, d)


def f_op(T: MLT, i: int, pad: int = 0) -> MLT:
    check_index(T.n, i)
    rows = _rows(T, pad)
    cell = signature_of_rows(rows, i).leftmost_plus
    if cell is None:
        raise InternalConsistencyError(
            "the marginal i never cancels, so f_i is always defined"
        )
    j = cell[0] + 1
    if j == i:
        # The marginal i turned into i+1; re-growing row i is implicit in counts.
        return _shift(T, {(i, i + 1): 1})
    return _shift(T, {(j, i): -1, (j, i + 1): 1})


def e_op(T: MLT, i: int, pad: int = 0) -> MLT | None:
    check_index(T.n, i)
    rows = _rows(T, pad)
    cell = signature_of_rows(rows, i).rightmost_minus
    if cell is None:
        return None
    j = cell[0] + 1
    if j == i:
        return _shift(T, {(i, i + 1): -1})
    return _shift(T, {(j, i + 1): -1, (j, i): 1})


def weight(T: MLT) -> Weight:
    n = T.n
    coeffs = [
        -sum(T.y(k, l) for k in range(1, i + 1) for l in range(i + 1, n + 2))
        for i in range(1, n + 1)
    ]
    return root_combination(n, coeffs)


def epsilon_closed_form(T: MLT, i: int) -> int:
    """max over 1 <= j <= i of sum_{k<=j} (y_k^{i+1} - y_{k-1}^i)."""
    best = None
    run = 0
    for k in range(1, i + 1):
        run += T.y(k, i + 1) - T.y(k - 1, i)
        best = run if best is None else max(best, run)
    return best


def epsilon_signature(T: MLT, i: int, pad: int = 0) -> int:
    return signature_of_rows(_rows(T, pad), i).eps


def stats(T: MLT) -> ElementStats:
    rows = _rows(T)
    eps = []
    for i in range(1, T.n + 1):
        by_sig = signature_of_rows(rows, i).eps
        by_formula = epsilon_closed_form(T, i)
        if by_sig != by_formula:
            raise InternalConsistencyError(
                f"eps_{i}: signature gives {by_sig}, closed form gives {by_formula} on {T}"
            )
        eps.append(by_sig)
    return stats_from_eps(weight(T), eps)


class MLTCrystal(Crystal):
    name = "mlt"

    def __init__(self, n: int):
        check_rank(n)
        self.n = n

    def f(self, b: MLT, i: int) -> MLT:
        return f_op(b, i)

    def e(self, b: MLT, i: int) -> MLT | None:
        return e_op(b, i)

    def stats(self, b: MLT) -> ElementStats:
        return stats(b)
