"""Reverse tableaux models: T'(infinity) and T'(lambda), the relabeling
bijections to the ordinary models, and the involution rho_infinity."""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from . import mlt as _mlt
from . import ssyt as _ssyt
from .cartan_an import DomainError, Weight, check_index, check_rank, root_combination
from .crystal_core import Crystal, ElementStats
from .mlt import MLT, MLTCrystal, t_infinity
from .ssyt import SSYT, Rows, shape_of

# ---------------------------------------------------------------- RMLT


@dataclass(frozen=True)
class RMLT:
    """``counts[i-1][j-1]`` is z_i^j, the number of j-boxes in row i,
    for 1 <= j <= n+1-i."""

    n: int
    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        check_rank(self.n)
        counts = tuple(tuple(int(v) for v in row) for row in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != self.n or any(
            len(row) != self.n + 1 - i for i, row in enumerate(counts, start=1)
        ):
            raise DomainError(f"RMLT counts for n={self.n} have the wrong shape")
        if any(v < 0 for row in counts for v in row):
            raise DomainError("RMLT counts must be nonnegative")

    def z(self, i: int, j: int) -> int:
        """z_i^j, read as 0 outside 1 <= i <= n, 1 <= j <= n+1-i."""
        if 1 <= i <= self.n and 1 <= j <= self.n + 1 - i:
            return self.counts[i - 1][j - 1]
        return 0

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {
            (i, j): self.z(i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 2 - i)
        }

    @classmethod
    def from_dict(cls, n: int, values: Mapping[tuple[int, int], int]) -> RMLT:
        rows = [[0] * (n + 1 - i) for i in range(1, n + 1)]
        for (i, j), v in values.items():
            if not (1 <= i <= n and 1 <= j <= n + 1 - i):
                raise DomainError(f"no count z_{i}^{j} for n={n}")
            rows[i - 1][j - 1] = v
        return cls(n, tuple(map(tuple, rows)))

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence[int]]) -> RMLT:
        """Read counts off a finite reverse marginally large window."""
        if len(rows) > n:
            raise DomainError(f"an RMLT for n={n} has at most {n} rows")
        values = {}
        for i, row in enumerate(rows, start=1):
            top = n + 2 - i
            for a in row:
                if a < 1 or a > top:
                    raise DomainError(f"entry {a} cannot appear in row {i}")
                if a < top:
                    values[(i, a)] = values.get((i, a), 0) + 1
        return cls.from_dict(n, values)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in materialize_rmlt(self))


def zero_rmlt(n: int) -> RMLT:
    return RMLT(n, tuple((0,) * (n + 1 - i) for i in range(1, n + 1)))


def eta(T: RMLT) -> MLT:
    """Relabel a -> n+2-a: y_i^l = z_i^{n+2-l}."""
    n = T.n
    return MLT.from_dict(n, {(i, n + 2 - j): v for (i, j), v in T.as_dict().items()})


def eta_inv(T: MLT) -> RMLT:
    n = T.n
    return RMLT.from_dict(n, {(j, n + 2 - i): v for (j, i), v in T.as_dict().items()})


def materialize_rmlt(T: RMLT, pad: int = 0) -> Rows:
    """Minimal reverse marginally large rows (weakly decreasing)."""
    n = T.n
    return tuple(
        tuple(n + 2 - a for a in row) for row in _mlt.materialize(eta(T), pad).rows
    )


def rmlt_f(T: RMLT, i: int) -> RMLT:
    check_index(T.n, i)
    return eta_inv(_mlt.f_op(eta(T), T.n + 1 - i))


def rmlt_e(T: RMLT, i: int) -> RMLT | None:
    check_index(T.n, i)
    out = _mlt.e_op(eta(T), T.n + 1 - i)
    return None if out is None else eta_inv(out)


def rmlt_weight(T: RMLT) -> Weight:
    n = T.n
    coeffs = [
        -sum(T.z(j, k) for j in range(1, n + 2 - i) for k in range(1, i + 1))
        for i in range(1, n + 1)
    ]
    return root_combination(n, coeffs)


def rmlt_stats(T: RMLT) -> ElementStats:
    n = T.n
    s = _mlt.stats(eta(T))
    eps = tuple(s.eps[n - i] for i in range(1, n + 1))
    phi = tuple(s.phi[n - i] for i in range(1, n + 1))
    return ElementStats(rmlt_weight(T), eps, phi)


class RMLTCrystal(Crystal):
    name = "rmlt"

    def __init__(self, n: int):
        check_rank(n)
        self.n = n

    def f(self, b: RMLT, i: int) -> RMLT:
        return rmlt_f(b, i)

    def e(self, b: RMLT, i: int) -> RMLT | None:
        return rmlt_e(b, i)

    def stats(self, b: RMLT) -> ElementStats:
        return rmlt_stats(b)


def rho_infinity(X: MLT, word: Sequence[int] | None = None) -> MLT:
    """For X = f_{w_k} ... f_{w_1} T_inf return f_{n+1-w_k} ... f_{n+1-w_1} T_inf.

    ``word`` lists w_1, ..., w_k in the order applied.  When omitted, a
    raising path from X is used.
    """
    n = X.n
    crystal = MLTCrystal(n)
    if word is None:
        word = crystal.raising_word(X)
    elif crystal.f_word(t_infinity(n), word) != X:
        raise DomainError(f"word {tuple(word)} does not lead from T_inf to X")
    return crystal.f_word(t_infinity(n), (n + 1 - i for i in word))


# ---------------------------------------------------------------- RSSYT


def is_reverse_semistandard(rows: Rows, n: int) -> bool:
    if any(len(a) < len(b) for a, b in itertools.pairwise(rows)):
        return False
    if any(not r for r in rows):
        return False
    for r in rows:
        if any(a < 1 or a > n + 1 for a in r):
            return False
        if any(a < b for a, b in itertools.pairwise(r)):
            return False
    for upper, lower in itertools.pairwise(rows):
        if any(a <= b for a, b in zip(upper, lower)):
            return False
    return True


@dataclass(frozen=True)
class RSSYT:
    """Rows weakly decrease, columns strictly decrease, entries in 1..n+1."""

    n: int
    rows: Rows

    def __post_init__(self) -> None:
        check_rank(self.n)
        rows = [tuple(int(a) for a in r) for r in self.rows]
        while rows and not rows[-1]:
            rows.pop()
        object.__setattr__(self, "rows", tuple(rows))
        if not is_reverse_semistandard(self.rows, self.n):
            raise DomainError(
                f"not a reverse semistandard tableau for n={self.n}: {self.rows}"
            )

    @property
    def shape(self) -> tuple[int, ...]:
        return shape_of(self.rows)

    def partition(self) -> Weight:
        sh = self.shape
        return sh + (0,) * (self.n + 1 - len(sh))

    def content(self) -> Weight:
        c = [0] * (self.n + 1)
        for r in self.rows:
            for a in r:
                c[a - 1] += 1
        return tuple(c)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def phi_map(T: RSSYT) -> SSYT:
    """Entrywise a -> n+2-a."""
    return SSYT(T.n, tuple(tuple(T.n + 2 - a for a in r) for r in T.rows))


def phi_inv(T: SSYT) -> RSSYT:
    return RSSYT(T.n, tuple(tuple(T.n + 2 - a for a in r) for r in T.rows))


def rssyt_f(T: RSSYT, i: int) -> RSSYT | None:
    check_index(T.n, i)
    out = _ssyt.e_op(phi_map(T), T.n + 1 - i)
    return None if out is None else phi_inv(out)


def rssyt_e(T: RSSYT, i: int) -> RSSYT | None:
    check_index(T.n, i)
    out = _ssyt.f_op(phi_map(T), T.n + 1 - i)
    return None if out is None else phi_inv(out)


def rssyt_stats(T: RSSYT) -> ElementStats:
    n = T.n
    s = _ssyt.stats(phi_map(T))
    eps = tuple(s.phi[n - i] for i in range(1, n + 1))
    phi = tuple(s.eps[n - i] for i in range(1, n + 1))
    return ElementStats(T.content(), eps, phi)


def rssyt_highest(n: int, lam: Sequence[int]) -> RSSYT:
    """The highest element of T'(lambda): the relabeled lowest SSYT."""
    return phi_inv(_ssyt.lowest_tableau(n, lam))


def rssyt_lowest(n: int, lam: Sequence[int]) -> RSSYT:
    return phi_inv(_ssyt.highest_tableau(n, lam))


def rssyt_evacuation(T: RSSYT) -> RSSYT:
    """The weight-flip involution of T'(lambda), conjugated through phi."""
    return phi_inv(_ssyt.evacuation(phi_map(T)))


class RSSYTCrystal(Crystal):
    name = "rssyt"

    def __init__(self, n: int):
        check_rank(n)
        self.n = n

    def f(self, b: RSSYT, i: int) -> RSSYT | None:
        return rssyt_f(b, i)

    def e(self, b: RSSYT, i: int) -> RSSYT | None:
        return rssyt_e(b, i)

    def stats(self, b: RSSYT) -> ElementStats:
        return rssyt_stats(b)
