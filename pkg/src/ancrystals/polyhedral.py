"""Polyhedral realizations of B(infinity) and B(lambda) for the periodic
sequence iota = (..., n, ..., 2, 1, n, ..., 2, 1).

A vector in Z^infinity is stored by its flat entries x_1, x_2, ... (trailing
zeros trimmed).  The flat index k corresponds to x_j^{(i)} with
k = (j-1) n + i.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import pairwise, product

from .cartan_an import (
    DomainError,
    Weight,
    cartan_entry,
    check_index,
    check_rank,
    pairing,
)
from .crystal_core import Crystal, ElementStats, stats_from_eps


def iota(n: int, k: int) -> int:
    """i_k = ((k-1) mod n) + 1."""
    return (k - 1) % n + 1


def flat_index(n: int, j: int, i: int) -> int:
    return (j - 1) * n + i


@dataclass(frozen=True)
class PolyVector:
    n: int
    flat: tuple[int, ...]

    def __post_init__(self) -> None:
        check_rank(self.n)
        flat = [int(v) for v in self.flat]
        while flat and flat[-1] == 0:
            flat.pop()
        object.__setattr__(self, "flat", tuple(flat))

    def at(self, k: int) -> int:
        """Flat entry x_k (k >= 1)."""
        return self.flat[k - 1] if 1 <= k <= len(self.flat) else 0

    def x(self, j: int, i: int) -> int:
        """x_j^{(i)}; zero when j < 1 or i is outside 1..n."""
        if j < 1 or not 1 <= i <= self.n:
            return 0
        return self.at(flat_index(self.n, j, i))

    @property
    def support(self) -> int:
        """Largest k with x_k != 0 (0 for the zero vector)."""
        return len(self.flat)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Row i lists x_1^{(i)}, ..., x_{n+1-i}^{(i)}, longer only if an
        off-triangle entry is nonzero."""
        n = self.n
        out = []
        for i in range(1, n + 1):
            length = n + 1 - i
            for k in range(i, self.support + 1, n):
                if self.at(k):
                    length = max(length, (k - i) // n + 1)
            out.append(tuple(self.x(j, i) for j in range(1, length + 1)))
        return tuple(out)

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence[int]]) -> PolyVector:
        if len(rows) > n:
            raise DomainError(f"a vector for n={n} has at most {n} rows")
        size = max((len(r) for r in rows), default=0) * n
        flat = [0] * size
        for i, row in enumerate(rows, start=1):
            for j, v in enumerate(row, start=1):
                flat[flat_index(n, j, i) - 1] = v
        return cls(n, tuple(flat))

    def add_at(self, k: int, delta: int) -> PolyVector:
        flat = list(self.flat) + [0] * max(0, k - len(self.flat))
        flat[k - 1] += delta
        return PolyVector(self.n, tuple(flat))

    def __str__(self) -> str:
        return " | ".join(" ".join(map(str, r)) for r in self.rows())


def zero_vector(n: int) -> PolyVector:
    return PolyVector(n, ())


# ---------------------------------------------------------------- sigma


def sigma_all(x: PolyVector, upto: int) -> list[int]:
    """[sigma_1, ..., sigma_upto] in one backward pass."""
    n = x.n
    # tail[c] = sum of x_j over j > current k with i_j = c; pad c = 0, n+1.
    tail = [0] * (n + 2)
    out = [0] * upto
    for k in range(upto, 0, -1):
        c = iota(n, k)
        out[k - 1] = x.at(k) + 2 * tail[c] - tail[c - 1] - tail[c + 1]
        tail[c] += x.at(k)
    return out


def sigma_k(x: PolyVector, k: int) -> int:
    """sigma_k = x_k + sum_{j > k} <alpha_{i_k}^vee, alpha_{i_j}> x_j."""
    if k < 1:
        raise DomainError("flat index starts at 1")
    ik = iota(x.n, k)
    total = x.at(k)
    for j in range(k + 1, x.support + 1):
        total += cartan_entry(ik, iota(x.n, j)) * x.at(j)
    return total


def sigma_i_max(x: PolyVector, i: int) -> tuple[int, tuple[int, ...]]:
    """(sigma^{(i)}, M^{(i)}) over the window k <= support + n.

    Every sigma_k with k beyond the support is 0 and one such k (with
    i_k = i) lies inside the window, so the maximum is exact.  ``M`` lists
    the argmax positions inside the window.
    """
    n = x.n
    check_index(n, i)
    upto = x.support + n
    sig = sigma_all(x, upto)
    candidates = [(sig[k - 1], k) for k in range(i, upto + 1, n)]
    best = max(v for v, _ in candidates)
    return best, tuple(k for v, k in candidates if v == best)


def weight_offset(x: PolyVector) -> Weight:
    """-sum_k x_k alpha_{i_k}."""
    n = x.n
    w = [0] * (n + 1)
    for k, v in enumerate(x.flat, start=1):
        c = iota(n, k)
        w[c - 1] -= v
        w[c] += v
    return tuple(w)


def binfty_f(x: PolyVector, i: int) -> PolyVector:
    _, M = sigma_i_max(x, i)
    return x.add_at(min(M), 1)


def binfty_e(x: PolyVector, i: int) -> PolyVector | None:
    value, M = sigma_i_max(x, i)
    if value <= 0:
        return None
    return x.add_at(max(M), -1)


def binfty_stats(x: PolyVector) -> ElementStats:
    eps = [sigma_i_max(x, i)[0] for i in range(1, x.n + 1)]
    return stats_from_eps(weight_offset(x), eps)


class BInfinityPoly(Crystal):
    name = "poly"

    def __init__(self, n: int):
        check_rank(n)
        self.n = n

    def f(self, b: PolyVector, i: int) -> PolyVector:
        return binfty_f(b, i)

    def e(self, b: PolyVector, i: int) -> PolyVector | None:
        return binfty_e(b, i)

    def stats(self, b: PolyVector) -> ElementStats:
        return binfty_stats(b)


def in_sigma(x: PolyVector) -> bool:
    """Membership in the B(infinity) cone: off-triangle entries vanish and
    x_1^{(i)} >= x_2^{(i-1)} >= ... >= x_i^{(1)} >= 0 for every i."""
    n = x.n
    for k in range(1, x.support + 1):
        i = iota(n, k)
        j = (k - i) // n + 1
        if i + j > n + 1 and x.at(k) != 0:
            return False
    for i in range(1, n + 1):
        chain = [x.x(m, i - m + 1) for m in range(1, i + 1)] + [0]
        if any(a < b for a, b in pairwise(chain)):
            return False
    return True


# ---------------------------------------------------------------- B(lambda)


def _check_lambda(x: PolyVector, lam: Sequence[int]) -> None:
    if len(lam) != x.n + 1:
        raise DomainError(f"lambda must have {x.n + 1} coordinates")


def sigma0_i(x: PolyVector, lam: Sequence[int], i: int) -> int:
    """-<alpha_i^vee, lambda> + sum_j <alpha_i^vee, alpha_{i_j}> x_j."""
    _check_lambda(x, lam)
    check_index(x.n, i)
    total = -pairing(i, lam)
    for k, v in enumerate(x.flat, start=1):
        total += cartan_entry(i, iota(x.n, k)) * v
    return total


def blambda_f(x: PolyVector, lam: Sequence[int], i: int) -> PolyVector | None:
    value, M = sigma_i_max(x, i)
    if value <= sigma0_i(x, lam, i):
        return None
    return x.add_at(min(M), 1)


def blambda_e(x: PolyVector, lam: Sequence[int], i: int) -> PolyVector | None:
    value, M = sigma_i_max(x, i)
    if value < sigma0_i(x, lam, i) or value <= 0:
        return None
    return x.add_at(max(M), -1)


def blambda_stats(x: PolyVector, lam: Sequence[int]) -> ElementStats:
    eps = [max(sigma_i_max(x, i)[0], sigma0_i(x, lam, i)) for i in range(1, x.n + 1)]
    wt = tuple(a + b for a, b in zip(lam, weight_offset(x)))
    return stats_from_eps(wt, eps)


class BLambdaPoly(Crystal):
    name = "poly-lambda"

    def __init__(self, n: int, lam: Sequence[int]):
        check_rank(n)
        if len(lam) != n + 1:
            raise DomainError(f"lambda must have {n + 1} coordinates")
        self.n = n
        self.lam = tuple(lam)

    def f(self, b: PolyVector, i: int) -> PolyVector | None:
        return blambda_f(b, self.lam, i)

    def e(self, b: PolyVector, i: int) -> PolyVector | None:
        return blambda_e(b, self.lam, i)

    def stats(self, b: PolyVector) -> ElementStats:
        return blambda_stats(b, self.lam)


def in_sigma_lambda(x: PolyVector, lam: Sequence[int]) -> bool:
    """in_sigma(x) and lambda_i - lambda_{i+1} >= x_j^{(i-j+1)} - x_j^{(i-j)}
    for 1 <= j <= i <= n, with x_j^{(0)} = 0."""
    _check_lambda(x, lam)
    if not in_sigma(x):
        return False
    n = x.n
    for i in range(1, n + 1):
        gap = lam[i - 1] - lam[i]
        for j in range(1, i + 1):
            if x.x(j, i - j + 1) - x.x(j, i - j) > gap:
                return False
    return True


def sigma_closed_form(x: PolyVector, i: int) -> int:
    """Closed form of sigma^{(i)} for triangular vectors:

    max over j >= 1 of  x_j^{(i)} - x_j^{(i+1)} + 2 sum_{k=j+1}^{n+1-i} x_k^{(i)}
    - sum_{k=j+1}^{n+2-i} x_k^{(i-1)} - sum_{k=j+1}^{n-i} x_k^{(i+1)}.
    Beyond j = n+2-i every term vanishes, so that j closes the range.
    """
    n = x.n
    check_index(n, i)
    best = None
    for j in range(1, n + 3 - i):
        v = x.x(j, i) - x.x(j, i + 1)
        v += 2 * sum(x.x(k, i) for k in range(j + 1, n + 2 - i))
        v -= sum(x.x(k, i - 1) for k in range(j + 1, n + 3 - i))
        v -= sum(x.x(k, i + 1) for k in range(j + 1, n + 1 - i))
        best = v if best is None else max(best, v)
    return best


def triangle_cells(n: int) -> list[tuple[int, int]]:
    """(j, i) with i + j <= n+1, in flat order."""
    return sorted(
        ((j, i) for i in range(1, n + 1) for j in range(1, n + 2 - i)),
        key=lambda c: flat_index(n, *c),
    )


def enumerate_sigma_lambda(n: int, lam: Sequence[int]) -> Iterator[PolyVector]:
    """Scan every triangular array inside the box 0 <= x_j^{(i)} <= lam_j - lam_{j+i}
    (implied by the inequalities) and keep the members."""
    cells = triangle_cells(n)
    ranges = [range(lam[j - 1] - lam[j + i - 1] + 1) for j, i in cells]
    for values in product(*ranges):
        flat = [0] * (n * n)
        for (j, i), v in zip(cells, values):
            flat[flat_index(n, j, i) - 1] = v
        x = PolyVector(n, tuple(flat))
        if in_sigma_lambda(x, lam):
            yield x
