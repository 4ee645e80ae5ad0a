"""Root and weight bookkeeping for type A_n.

Weights are integer tuples of length n+1 in epsilon coordinates.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence

Weight = tuple[int, ...]


class DomainError(ValueError):
    """An argument lies outside the domain of the requested map."""


def check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"rank must be a positive integer, got {n!r}")


def check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise DomainError(f"index {i} outside 1..{n}")


def zero_weight(n: int) -> Weight:
    return (0,) * (n + 1)


def epsilon(n: int, i: int) -> Weight:
    """The i-th standard basis vector, 1 <= i <= n+1."""
    if not 1 <= i <= n + 1:
        raise DomainError(f"basis index {i} outside 1..{n + 1}")
    return tuple(1 if k == i - 1 else 0 for k in range(n + 1))


def alpha(n: int, i: int) -> Weight:
    """Simple root alpha_i = eps_i - eps_{i+1}."""
    check_index(n, i)
    w = [0] * (n + 1)
    w[i - 1] = 1
    w[i] = -1
    return tuple(w)


def omega(n: int, i: int) -> Weight:
    """Fundamental weight eps_1 + ... + eps_i."""
    check_index(n, i)
    return tuple(1 if k < i else 0 for k in range(n + 1))


def pairing(i: int, mu: Sequence[int]) -> int:
    """<alpha_i^vee, mu> = mu_i - mu_{i+1}."""
    if not 1 <= i < len(mu):
        raise DomainError(f"index {i} outside 1..{len(mu) - 1}")
    return mu[i - 1] - mu[i]


def cartan_entry(i: int, j: int) -> int:
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def add(mu: Sequence[int], nu: Sequence[int]) -> Weight:
    return tuple(a + b for a, b in zip(mu, nu, strict=True))


def sub(mu: Sequence[int], nu: Sequence[int]) -> Weight:
    return tuple(a - b for a, b in zip(mu, nu, strict=True))


def scale(c: int, mu: Sequence[int]) -> Weight:
    return tuple(c * a for a in mu)


def root_combination(n: int, coeffs: Sequence[int]) -> Weight:
    """sum_i coeffs[i-1] * alpha_i."""
    if len(coeffs) != n:
        raise DomainError(f"expected {n} coefficients, got {len(coeffs)}")
    w = [0] * (n + 1)
    for i, c in enumerate(coeffs, start=1):
        w[i - 1] += c
        w[i] -= c
    return tuple(w)


def tau(mu: Sequence[int]) -> Weight:
    """The diagram involution alpha_i -> alpha_{n+1-i}.

    Realized as eps_j -> -eps_{n+2-j}.  On the root lattice (coordinate sum
    zero) this is exact; for other weights it returns the representative
    with coordinate sum equal to minus the input's.
    """
    return tuple(-a for a in reversed(mu))


def w0(mu: Sequence[int]) -> Weight:
    """Action of the longest Weyl group element: reverse the coordinates."""
    return tuple(reversed(mu))


def partition(n: int, parts: Sequence[int]) -> Weight:
    """Validate a dominant partition and pad it to length n+1."""
    check_rank(n)
    parts = list(parts)
    while len(parts) > n + 1 and parts[-1] == 0:
        parts.pop()
    if len(parts) > n + 1:
        raise DomainError(f"partition {tuple(parts)} has more than {n + 1} parts")
    parts += [0] * (n + 1 - len(parts))
    if any(p < 0 for p in parts):
        raise DomainError("partition parts must be nonnegative")
    if any(a < b for a, b in itertools.pairwise(parts)):
        raise DomainError(f"partition {tuple(parts)} is not weakly decreasing")
    if parts[n] != 0:
        raise DomainError(f"partition {tuple(parts)} must end with lambda_{n + 1} = 0")
    return tuple(parts)


def from_fundamental(n: int, coeffs: Sequence[int]) -> Weight:
    """lambda = sum a_i omega_i, i.e. lambda_i = a_i + ... + a_n."""
    if len(coeffs) > n:
        raise DomainError(f"expected at most {n} fundamental coefficients")
    a = list(coeffs) + [0] * (n - len(coeffs))
    if any(c < 0 for c in a):
        raise DomainError("fundamental coefficients must be nonnegative")
    lam = [sum(a[i:]) for i in range(n)] + [0]
    return tuple(lam)


def weyl_dim(lam: Sequence[int]) -> int:
    """Dimension of the irreducible module of highest weight lam."""
    m = len(lam)
    num = 1
    den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def partitions(n: int, max_size: int, max_part: int | None = None):
    """All dominant partitions with at most n nonzero parts and |lam| <= max_size.

    Yields padded tuples of length n+1 in lexicographic order of parts.
    """

    def rec(prefix: list[int], remaining: int, cap: int):
        if len(prefix) == n:
            yield tuple(prefix) + (0,)
            return
        for p in range(min(cap, remaining), -1, -1):
            yield from rec(prefix + [p], remaining - p, p)

    cap = max_size if max_part is None else max_part
    out = sorted(rec([], max_size, cap))
    yield from out
