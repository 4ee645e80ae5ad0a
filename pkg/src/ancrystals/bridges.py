"""Maps between the models: psi_infinity, psi_lambda and Lambda sequences,
xi counts and the embedding into T'(infinity), Lusztig data, and the
polyhedral involutions."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .cartan_an import DomainError, partition
from .crystal_core import (
    Report,
    RLambda,
    RLambdaCrystal,
    TensorCrystal,
    check_morphism,
    generate_graph,
)
from .gt import GTPattern
from .mlt import MLT
from .polyhedral import (
    BInfinityPoly,
    BLambdaPoly,
    PolyVector,
    in_sigma,
    in_sigma_lambda,
)
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
    rssyt_highest,
    zero_rmlt,
)
from .ssyt import evacuation

# ---------------------------------------------------------------- psi_infinity


def psi_infty(T: RMLT) -> PolyVector:
    """x_j^{(i)} = sum_{k=1}^{i} z_{n+2-i-j}^k."""
    n = T.n
    rows = [
        [
            sum(T.z(n + 2 - i - j, k) for k in range(1, i + 1))
            for j in range(1, n + 2 - i)
        ]
        for i in range(1, n + 1)
    ]
    return PolyVector.from_rows(n, rows)


def psi_infty_inv(x: PolyVector) -> RMLT:
    """z_{n+2-i-j}^i = x_j^{(i)} - x_{j+1}^{(i-1)}."""
    if not in_sigma(x):
        raise DomainError(f"{x} is not in the polyhedral B(infinity)")
    n = x.n
    values = {}
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            values[(n + 2 - i - j, i)] = x.x(j, i) - x.x(j + 1, i - 1)
    return RMLT.from_dict(n, values)


# ---------------------------------------------------------------- psi_lambda


def lambda_sequences(x: PolyVector, lam: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Lambda_i = (x_k^{(i-1)} + lambda_{k+i-1})_{1 <= k <= n+2-i}, i = 1..n+1."""
    n = x.n
    lam = partition(n, lam)
    if not in_sigma_lambda(x, lam):
        raise DomainError(f"{x} is not in the polyhedral B(lambda) for lambda={lam}")
    return tuple(
        tuple(x.x(k, i - 1) + lam[k + i - 2] for k in range(1, n + 3 - i))
        for i in range(1, n + 2)
    )


def psi_lambda(x: PolyVector, lam: Sequence[int]) -> RSSYT:
    """Fill the skew diagram Lambda_i / Lambda_{i+1} with i, for each i."""
    seqs = lambda_sequences(x, lam)
    n = x.n
    rows = []
    for k in range(1, n + 2):
        row: list[int] = []
        for i in range(1, n + 2):
            outer = seqs[i - 1][k - 1] if k <= len(seqs[i - 1]) else 0
            inner = seqs[i][k - 1] if i < n + 1 and k <= len(seqs[i]) else 0
            # Entries decrease along the row, so larger labels sit further left.
            row = [i] * (outer - inner) + row
        rows.append(tuple(row))
    return RSSYT(n, tuple(rows))


def lambda_of_rssyt(T: RSSYT) -> tuple[tuple[int, ...], ...]:
    """Lambda_i^{(k)} = number of entries >= i in row k, for k = 1..n+2-i."""
    n = T.n
    rows = list(T.rows) + [()] * (n + 1 - len(T.rows))
    return tuple(
        tuple(sum(1 for a in rows[k - 1] if a >= i) for k in range(1, n + 3 - i))
        for i in range(1, n + 2)
    )


def psi_lambda_inv(T: RSSYT, lam: Sequence[int] | None = None) -> PolyVector:
    """x_k^{(i)} = (number of entries > i in row k) - lambda_{k+i}."""
    n = T.n
    shape = T.partition()
    if lam is not None and partition(n, lam) != shape:
        raise DomainError(f"tableau shape {shape} differs from lambda {tuple(lam)}")
    seqs = lambda_of_rssyt(T)
    rows = [
        [seqs[i][k - 1] - shape[k + i - 1] for k in range(1, n + 2 - i)]
        for i in range(1, n + 1)
    ]
    return PolyVector.from_rows(n, rows)


def gt_of_rssyt(T: RSSYT) -> GTPattern:
    """The pattern g_T with y_k^{(i)} = Lambda_{i+1}^{(k)}."""
    seqs = lambda_of_rssyt(T)
    return GTPattern(T.n, T.partition(), seqs[1:])


def rssyt_of_gt(g: GTPattern) -> RSSYT:
    n = g.n
    rows = []
    for k in range(1, n + 2):
        row: list[int] = []
        for i in range(1, n + 2):
            # Lambda_i^{(k)} = y_k^{(i-1)}.
            row = [i] * (g.y(i - 1, k) - g.y(i, k)) + row
        rows.append(tuple(row))
    return RSSYT(n, tuple(rows))


# ---------------------------------------------------------------- xi and ml


def xi(T: RSSYT, i: int, j: int) -> int:
    """xi_i^j = Lambda_{i+1}^{(j)} - Lambda_i^{(j+1)}, out-of-range entries 0."""
    n = T.n
    if not (1 <= i <= n and 1 <= j <= n + 1 - i):
        raise DomainError(f"xi_{i}^{j} is undefined for n={n}")
    seqs = lambda_of_rssyt(T)

    def lam_seq(a: int, k: int) -> int:
        s = seqs[a - 1]
        return s[k - 1] if 1 <= k <= len(s) else 0

    return lam_seq(i + 1, j) - lam_seq(i, j + 1)


def xi_by_columns(T: RSSYT, i: int, j: int) -> int | None:
    """Number of columns strictly between the rightmost i-box of row j+1 and
    the leftmost i-box of row j.  None unless both rows contain an i-box."""
    if j + 1 > len(T.rows):
        return None
    top, bottom = T.rows[j - 1], T.rows[j]
    left_top = next((c for c, a in enumerate(top, start=1) if a == i), None)
    right_bottom = max(
        (c for c, a in enumerate(bottom, start=1) if a == i), default=None
    )
    if left_top is None or right_bottom is None:
        return None
    return left_top - right_bottom - 1


def ml_embed(T: RSSYT) -> RMLT:
    """z_i^j = xi_j^{n+2-i-j}."""
    n = T.n
    values = {
        (i, j): xi(T, j, n + 2 - i - j)
        for i in range(1, n + 1)
        for j in range(1, n + 2 - i)
    }
    return RMLT.from_dict(n, values)


def in_ml_image(T: RMLT, lam: Sequence[int]) -> bool:
    """sum_{k<=i-j+1} z_{n+1-i}^k - sum_{k<=i-j} z_{n+2-i}^k <= lambda_i - lambda_{i+1}
    for 1 <= j <= i <= n."""
    n = T.n
    lam = partition(n, lam)
    for i in range(1, n + 1):
        gap = lam[i - 1] - lam[i]
        for j in range(1, i + 1):
            a = sum(T.z(n + 1 - i, k) for k in range(1, i - j + 2))
            b = sum(T.z(n + 2 - i, k) for k in range(1, i - j + 1))
            if a - b > gap:
                return False
    return True


def theta_r(T: RMLT) -> dict[tuple[int, int], int]:
    """r_{i,m} = sum_{k=1}^{i} z_{n+2-i-m}^k for 1 <= i <= n, 1 <= m <= n+1-i."""
    n = T.n
    return {
        (i, m): sum(T.z(n + 2 - i - m, k) for k in range(1, i + 1))
        for i in range(1, n + 1)
        for m in range(1, n + 2 - i)
    }


def r_inequalities_hold(
    r: dict[tuple[int, int], int], n: int, lam: Sequence[int]
) -> bool:
    """r_{l,j} - r_{l-1,j} <= lambda_{l-1+j} - lambda_{l+j}, with r_{0,j} = 0."""
    lam = partition(n, lam)
    for l in range(1, n + 1):
        for j in range(1, n + 2 - l):
            prev = r[(l - 1, j)] if l > 1 else 0
            if r[(l, j)] - prev > lam[l + j - 2] - lam[l + j - 1]:
                return False
    return True


# ---------------------------------------------------------------- Lusztig data


@dataclass(frozen=True)
class LusztigData:
    """a_{k,l} for 1 <= k < l <= n+1, stored in lexicographic order of (k, l)."""

    n: int
    values: tuple[int, ...]

    @staticmethod
    def keys(n: int) -> list[tuple[int, int]]:
        return [(k, l) for k in range(1, n + 2) for l in range(k + 1, n + 2)]

    @classmethod
    def from_dict(cls, n: int, d: dict[tuple[int, int], int]) -> LusztigData:
        return cls(n, tuple(d[key] for key in cls.keys(n)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.keys(self.n), self.values))

    def a(self, k: int, l: int) -> int:
        return self.as_dict()[(k, l)]


def lusztig_data(T: RSSYT) -> LusztigData:
    """a_{k,l} = xi_{n+2-l}^{l-k}(T)."""
    n = T.n
    return LusztigData.from_dict(
        n, {(k, l): xi(T, n + 2 - l, l - k) for k, l in LusztigData.keys(n)}
    )


def chi_of_mlt(T: MLT) -> LusztigData:
    """a_{k,l} = y_k^l."""
    return LusztigData.from_dict(
        T.n, {(k, l): T.y(k, l) for k, l in LusztigData.keys(T.n)}
    )


def mlt_of_lusztig(a: LusztigData) -> MLT:
    return MLT.from_dict(a.n, a.as_dict())


def pl_map(x: PolyVector) -> LusztigData:
    """chi o eta o psi_infinity^{-1}."""
    return chi_of_mlt(eta(psi_infty_inv(x)))


# ---------------------------------------------------------------- involutions


def rho_poly_lambda(x: PolyVector, lam: Sequence[int]) -> PolyVector:
    lam = partition(x.n, lam)
    T = psi_lambda(x, lam)
    return psi_lambda_inv(phi_inv(evacuation(phi_map(T))), lam)


def rho_poly_infty(x: PolyVector) -> PolyVector:
    return psi_infty(eta_inv(rho_infinity(eta(psi_infty_inv(x)))))


def lowest_vector(n: int, lam: Sequence[int]) -> PolyVector:
    """The lowest element of the polyhedral B(lambda)."""
    return rho_poly_lambda(PolyVector(n, ()), lam)


# ---------------------------------------------------------------- the diagram


def verify_diagram(
    n: int,
    lam: Sequence[int],
    depth: int = 4,
    ml: Callable[[RSSYT], RMLT] = ml_embed,
) -> Report:
    """Check the square relating T'(lambda), Sigma[lambda], T'(infinity) x R_lambda
    and Sigma x R_lambda, plus the Lusztig-data triangle.

    Runs over all of T'(lambda) and over T'(infinity) truncated at ``depth``.
    ``ml`` can be swapped for a deliberately broken map in negative tests.
    """
    lam = partition(n, lam)
    rep = Report(f"diagram[n={n}, lambda={lam}, depth={depth}]")
    r_lam = RLambda(lam)
    rssyt = RSSYTCrystal(n)
    poly_lam = BLambdaPoly(n, lam)
    rmlt_r = TensorCrystal(RMLTCrystal(n), RLambdaCrystal(lam))
    poly_r = TensorCrystal(BInfinityPoly(n), RLambdaCrystal(lam))

    tableaux = generate_graph(rssyt, rssyt_highest(n, lam)).nodes
    for T in tableaux:
        rep.checked += 1
        z = ml(T)
        x = psi_lambda_inv(T, lam)
        if psi_infty(z) != x:
            rep.add(
                "square",
                f"{T.rows}: psi_inf(ml(T)) = {psi_infty(z)} but psi_lambda^-1(T) = {x}",
            )
        if not in_ml_image(z, lam):
            rep.add("image", f"{T.rows}: ml(T) fails the image inequalities")
        a = lusztig_data(T)
        if chi_of_mlt(eta(z)) != a:
            rep.add("lusztig", f"{T.rows}: chi(eta(ml(T))) != lusztig_data(T)")
        if in_sigma(x) and pl_map(x) != a:
            rep.add("lusztig", f"{T.rows}: PL(psi_lambda^-1(T)) != lusztig_data(T)")

    rep.extend(
        check_morphism(
            rssyt, poly_lam, tableaux, lambda T: psi_lambda_inv(T, lam), "psi_lambda^-1"
        )
    )
    rep.extend(check_morphism(rssyt, rmlt_r, tableaux, lambda T: (ml(T), r_lam), "ml"))
    vectors = [psi_lambda_inv(T, lam) for T in tableaux]
    rep.extend(
        check_morphism(poly_lam, poly_r, vectors, lambda x: (x, r_lam), "inclusion")
    )

    rmlt = RMLTCrystal(n)
    free = generate_graph(rmlt, zero_rmlt(n), depth=depth).nodes
    rep.extend(check_morphism(rmlt, BInfinityPoly(n), free, psi_infty, "psi_infinity"))
    for T in free:
        rep.checked += 1
        x = psi_infty(T)
        if psi_infty_inv(x) != T:
            rep.add(
                "psi_infinity", f"{T.counts}: psi_inf is not inverted by psi_inf^-1"
            )
        if pl_map(x) != chi_of_mlt(eta(T)):
            rep.add("PL", f"{T.counts}: PL(psi_inf(T)) != chi(eta(T))")
    return rep
