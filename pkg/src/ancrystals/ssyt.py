"""Semistandard Young tableaux, the signature rule and the crystal T(lambda),
jeu de taquin and evacuation."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement, pairwise

from .cartan_an import DomainError, Weight, check_index, check_rank
from .crystal_core import Crystal, ElementStats

Rows = tuple[tuple[int, ...], ...]
Cell = tuple[int, int]

FAR_EASTERN = "far_eastern"
MIDDLE_EASTERN = "middle_eastern"


def _freeze(rows: Sequence[Sequence[int]]) -> Rows:
    out = [tuple(int(a) for a in r) for r in rows]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def shape_of(rows: Rows) -> tuple[int, ...]:
    return tuple(len(r) for r in rows)


def is_semistandard(rows: Rows, n: int) -> bool:
    if any(len(a) < len(b) for a, b in pairwise(rows)):
        return False
    if any(not r for r in rows):
        return False
    for r in rows:
        if any(a < 1 or a > n + 1 for a in r):
            return False
        if any(a > b for a, b in pairwise(r)):
            return False
    for upper, lower in pairwise(rows):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return True


@dataclass(frozen=True)
class SSYT:
    """A semistandard tableau with entries in 1..n+1 (English notation)."""

    n: int
    rows: Rows

    def __post_init__(self) -> None:
        check_rank(self.n)
        object.__setattr__(self, "rows", _freeze(self.rows))
        if not is_semistandard(self.rows, self.n):
            raise DomainError(f"not a semistandard tableau for n={self.n}: {self.rows}")

    @property
    def shape(self) -> tuple[int, ...]:
        return shape_of(self.rows)

    def partition(self) -> Weight:
        """The shape padded to length n+1."""
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


# ---------------------------------------------------------------- readings


def far_eastern_cells(rows: Rows) -> Iterator[Cell]:
    """Columns right to left, each column top to bottom."""
    width = len(rows[0]) if rows else 0
    for c in range(width - 1, -1, -1):
        for r, row in enumerate(rows):
            if c >= len(row):
                break
            yield (r, c)


def middle_eastern_cells(rows: Rows) -> Iterator[Cell]:
    """Rows top to bottom, each row right to left."""
    for r, row in enumerate(rows):
        for c in range(len(row) - 1, -1, -1):
            yield (r, c)


_READINGS: dict[str, Callable[[Rows], Iterator[Cell]]] = {
    FAR_EASTERN: far_eastern_cells,
    MIDDLE_EASTERN: middle_eastern_cells,
}


def far_eastern_word(T: SSYT) -> tuple[int, ...]:
    return tuple(T.rows[r][c] for r, c in far_eastern_cells(T.rows))


def middle_eastern_word(T: SSYT) -> tuple[int, ...]:
    return tuple(T.rows[r][c] for r, c in middle_eastern_cells(T.rows))


@dataclass(frozen=True)
class Signature:
    """Surviving signs after cancelling every (+, -) pair.

    ``minus`` and ``plus`` list the cells of surviving signs in reading
    order; all survivors in ``minus`` precede those in ``plus``.
    """

    minus: tuple[Cell, ...]
    plus: tuple[Cell, ...]

    @property
    def eps(self) -> int:
        return len(self.minus)

    @property
    def phi(self) -> int:
        return len(self.plus)

    @property
    def leftmost_plus(self) -> Cell | None:
        return self.plus[0] if self.plus else None

    @property
    def rightmost_minus(self) -> Cell | None:
        return self.minus[-1] if self.minus else None

    def signs(self) -> str:
        return "-" * len(self.minus) + "+" * len(self.plus)


def signature_of_rows(rows: Rows, i: int, reading: str = FAR_EASTERN) -> Signature:
    # A pending + is cancelled by the next unmatched -.
    minus: list[Cell] = []
    stack: list[Cell] = []
    for r, c in _READINGS[reading](rows):
        a = rows[r][c]
        if a == i:
            stack.append((r, c))
        elif a == i + 1:
            if stack:
                stack.pop()
            else:
                minus.append((r, c))
    return Signature(tuple(minus), tuple(stack))


def i_signature(T: SSYT, i: int, reading: str = FAR_EASTERN) -> Signature:
    check_index(T.n, i)
    return signature_of_rows(T.rows, i, reading)


def _replace(rows: Rows, cell: Cell, value: int) -> Rows:
    r, c = cell
    row = rows[r]
    return rows[:r] + (row[:c] + (value,) + row[c + 1 :],) + rows[r + 1 :]


def f_rows(rows: Rows, i: int, reading: str = FAR_EASTERN) -> Rows | None:
    cell = signature_of_rows(rows, i, reading).leftmost_plus
    return None if cell is None else _replace(rows, cell, i + 1)


def e_rows(rows: Rows, i: int, reading: str = FAR_EASTERN) -> Rows | None:
    cell = signature_of_rows(rows, i, reading).rightmost_minus
    return None if cell is None else _replace(rows, cell, i)


def f_op(T: SSYT, i: int, reading: str = FAR_EASTERN) -> SSYT | None:
    check_index(T.n, i)
    rows = f_rows(T.rows, i, reading)
    return None if rows is None else SSYT(T.n, rows)


def e_op(T: SSYT, i: int, reading: str = FAR_EASTERN) -> SSYT | None:
    check_index(T.n, i)
    rows = e_rows(T.rows, i, reading)
    return None if rows is None else SSYT(T.n, rows)


def stats(T: SSYT, reading: str = FAR_EASTERN) -> ElementStats:
    eps = []
    phi = []
    for i in range(1, T.n + 1):
        sig = signature_of_rows(T.rows, i, reading)
        eps.append(sig.eps)
        phi.append(sig.phi)
    return ElementStats(T.content(), tuple(eps), tuple(phi))


class SSYTCrystal(Crystal):
    """T(lambda) for every lambda at once; the component is fixed by the seed."""

    name = "ssyt"

    def __init__(self, n: int, reading: str = FAR_EASTERN):
        check_rank(n)
        self.n = n
        self.reading = reading

    def f(self, b: SSYT, i: int) -> SSYT | None:
        return f_op(b, i, self.reading)

    def e(self, b: SSYT, i: int) -> SSYT | None:
        return e_op(b, i, self.reading)

    def stats(self, b: SSYT) -> ElementStats:
        return stats(b, self.reading)


# ---------------------------------------------------------------- extremes


def _parts(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(p for p in lam if p > 0)


def highest_tableau(n: int, lam: Sequence[int]) -> SSYT:
    """Row k filled with k."""
    return SSYT(n, tuple((k,) * p for k, p in enumerate(_parts(lam), start=1)))


def lowest_tableau(n: int, lam: Sequence[int]) -> SSYT:
    """Each column, read bottom to top, is n+1, n, ..."""
    parts = _parts(lam)
    heights = [sum(1 for p in parts if p > c) for c in range(parts[0])] if parts else []
    rows = tuple(
        tuple(n + 2 - heights[c] + r for c in range(p)) for r, p in enumerate(parts)
    )
    return SSYT(n, rows)


def enumerate_ssyt(n: int, lam: Sequence[int]) -> list[SSYT]:
    """Every SSYT of shape lam with entries in 1..n+1, by brute force."""
    parts = _parts(lam)
    out: list[SSYT] = []

    def rec(prefix: list[tuple[int, ...]]) -> None:
        k = len(prefix)
        if k == len(parts):
            out.append(SSYT(n, tuple(prefix)))
            return
        for row in combinations_with_replacement(range(1, n + 2), parts[k]):
            if prefix and any(a >= b for a, b in zip(prefix[-1], row)):
                continue
            rec(prefix + [row])

    rec([])
    return out


# ---------------------------------------------------------------- jeu de taquin


@dataclass(frozen=True)
class SkewTableau:
    """Entries on outer/inner.  ``cells[r]`` has length outer[r] and holds
    None on the inner cells."""

    cells: tuple[tuple[int | None, ...], ...]

    @property
    def outer(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.cells)

    @property
    def inner(self) -> tuple[int, ...]:
        return tuple(sum(1 for a in r if a is None) for r in self.cells)

    def __post_init__(self) -> None:
        cells = tuple(tuple(r) for r in self.cells)
        object.__setattr__(self, "cells", cells)
        outer, inner = self.outer, self.inner
        for a, b in pairwise(outer):
            if a < b:
                raise DomainError("outer shape is not a partition")
        for a, b in pairwise(inner):
            if a < b:
                raise DomainError("inner shape is not a partition")
        for r, row in enumerate(cells):
            k = inner[r]
            if any(x is not None for x in row[:k]) or any(x is None for x in row[k:]):
                raise DomainError(
                    "inner cells must be a left-justified prefix of each row"
                )
            filled = row[k:]
            if any(a > b for a, b in pairwise(filled)):
                raise DomainError("skew rows must weakly increase")
            if r + 1 < len(cells):
                below = cells[r + 1]
                for c in range(max(k, inner[r + 1]), len(below)):
                    if row[c] >= below[c]:
                        raise DomainError("skew columns must strictly increase")


def inner_corners(inner: Sequence[int]) -> list[Cell]:
    out = []
    for r, k in enumerate(inner):
        if k > 0 and (r + 1 == len(inner) or inner[r + 1] < k):
            out.append((r, k - 1))
    return out


def _slide(grid: list[list[int | None]], start: Cell) -> None:
    r, c = start
    while True:
        right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
        down = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
        if right is None and down is None:
            del grid[r][c]
            return
        if right is None or (down is not None and down <= right):
            grid[r][c] = down
            grid[r + 1][c] = None
            r += 1
        else:
            grid[r][c] = right
            grid[r][c + 1] = None
            c += 1


def jdt_rectify(S: SkewTableau, n: int, order: str | random.Random = "last") -> SSYT:
    """Rectify by inward slides.

    ``order`` selects which inner corner to vacate next: ``"last"``
    (bottom-most), ``"first"`` (top-most) or a ``random.Random`` instance.
    """
    grid = [list(r) for r in S.cells]
    while True:
        inner = [sum(1 for a in r if a is None) for r in grid]
        corners = inner_corners(inner)
        if not corners:
            break
        if order == "last":
            cell = corners[-1]
        elif order == "first":
            cell = corners[0]
        else:
            cell = order.choice(corners)
        _slide(grid, cell)
    return SSYT(n, tuple(tuple(r) for r in grid if r))


def rotate_complement(T: SSYT) -> SkewTableau:
    """Replace a by n+2-a and rotate by 180 degrees inside the bounding box."""
    rows = T.rows
    if not rows:
        return SkewTableau(())
    width = len(rows[0])
    out = []
    for row in reversed(rows):
        filled = tuple(T.n + 2 - a for a in reversed(row))
        out.append((None,) * (width - len(row)) + filled)
    return SkewTableau(tuple(out))


def evacuation(T: SSYT) -> SSYT:
    return jdt_rectify(rotate_complement(T), T.n)


def rho_lambda_word(T: SSYT, word: Sequence[int] | None = None) -> SSYT:
    """Image of T = f_{w_k} ... f_{w_1} T^lambda under the weight-flip
    involution, computed as e_{n+1-w_k} ... e_{n+1-w_1} T_lambda.

    ``word`` lists w_1, ..., w_k (applied first to last).  When omitted a
    raising path from T is used.
    """
    crystal = SSYTCrystal(T.n)
    lam = T.partition()
    if word is None:
        word = crystal.raising_word(T)
    else:
        reached = crystal.f_word(highest_tableau(T.n, lam), word)
        if reached != T:
            raise DomainError(f"word {tuple(word)} does not lead from T^lambda to T")
    out = crystal.e_word(lowest_tableau(T.n, lam), (T.n + 1 - i for i in word))
    if out is None:
        raise AssertionError("raising word from T_lambda fell out of the crystal")
    return out
