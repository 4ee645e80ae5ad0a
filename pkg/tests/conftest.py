"""Shared worked examples and the per-criterion acceptance summary."""

from __future__ import annotations

import pytest

from ancrystals.gt import GTPattern
from ancrystals.mlt import MLT
from ancrystals.polyhedral import PolyVector
from ancrystals.reverse_models import RSSYT

# Rank 4 marginally large tableau.
MLT4_ROWS = [[1] * 9 + [2], [2] * 5 + [3, 3, 4], [3, 3, 3, 4], [4, 5]]
MLT4_F2_ROWS = [[1] * 9 + [2], [2, 2, 2, 2, 3, 3, 3, 4], [3, 3, 4], [5]]
MLT4_E2_ROWS = [[1] * 9 + [2], [2] * 6 + [3, 4], [3, 3, 3, 3, 4], [4, 4, 5]]
MLT4_WORD = (2, 1, 1, 4, 1, 3, 1, 3, 1, 2, 1, 2, 4, 1, 2, 3, 1, 2, 3, 5, 1, 2, 3, 4)

# Rank 7 reverse tableau and its shape.
LAM7 = (6, 4, 4, 2, 1, 1, 0, 0)
RS7_ROWS = [[8, 7, 7, 5, 3, 1], [7, 6, 4, 4], [5, 4, 3, 2], [4, 2], [2], [1]]
RS7_PHI_ROWS = ((1, 2, 2, 4, 6, 8), (2, 3, 5, 5), (4, 5, 6, 7), (5, 7), (7,), (8,))
T_HIGH_7 = ((1,) * 6, (2,) * 4, (3,) * 4, (4, 4), (5,), (6,))
T_LOW_7 = ((3, 5, 6, 6, 8, 8), (4, 6, 7, 7), (5, 7, 8, 8), (6, 8), (7,), (8,))

# Rank 9 lattice point.
LAM9 = (8, 6, 4, 3, 3, 2, 1, 1, 0, 0)
X9_ROWS = [
    (1, 1, 1, 0, 0, 0, 0, 0, 0),
    (2, 2, 1, 1, 0, 0, 1, 0),
    (2, 2, 2, 1, 0, 1, 0),
    (2, 2, 3, 0, 1, 0),
    (3, 3, 1, 1, 0),
    (3, 2, 1, 0),
    (2, 3, 0),
    (3, 1),
    (2,),
]
X9_LAMBDAS = (
    (8, 6, 4, 3, 3, 2, 1, 1, 0, 0),
    (7, 5, 4, 3, 2, 1, 1, 0, 0),
    (6, 5, 4, 3, 1, 1, 1, 0),
    (5, 5, 4, 2, 1, 1, 0),
    (5, 4, 4, 1, 1, 0),
    (5, 4, 2, 1, 0),
    (4, 3, 1, 0),
    (3, 3, 0),
    (3, 1),
    (2,),
)
X9_TABLEAU = (
    (10, 10, 9, 7, 6, 3, 2, 1),
    (9, 8, 8, 6, 4, 1),
    (7, 6, 5, 5),
    (6, 4, 3),
    (5, 2, 1),
    (4, 1),
    (3,),
    (1,),
)

# Gelfand-Tsetlin patterns for LAM7.
GT7_HI_ROWS = [
    (4, 4, 2, 1, 1, 0, 0),
    (4, 2, 1, 1, 0, 0),
    (2, 1, 1, 0, 0),
    (1, 1, 0, 0),
    (1, 0, 0),
    (0, 0),
    (0,),
]
GT7_LO_ROWS = [
    (6, 4, 4, 2, 1, 0, 0),
    (6, 4, 4, 2, 0, 0),
    (6, 4, 4, 0, 0),
    (6, 4, 0, 0),
    (6, 0, 0),
    (0, 0),
    (0,),
]
# Written left to right, with the leading zeros of the infinite tail dropped.
X_L_SEQUENCE = (0, 1, 1, 0, 0, 3, 3, 2, 0, 0, 3, 3, 2, 0, 0, 0, 5, 5, 4, 2, 2)
HI_TABLEAU_7 = ((6, 4, 3, 3, 1, 1), (5, 3, 2, 2), (4, 2, 1, 1), (3, 1), (2,), (1,))
LO_TABLEAU_7 = ((6,) * 6, (5,) * 4, (4,) * 4, (3, 3), (2,), (1,))

# Rank 4 reverse tableau and its marginally large image.
LAM4 = (12, 10, 8, 3, 0)
RS4_ROWS = [
    [5] * 8 + [4, 4, 3, 2],
    [4] * 6 + [3, 2, 2, 1],
    [3, 3, 3, 2, 2, 2, 1, 1],
    [2, 2, 1],
]
RML4_ROWS = (
    (5,) * 16 + (4, 4, 3, 3, 3, 2, 1, 1),
    (4,) * 8 + (3, 3, 3, 2, 1, 1, 1),
    (3, 3, 3, 3, 2, 2, 1),
    (2, 1, 1),
)


def mlt4() -> MLT:
    return MLT.from_rows(4, MLT4_ROWS)


def rs7() -> RSSYT:
    return RSSYT(7, RS7_ROWS)


def x9() -> PolyVector:
    return PolyVector.from_rows(9, X9_ROWS)


def gt7_hi() -> GTPattern:
    return GTPattern(7, LAM7, GT7_HI_ROWS)


def gt7_lo() -> GTPattern:
    return GTPattern(7, LAM7, GT7_LO_ROWS)


def rs4() -> RSSYT:
    return RSSYT(4, RS4_ROWS)


# ---------------------------------------------------------------- acceptance summary

CRITERIA = {
    1: "rank 4 MLT: weight, eps, phi, f_2/e_2, under 1 ms",
    2: "rank 9 vector: Lambda sequences and psi_lambda tableau",
    3: "rank 7 reverse tableau: e_3 and extremal tableaux",
    4: "GT patterns: varsigma images and psi_lambda tableaux",
    5: "rank 4 reverse tableau to RMLT under ml",
    6: "isomorphism suite, n<=3, |lambda|<=6, under 30 s",
    7: "B(infinity) suite, n<=3, depth 6, under 60 s",
    8: "word involution equals evacuation on suite 6",
    9: "image predicate equivalence and r-inequalities",
    10: "sigma lemmas on suite 6 and 10^4 fuzzed vectors",
    11: "axioms on every graph of suites 6 and 7",
}

_results: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number k")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if call.when == "call" or call.excinfo is not None:
        _results.setdefault(marker.args[0], []).append(call.excinfo is None)


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k, title in CRITERIA.items():
        outcomes = _results.get(k)
        if outcomes is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {status}  {title}")
