"""Exact generation of the partition polynomial families.

Five families are produced, each from a q-series or recurrence:

* Taylor  s_n(x) = sum_{k<=n} p_k x^k
* Parts   F_n(x) = sum_k p_k(n) x^k           (p_k(n): partitions of n into k parts)
* Rank    r_n(z) = sum_{m>=0} N(m, n) z^m       (N(m, n): partitions of n with rank m)
* Crank   c_n(z) = sum_{m>=0} M(m, n) z^m       (M(m, n): partitions of n with crank m)
* Durfee  d_n(z) = sum_k d(n, k) z^k            (d(n, k): Durfee square of side k)

Brute-force enumeration (``enumerate_partitions`` and the statistic functions)
serves as an independent oracle for small n.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Callable, Iterator, Sequence

from .exactpoly import ExactPolynomial, LaurentPolynomial, TruncatedBiseries

ORACLE_MAX_N = 60


class OracleScaleError(ValueError):
    """Raised when brute-force enumeration is requested beyond the oracle bound."""


class FamilyId(str, enum.Enum):
    TAYLOR = "taylor"
    PARTS = "parts"
    RANK = "rank"
    CRANK = "crank"
    DURFEE = "durfee"


@dataclass(frozen=True)
class PartitionTable:
    n_max: int
    p: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.p[k]


@dataclass(frozen=True)
class PartsTriangle:
    """Row-oriented triangle: ``rows[n][k] = p_k(n)`` for 0 <= k <= n."""

    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]


# --- counting tables ---------------------------------------------------------

@lru_cache(maxsize=8)
def partition_counts(n_max: int) -> PartitionTable:
    """p_0..p_{n_max} by Euler's pentagonal-number recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = g1 + k
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return PartitionTable(n_max, tuple(p))


@lru_cache(maxsize=4)
def parts_triangle(n_max: int) -> PartsTriangle:
    """p_k(n) from p_k(n) = p_{k-1}(n-1) + p_k(n-k), seeded by p_0(0) = 1."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows: list[list[int]] = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[n - 1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            v = prev[k - 1]
            if k <= n - k:
                v += rows[n - k][k]
            row[k] = v
        rows.append(row)
    return PartsTriangle(n_max, tuple(tuple(r) for r in rows))


# --- enumeration oracle --------------------------------------------------------

def enumerate_partitions(n: int) -> Iterator[list[int]]:
    """Yield every partition of n once, as a weakly decreasing list."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ORACLE_MAX_N:
        raise OracleScaleError(f"enumeration oracle is limited to n <= {ORACLE_MAX_N}, got {n}")
    # Kelleher's ascending-composition generator, reversed on output.
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield a[l::-1]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[k::-1]


def rank(part: Sequence[int]) -> int:
    """Dyson's rank: largest part minus number of parts."""
    return part[0] - len(part)


def crank(part: Sequence[int]) -> int:
    """Andrews-Garvan crank: largest part if there are no 1s, else
    (#parts larger than the number of 1s) - (number of 1s)."""
    ones = sum(1 for v in part if v == 1)
    if ones == 0:
        return part[0]
    return sum(1 for v in part if v > ones) - ones


def durfee_size(part: Sequence[int]) -> int:
    k = 0
    while k < len(part) and part[k] >= k + 1:
        k += 1
    return k


def num_parts(part: Sequence[int]) -> int:
    return len(part)


STATISTICS: dict[FamilyId, Callable[[Sequence[int]], int]] = {
    FamilyId.PARTS: num_parts,
    FamilyId.RANK: rank,
    FamilyId.CRANK: crank,
    FamilyId.DURFEE: durfee_size,
}


def oracle_counts(family: FamilyId | str, n: int) -> dict[int, int]:
    """{statistic value: number of partitions of n} by brute force."""
    stat = STATISTICS[FamilyId(family)]
    return dict(sorted(Counter(stat(p) for p in enumerate_partitions(n)).items()))


# --- families ---------------------------------------------------------------

def taylor_poly(n: int) -> ExactPolynomial:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ExactPolynomial(partition_counts(n).p[: n + 1])


def parts_poly(n: int) -> ExactPolynomial:
    if n < 1:
        raise ValueError("n must be >= 1")
    return ExactPolynomial(parts_triangle(n).row(n))


@lru_cache(maxsize=4)
def parts_series(order: int) -> TruncatedBiseries:
    """prod_{k>=1} 1/(1 - z q^k) to q-order ``order``."""
    s = TruncatedBiseries.one(order)
    for k in range(1, order + 1):
        s = s.div_factor(1, k)
    return s


def parts_poly_series(n: int) -> ExactPolynomial:
    """F_n as the q^n coefficient of the two-variable generating product."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return parts_series(n).coeff(n).to_polynomial()


@lru_cache(maxsize=4)
def rank_series(order: int) -> TruncatedBiseries:
    """1 + sum_{m>=1} q^{m^2} / ((zq;q)_m (z^{-1}q;q)_m) to q-order ``order``."""
    total = TruncatedBiseries.one(order)
    t = TruncatedBiseries.one(order)
    m = 1
    while m * m <= order:
        t = t.div_factor(1, m).div_factor(-1, m)
        total = total + t.shift(m * m)
        m += 1
    return total


def rank_poly(n: int) -> tuple[LaurentPolynomial, ExactPolynomial]:
    """(N_n(z), r_n(z)): the full symmetric rank Laurent polynomial and its principal part."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lp = rank_series(n).coeff(n)
    return lp, lp.principal_part()


@lru_cache(maxsize=4)
def crank_series(order: int) -> TruncatedBiseries:
    """prod_{k>=1} (1 - q^k) / ((1 - z q^k)(1 - z^{-1} q^k)) to q-order ``order``."""
    s = TruncatedBiseries.one(order)
    for k in range(1, order + 1):
        s = s.div_factor(1, k).div_factor(-1, k).mul_factor(0, k)
    return s


def crank_poly(n: int, route: str = "auto") -> tuple[LaurentPolynomial, ExactPolynomial]:
    """(M_n(z), c_n(z)) for the crank statistic.

    ``route`` is ``"series"`` (generating product, n >= 2 only),
    ``"combinatorial"`` (enumeration, n <= 60) or ``"auto"`` (series except n = 1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if route == "auto":
        route = "combinatorial" if n == 1 else "series"
    if route == "series":
        if n == 1:
            raise ValueError(
                "the crank generating product does not give crank counts at n = 1 "
                "(it yields -1 at z^0); use route='combinatorial'"
            )
        lp = crank_series(n).coeff(n)
    elif route == "combinatorial":
        lp = LaurentPolynomial(oracle_counts(FamilyId.CRANK, n))
    else:
        raise ValueError(f"unknown route {route!r}")
    return lp, lp.principal_part()


@lru_cache(maxsize=4)
def durfee_series(order: int) -> TruncatedBiseries:
    """sum_{m>=1} q^{m^2} z^m / (q;q)_m^2 to q-order ``order``."""
    total = TruncatedBiseries.zero(order)
    t = TruncatedBiseries.one(order)
    m = 1
    while m * m <= order:
        t = t.div_factor(0, m).div_factor(0, m)
        total = total + t.shift(m * m, m)
        m += 1
    return total


def durfee_poly(n: int) -> ExactPolynomial:
    if n < 1:
        raise ValueError("n must be >= 1")
    return durfee_series(n).coeff(n).to_polynomial()


def family_poly(family: FamilyId | str, n: int) -> ExactPolynomial:
    """The ordinary polynomial of a family member (principal part for rank/crank)."""
    family = FamilyId(family)
    if family is FamilyId.TAYLOR:
        return taylor_poly(n)
    if family is FamilyId.PARTS:
        return parts_poly(n)
    if family is FamilyId.RANK:
        return rank_poly(n)[1]
    if family is FamilyId.CRANK:
        return crank_poly(n)[1]
    return durfee_poly(n)


def min_n(family: FamilyId | str) -> int:
    return 0 if FamilyId(family) is FamilyId.TAYLOR else 1


def durfee_degree(n: int) -> int:
    return isqrt(n)
