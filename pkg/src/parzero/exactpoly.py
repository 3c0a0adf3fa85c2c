"""Exact integer polynomials, Laurent polynomials and q-truncated bivariate series.

Nothing in this module touches floating point.  Coefficients are Python ints,
so sizes are unbounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class ExactPolynomial:
    """Dense polynomial with integer coefficients in ascending degree order.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "ExactPolynomial":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return poly_add(self, other)

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return poly_add(self, -other)

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return poly_mul(self, other)

    def __call__(self, x):
        """Exact Horner evaluation (ints, Fractions or anything closed under + and *)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def origin_multiplicity(self) -> int:
        """Number of vanishing low-order coefficients, i.e. the multiplicity of x = 0."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no finite root multiplicity at 0")
        m = 0
        while self.coeffs[m] == 0:
            m += 1
        return m

    def deflate_origin(self) -> tuple[int, "ExactPolynomial"]:
        """Split p(x) = x^m g(x) with g(0) != 0; returns (m, g)."""
        m = self.origin_multiplicity()
        return m, ExactPolynomial(self.coeffs[m:])

    def reversed(self) -> "ExactPolynomial":
        return ExactPolynomial(self.coeffs[::-1])

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def abs_coeff_sum(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def __repr__(self):
        return f"ExactPolynomial({list(self.coeffs)})"


def poly_add(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    return ExactPolynomial(a[k] + b[k] for k in range(n))


def poly_mul(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    if a.is_zero() or b.is_zero():
        return ExactPolynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                out[i + j] += ai * bj
    return ExactPolynomial(out)


class LaurentPolynomial:
    """Sparse Laurent polynomial in z: exponent -> nonzero integer coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        t = {}
        for e, c in (terms or {}).items():
            c = int(c)
            if c:
                t[int(e)] = c
        self._terms = dict(sorted(t.items()))

    @classmethod
    def from_dense(cls, zmin: int, coeffs: Iterable[int]) -> "LaurentPolynomial":
        return cls({zmin + i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"LaurentPolynomial({self._terms})"

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_exp(self) -> int:
        return max(self._terms) if self._terms else 0

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        t = dict(self._terms)
        for e, c in other._terms.items():
            t[e] = t.get(e, 0) + c
        return LaurentPolynomial(t)

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        t: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(t)

    def shift(self, a: int) -> "LaurentPolynomial":
        """Multiply by z^a."""
        return LaurentPolynomial({e + a: c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPolynomial":
        """Substitute z -> 1/z."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.mirror()

    def value_at_one(self) -> int:
        return sum(self._terms.values())

    def principal_part(self) -> ExactPolynomial:
        """The nonnegative-exponent part as an ordinary polynomial."""
        if not self._terms or self.max_exp() < 0:
            return ExactPolynomial()
        return ExactPolynomial(self[e] for e in range(self.max_exp() + 1))

    def to_polynomial(self) -> ExactPolynomial:
        if self._terms and self.min_exp() < 0:
            raise ValueError("Laurent polynomial has negative exponents")
        return self.principal_part()


class TruncatedBiseries:
    """Power series in q up to q^order whose coefficients are Laurent polynomials in z.

    Stored as a dense integer grid ``grid[j, e - zmin]`` (coefficient of q^j z^e)
    of Python ints; terms of q-order above ``order`` are silently dropped by
    every operation.
    """

    __slots__ = ("order", "zmin", "grid")

    def __init__(self, order: int, zmin: int, grid: np.ndarray):
        if order < 0:
            raise ValueError("order must be nonnegative")
        g = np.asarray(grid, dtype=object)
        if g.ndim != 2 or g.shape[0] != order + 1:
            raise ValueError("grid must have order + 1 rows")
        self.order = order
        self.zmin, self.grid = _trim(zmin, g)

    # construction -----------------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "TruncatedBiseries":
        return cls(order, 0, np.zeros((order + 1, 0), dtype=object))

    @classmethod
    def one(cls, order: int) -> "TruncatedBiseries":
        return cls.from_terms(order, {(0, 0): 1})

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[tuple[int, int], int]) -> "TruncatedBiseries":
        """Build from {(q_power, z_exponent): coefficient}; q powers above order are dropped."""
        kept = {k: v for k, v in terms.items() if 0 <= k[0] <= order and v}
        if not kept:
            return cls.zero(order)
        lo = min(e for _, e in kept)
        hi = max(e for _, e in kept)
        g = _zeros(order + 1, hi - lo + 1)
        for (j, e), c in kept.items():
            g[j, e - lo] += int(c)
        return cls(order, lo, g)

    @classmethod
    def from_qcoeffs(cls, order: int, qcoeffs: Iterable[LaurentPolynomial]) -> "TruncatedBiseries":
        terms = {}
        for j, lp in enumerate(qcoeffs):
            for e, c in lp.items():
                terms[(j, e)] = c
        return cls.from_terms(order, terms)

    # views ------------------------------------------------------------------
    @property
    def width(self) -> int:
        return self.grid.shape[1]

    def coeff(self, j: int) -> LaurentPolynomial:
        if not 0 <= j <= self.order:
            raise IndexError(f"q-power {j} outside 0..{self.order}")
        return LaurentPolynomial.from_dense(self.zmin, self.grid[j])

    @property
    def qcoeffs(self) -> tuple[LaurentPolynomial, ...]:
        return tuple(self.coeff(j) for j in range(self.order + 1))

    def terms(self) -> dict[tuple[int, int], int]:
        out = {}
        for j in range(self.order + 1):
            for i, c in enumerate(self.grid[j]):
                if c:
                    out[(j, self.zmin + i)] = int(c)
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedBiseries):
            return NotImplemented
        return self.order == other.order and self.terms() == other.terms()

    def __repr__(self):
        return f"TruncatedBiseries(order={self.order}, terms={self.terms()})"

    # arithmetic -------------------------------------------------------------
    def _check_order(self, other: "TruncatedBiseries"):
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other: "TruncatedBiseries") -> "TruncatedBiseries":
        self._check_order(other)
        lo = min(self.zmin, other.zmin)
        hi = max(self.zmin + self.width, other.zmin + other.width)
        g = _zeros(self.order + 1, hi - lo)
        g[:, self.zmin - lo:self.zmin - lo + self.width] += self.grid
        g[:, other.zmin - lo:other.zmin - lo + other.width] += other.grid
        return TruncatedBiseries(self.order, lo, g)

    def __neg__(self):
        return TruncatedBiseries(self.order, self.zmin, -self.grid)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "TruncatedBiseries") -> "TruncatedBiseries":
        return biseries_mul(self, other)

    def shift(self, q_power: int = 0, z_power: int = 0) -> "TruncatedBiseries":
        """Multiply by q^q_power z^z_power (q_power >= 0), truncating."""
        if q_power < 0:
            raise ValueError("negative q shifts are not series operations")
        g = _zeros(self.order + 1, self.width)
        if q_power <= self.order:
            g[q_power:] = self.grid[: self.order + 1 - q_power]
        return TruncatedBiseries(self.order, self.zmin + z_power, g)

    def div_factor(self, a: int, b: int) -> "TruncatedBiseries":
        """Multiply by 1/(1 - z^a q^b) via the recurrence S'_j = S_j + z^a S'_{j-b}."""
        if b < 1:
            raise ValueError("q exponent must be >= 1 for a convergent q-series")
        reach = a * (self.order // b)
        lo = self.zmin + min(0, reach)
        width = self.width + abs(reach)
        g = _zeros(self.order + 1, width)
        off = self.zmin - lo
        g[:, off:off + self.width] = self.grid
        for j in range(b, self.order + 1):
            src = g[j - b]
            if a >= 0:
                g[j, a:] += src[:width - a]
            else:
                g[j, :width + a] += src[-a:]
        return TruncatedBiseries(self.order, lo, g)

    def mul_factor(self, a: int, b: int) -> "TruncatedBiseries":
        """Multiply by (1 - z^a q^b)."""
        if b < 0:
            raise ValueError("q exponent must be nonnegative")
        return self - self.shift(b, a)


def _zeros(rows: int, cols: int) -> np.ndarray:
    g = np.empty((rows, cols), dtype=object)
    g.fill(0)
    return g


def _trim(zmin: int, g: np.ndarray) -> tuple[int, np.ndarray]:
    if g.shape[1] == 0:
        return 0, g
    nz = np.flatnonzero((g != 0).any(axis=0))
    if nz.size == 0:
        return 0, _zeros(g.shape[0], 0)
    lo, hi = int(nz[0]), int(nz[-1]) + 1
    return zmin + lo, g[:, lo:hi].copy()


def biseries_mul(a: TruncatedBiseries, b: TruncatedBiseries) -> TruncatedBiseries:
    """Product truncated at q-order N; both operands must share the same order."""
    a._check_order(b)
    N = a.order
    if a.width == 0 or b.width == 0:
        return TruncatedBiseries.zero(N)
    width = a.width + b.width - 1
    g = _zeros(N + 1, width)
    arows = [i for i in range(N + 1) if any(a.grid[i])]
    brows = [j for j in range(N + 1) if any(b.grid[j])]
    for i in arows:
        for j in brows:
            if i + j > N:
                break
            g[i + j] += np.convolve(a.grid[i], b.grid[j])
    return TruncatedBiseries(N, a.zmin + b.zmin, g)


def biseries_inv_factor(x_exponent: int, q_exponent: int, N: int) -> TruncatedBiseries:
    """Geometric expansion of 1/(1 - z^a q^b) truncated at q-order N."""
    if q_exponent < 1:
        raise ValueError("q exponent must be >= 1: 1/(1 - z^a) is not a q-series")
    if N < 0:
        raise ValueError("N must be nonnegative")
    terms = {(q_exponent * j, x_exponent * j): 1 for j in range(N // q_exponent + 1)}
    return TruncatedBiseries.from_terms(N, terms)
