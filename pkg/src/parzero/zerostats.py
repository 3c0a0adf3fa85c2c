"""Angular and radial statistics of computed zero sets."""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np
from mpmath import mp

from .exactpoly import ExactPolynomial
from .hpnum import arg_2pi
from .rootfinder import ZeroSet

TWO_PI = 2 * math.pi
ORIGIN_EPS = 1e-15


@dataclass(frozen=True)
class SectorHistogram:
    bin_edges: np.ndarray
    counts: np.ndarray
    total: int

    def max_min_ratio(self) -> float:
        lo = int(self.counts.min())
        return float("inf") if lo == 0 else float(self.counts.max()) / lo


@dataclass(frozen=True)
class DiscrepancyReport:
    theta1: float
    theta2: float
    observed: int
    expected: float
    bound: float
    satisfied: bool


def _log_ratio(total: int, scale_sq: int) -> float:
    """log(total / sqrt(scale_sq)) for big integers without float overflow."""
    return _biglog(total) - _biglog(scale_sq) / 2


def _biglog(v: int) -> float:
    if v <= 0:
        raise ValueError("log of a nonpositive integer")
    shift = max(v.bit_length() - 64, 0)
    return math.log(v >> shift) + shift * math.log(2)


def et_bound(p: ExactPolynomial) -> float:
    """16 sqrt(n log(sum |a_k| / sqrt|a_0 a_n|)) for a polynomial with a_0 a_n != 0."""
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    a0, an = p.coeffs[0], p.coeffs[-1]
    if a0 == 0:
        raise ValueError("constant term is zero: deflate the origin roots before bounding")
    total = sum(abs(c) for c in p.coeffs)
    return 16 * math.sqrt(p.degree * _log_ratio(total, abs(a0 * an)))


def _nonzero_roots(zs) -> list:
    roots = zs.roots if isinstance(zs, ZeroSet) else list(zs)
    return [r for r in roots if abs(r) > ORIGIN_EPS]


def root_args(zs) -> np.ndarray:
    """Arguments in [0, 2pi), at the zero set's working precision."""
    prec = zs.precision_bits if isinstance(zs, ZeroSet) else 128
    with mp.workprec(prec):
        return np.array([float(arg_2pi(mpmath.mpc(r))) for r in _nonzero_roots(zs)])


def _snap(args: np.ndarray, edges, tol: float = 1e-14) -> np.ndarray:
    # pull arguments that sit on an edge up to rounding exactly onto it
    out = args.copy()
    for e in edges:
        out[np.abs(out - e) <= tol] = e
    return out


def discrepancy(zs: ZeroSet, theta1: float, theta2: float, bound: float | None = None) -> DiscrepancyReport:
    """Sector count of arg z in [theta1, theta2] against n (theta2 - theta1) / 2pi.

    The bound defaults to et_bound of the deflated polynomial; the sector is
    closed at both ends.
    """
    if not (0 <= theta1 < theta2 <= TWO_PI + 1e-15):
        raise ValueError("need 0 <= theta1 < theta2 <= 2 pi")
    args = _snap(root_args(zs), (theta1, theta2))
    n = len(args)
    if theta2 >= TWO_PI and theta1 <= 0:
        observed = n
    else:
        observed = int(np.count_nonzero((args >= theta1) & (args <= theta2)))
    expected = n * (theta2 - theta1) / TWO_PI
    if bound is None:
        bound = et_bound(zs.deflated)
    return DiscrepancyReport(theta1, theta2, observed, expected, bound, abs(observed - expected) < bound)


def sector_histogram(zs, bins: int, offset: float = 0.0) -> SectorHistogram:
    """Equal-width angular bins over [offset, offset + 2pi); bin i is [e_i, e_{i+1})."""
    if bins < 2:
        raise ValueError("bins must be >= 2")
    args = root_args(zs)
    edges = offset + np.linspace(0.0, TWO_PI, bins + 1)
    width = TWO_PI / bins
    rel = np.mod(args - offset, TWO_PI) / width
    # arguments within rounding of an edge go to the bin starting there
    near = np.abs(rel - np.round(rel)) < 1e-12
    rel[near] = np.round(rel[near])
    idx = np.floor(rel).astype(int) % bins
    counts = np.bincount(idx, minlength=bins)
    return SectorHistogram(edges, counts, int(counts.sum()))


# --- regions for order-alpha counting ----------------------------------------------

@dataclass(frozen=True)
class Disk:
    radius: float

    def contains(self, z: np.ndarray) -> np.ndarray:
        return np.abs(z) <= self.radius


@dataclass(frozen=True)
class Annulus:
    inner: float
    outer: float = math.inf

    def contains(self, z: np.ndarray) -> np.ndarray:
        r = np.abs(z)
        return (r >= self.inner) & (r <= self.outer)


@dataclass(frozen=True)
class Box:
    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def contains(self, z: np.ndarray) -> np.ndarray:
        return (z.real >= self.re_min) & (z.real <= self.re_max) & (z.imag >= self.im_min) & (z.imag <= self.im_max)


@dataclass(frozen=True)
class Plane:
    def contains(self, z: np.ndarray) -> np.ndarray:
        return np.ones(z.shape, dtype=bool)


def region_count(zs, region) -> int:
    z = np.array([complex(r) for r in _nonzero_roots(zs)], dtype=complex)
    return int(np.count_nonzero(region.contains(z)))


def order_alpha_counts(zs, region, alpha: float) -> float:
    """(number of deflated roots in region) / degree^alpha."""
    if not (0 < alpha <= 1):
        raise ValueError("alpha must lie in (0, 1]")
    roots = _nonzero_roots(zs)
    if not roots:
        raise ValueError("no nonzero roots")
    return region_count(zs, region) / len(roots) ** alpha


def modulus_fraction(zs, lo: float, hi: float) -> float:
    """Fraction of the nonzero roots with lo <= |z| <= hi."""
    return region_count(zs, Annulus(lo, hi)) / len(_nonzero_roots(zs))
