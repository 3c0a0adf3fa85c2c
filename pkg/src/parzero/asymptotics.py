"""Closed-form asymptotics for the Taylor and parts polynomials, and their
comparison against exact evaluation."""
from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

import mpmath
from mpmath import mp

from .families import parts_poly, partition_counts, taylor_poly
from .hpnum import DEFAULT_PREC, DomainError, dilog, eval_P, eval_poly, hp, poly_eval_precision

# standoff from the unit circle separating the inner and outer regimes
DEFAULT_DELTA = 0.05
INNER_TERMS = ((0, 1), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    x: mpmath.mpc | None
    exact: mpmath.mpc
    approx: mpmath.mpc
    rel_error: float


def _report(n, x, exact, approx) -> AsymptoticReport:
    rel = abs(exact - approx) / abs(exact) if exact != 0 else float("inf")
    return AsymptoticReport(n, x, exact, approx, float(rel))


@dataclass(frozen=True)
class SaddleConstants:
    """a = pi sqrt(2/3), lambda_n = sqrt(n - 1/24), m = 2 pi (n - 1/24),
    alpha = sqrt(pi / (12 m)), sigma = sqrt(pi m / 12)."""

    n: int
    a: mpmath.mpf
    lambda_n: mpmath.mpf
    m: mpmath.mpf
    alpha: mpmath.mpf
    sigma: mpmath.mpf

    @classmethod
    def for_n(cls, n: int, prec: int = DEFAULT_PREC) -> "SaddleConstants":
        if n < 1:
            raise ValueError("n must be >= 1")
        with mp.workprec(prec):
            shifted = n - mpmath.mpf(1) / 24
            a = mpmath.pi * mpmath.sqrt(mpmath.mpf(2) / 3)
            m = 2 * mpmath.pi * shifted
            return cls(n, a, mpmath.sqrt(shifted), m,
                       mpmath.sqrt(mpmath.pi / (12 * m)), mpmath.sqrt(mpmath.pi * m / 12))


# --- partition numbers and Taylor polynomials ------------------------------------

def hr_approx(n: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """exp(pi sqrt(2n/3)) / (4 n sqrt 3)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    with mp.workprec(prec):
        return mpmath.exp(mpmath.pi * mpmath.sqrt(mpmath.mpf(2 * n) / 3)) / (4 * n * mpmath.sqrt(3))


def hr_ratio(n: int, prec: int = DEFAULT_PREC) -> float:
    """p_n divided by its leading asymptotic."""
    p = partition_counts(n).p[n]
    with mp.workprec(prec):
        return float(mpmath.mpf(p) / hr_approx(n, prec))


def _outer_point(x, delta, prec):
    x = hp(x, prec)
    if abs(x) < 1 + delta:
        raise DomainError(f"|x| must be >= 1 + {delta} for the outer asymptotics")
    return x


def sn_approx(n: int, x, prec: int = DEFAULT_PREC, delta: float = DEFAULT_DELTA) -> mpmath.mpc:
    """Leading term x^{n+1}/(x-1) * e^{a lambda_n} lambda_n^{-2} / (4 sqrt 3) for |x| >= 1 + delta."""
    with mp.workprec(prec):
        x = _outer_point(x, delta, prec)
        c = SaddleConstants.for_n(n, prec)
        return x ** (n + 1) / (x - 1) * mpmath.exp(c.a * c.lambda_n) / (c.lambda_n**2 * 4 * mpmath.sqrt(3))


def exact_prec(p, x_abs: float, prec: int = DEFAULT_PREC) -> int:
    """Working precision for a faithful Horner evaluation of p near |x| = x_abs."""
    growth = p.degree * max(math.log2(max(x_abs, 1.0)), 0.0)
    return max(prec, poly_eval_precision(p) + 64, int(growth) + 64)


def sn_report(n: int, x, prec: int = DEFAULT_PREC, delta: float = DEFAULT_DELTA) -> AsymptoticReport:
    p = taylor_poly(n)
    with mp.workprec(prec):
        xx = hp(x, prec)
    wp = exact_prec(p, float(abs(xx)), prec)
    exact = eval_poly(p, xx, wp)
    approx = sn_approx(n, xx, wp, delta)
    with mp.workprec(wp):
        return _report(n, xx, exact, approx)


# --- parts polynomials outside the disk ------------------------------------------

def fn_outer_approx(n: int, x, prec: int = DEFAULT_PREC, delta: float = DEFAULT_DELTA) -> mpmath.mpc:
    """x^n P(1/x): the partition generating product evaluated at 1/x."""
    with mp.workprec(prec):
        x = _outer_point(x, delta, prec)
        tol = float(mpmath.ldexp(1, -prec)) or 1e-300
        return x**n * eval_P(1 / x, tol=tol, prec=prec).value


def fn_outer_report(n: int, x, prec: int = DEFAULT_PREC, delta: float = DEFAULT_DELTA) -> AsymptoticReport:
    p = parts_poly(n)
    with mp.workprec(prec):
        xx = hp(x, prec)
    wp = exact_prec(p, float(abs(xx)), prec)
    exact = eval_poly(p, xx, wp)
    approx = fn_outer_approx(n, xx, wp, delta)
    with mp.workprec(wp):
        return _report(n, xx, exact, approx)


def fn_outer_gap(n: int, x, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """|F_n(x)/x^n - P(1/x)|, computed at the precision needed for exact F_n."""
    p = parts_poly(n)
    with mp.workprec(prec):
        xx = hp(x, prec)
    wp = exact_prec(p, float(abs(xx)), prec) + 64
    exact = eval_poly(p, xx, wp)
    with mp.workprec(wp):
        limit = eval_P(1 / xx, tol=float(mpmath.ldexp(1, -wp)) or 1e-300, prec=wp).value
        return abs(exact / xx**n - limit)


# --- parts polynomials inside the disk ---------------------------------------------

def w_hk(x, h: int, k: int, tol: float = 1e-30, prec: int = DEFAULT_PREC) -> mpmath.mpc:
    """(1/2k) log(1 - x^k) + sum over l not divisible by k of (x^l / l) / (e^{-2 pi i l h/k} - 1).

    The l-sum is cut once the geometric tail bound
    |x|^{L+1} / ((L+1) * min_gap * (1 - |x|)) drops below tol/2.
    """
    if k < 1 or gcd(h, k) != 1:
        raise ValueError(f"(h, k) = ({h}, {k}) must satisfy k >= 1 and gcd(h, k) = 1")
    with mp.workprec(prec + 10):
        x = hp(x, prec + 10)
        r = abs(x)
        if r >= 1:
            raise DomainError("w_hk needs |x| < 1")
        total = mpmath.log(1 - x**k) / (2 * k)
        if k == 1 or r == 0:
            return total if r else mpmath.mpc(0)
        roots = [mpmath.expjpi(-2 * mpmath.mpf(l * h) / k) - 1 for l in range(1, k)]
        min_gap = min(abs(v) for v in roots)
        xl = mpmath.mpc(1)
        l = 0
        while True:
            l += 1
            xl *= x
            if l % k:
                total += xl / l / roots[(l % k) - 1]
            if r ** (l + 1) / ((l + 1) * min_gap * (1 - r)) < tol / 2:
                break
    with mp.workprec(prec):
        return +total


def I_k(n: int, x, k: int, prec: int = DEFAULT_PREC) -> mpmath.mpc:
    """Saddle-point amplitude attached to the k-th roots of unity:

        L^{1/2} exp(2 sqrt(n) L) / (2 sqrt(pi) n^{3/4}),   L = sqrt(Li2(x^k)) / k,

    principal branches throughout.  The 1/(2 sqrt(pi)) normalization is the
    Gaussian width of the saddle; with it exact/approx -> 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    with mp.workprec(prec + 10):
        x = hp(x, prec + 10)
        if abs(x) >= 1:
            raise DomainError("I_k needs |x| < 1")
        L = mpmath.sqrt(dilog(x**k, prec + 10)) / k
        v = mpmath.sqrt(L) * mpmath.exp(2 * mpmath.sqrt(n) * L) / (2 * mpmath.sqrt(mpmath.pi) * mpmath.mpf(n) ** 0.75)
    with mp.workprec(prec):
        return +v


def inner_terms(n: int, x, prec: int = DEFAULT_PREC, delta: float = DEFAULT_DELTA) -> list[mpmath.mpc]:
    """The four contributions from u near 1, -1, e^{2 pi i/3}, e^{4 pi i/3}."""
    with mp.workprec(prec):
        x = hp(x, prec)
        if abs(x) > 1 - delta:
            raise DomainError(f"inner asymptotics need |x| <= 1 - {delta}")
        if x.imag < 0:
            raise DomainError("inner asymptotics are stated for the closed upper half of the disk")
        out = []
        for h, k in INNER_TERMS:
            phase = mpmath.expjpi(-2 * mpmath.mpf(n * h) / k)
            out.append(phase * mpmath.exp(w_hk(x, h, k, tol=float(mpmath.ldexp(1, -prec)), prec=prec))
                       * I_k(n, x, k, prec))
        return out


def fn_inner_approx(n: int, x, prec: int = DEFAULT_PREC, delta: float = DEFAULT_DELTA) -> mpmath.mpc:
    """Four-term approximation of F_n(x) inside the upper unit disk."""
    with mp.workprec(prec):
        return mpmath.fsum(inner_terms(n, x, prec, delta))


def fn_inner_report(n: int, x, prec: int = DEFAULT_PREC, delta: float = DEFAULT_DELTA,
                    terms: int = 4) -> AsymptoticReport:
    p = parts_poly(n)
    with mp.workprec(prec):
        xx = hp(x, prec)
    wp = exact_prec(p, 1.0, prec)
    exact = eval_poly(p, xx, wp)
    parts = inner_terms(n, xx, prec, delta)
    with mp.workprec(wp):
        approx = mpmath.fsum(parts[:terms])
        return _report(n, xx, exact, approx)


def hr_report(n: int, prec: int = DEFAULT_PREC) -> AsymptoticReport:
    p = partition_counts(n).p[n]
    with mp.workprec(prec):
        return _report(n, None, mpmath.mpc(p), mpmath.mpc(hr_approx(n, prec)))
