"""Arbitrary-precision complex evaluation on top of mpmath.

Values are ``mpmath.mpc`` numbers; every routine takes an explicit
``prec`` (bits) and works inside ``mpmath.workprec(prec)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
from mpmath import mp

from .exactpoly import ExactPolynomial

DEFAULT_PREC = 128
MIN_PREC = 64
# inputs rounded onto the unit circle at low precision may sit just outside it
DISK_SLACK = 1e-12


class DomainError(ValueError):
    """Argument outside the region where the routine is defined."""


class PrecisionError(ValueError):
    """Requested working precision cannot represent the input faithfully."""


@dataclass(frozen=True)
class EvalResult:
    value: mpmath.mpc
    error_bound: float
    terms_used: int
    precision_bits: int
    heuristic: bool = False


def hp(x, prec: int = DEFAULT_PREC) -> mpmath.mpc:
    """Coerce ints, floats, strings, Fractions or mp numbers to an mpc at ``prec`` bits."""
    if prec < MIN_PREC:
        raise PrecisionError(f"precision must be at least {MIN_PREC} bits")
    with mp.workprec(prec):
        if isinstance(x, str):
            return mpmath.mpc(mpmath.mpmathify(x))
        if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, (int, float)):
            return mpmath.mpc(mpmath.mpf(x.numerator) / x.denominator)
        return mpmath.mpc(x)


def eval_P(x, tol: float = 1e-30, prec: int = DEFAULT_PREC, max_terms: int = 1_000_000) -> EvalResult:
    """prod_{n>=1} 1/(1 - x^n) for |x| < 1 with a tail bound.

    The log of the omitted factors is bounded by |x|^{N+1}/(1-|x|)^2; rounding is
    charged at N * 2^{2-prec} relative.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    with mp.workprec(prec + 16):
        x = hp(x, prec + 16)
        r = abs(x)
        if r >= 1:
            raise DomainError(f"|x| = {mpmath.nstr(r, 8)} is not inside the unit disk")
        if r == 0:
            return EvalResult(mpmath.mpc(1), 0.0, 1, prec)
        prod = mpmath.mpc(1)
        xn = mpmath.mpc(1)
        one_minus_r = 1 - r
        N = 0
        while True:
            N += 1
            if N > max_terms:
                raise DomainError("|x| too close to 1 for the requested tolerance")
            xn *= x
            prod *= 1 - xn
            tail_log = r ** (N + 1) / one_minus_r**2
            if tail_log < 0.5:
                val_abs = 1 / abs(prod)
                tail = val_abs * (mpmath.expm1(tail_log))
                if tail <= tol / 2:
                    break
        value = 1 / prod
        rounding = abs(value) * N * mpmath.ldexp(1, 2 - prec)
        err = float(tail + rounding)
    with mp.workprec(prec):
        return EvalResult(+value, err, N, prec)


def truncated_P(x, terms: int, prec: int = DEFAULT_PREC) -> mpmath.mpc:
    """prod_{n=1}^{terms} 1/(1 - x^n) with no tail control."""
    with mp.workprec(prec + 16):
        x = hp(x, prec + 16)
        prod = mpmath.mpc(1)
        xn = mpmath.mpc(1)
        for _ in range(terms):
            xn *= x
            prod *= 1 - xn
        v = 1 / prod
    with mp.workprec(prec):
        return +v


@lru_cache(maxsize=16)
def _bernoulli_table(prec: int, count: int) -> tuple:
    with mp.workprec(prec):
        return tuple(mpmath.bernoulli(k) for k in range(count))


def _li2_series(x, prec: int):
    # sum x^n / n^2, used for |x| <= 1/2
    eps = mpmath.ldexp(1, -prec - 8)
    s = mpmath.mpc(0)
    xn = mpmath.mpc(1)
    n = 0
    while True:
        n += 1
        xn *= x
        term = xn / (n * n)
        s += term
        if abs(xn) < eps:
            return s


def _li2_bernoulli(x, prec: int):
    # Li2(x) = sum_k B_k u^{k+1}/(k+1)!, u = -log(1-x); converges for |u| < 2 pi
    u = -mpmath.log(1 - x)
    au = abs(u)
    if au == 0:
        return mpmath.mpc(0)
    # terms decay like (|u| / 2pi)^k
    ratio = float(au) / (2 * math.pi)
    count = int((prec + 16) * math.log(2) / -math.log(ratio)) + 8
    bern = _bernoulli_table(prec, count + 1)
    s = mpmath.mpc(0)
    up = u
    fact = mpmath.mpf(1)
    for k in range(count):
        fact *= k + 1
        if k == 1 or k % 2 == 0:
            s += bern[k] * up / fact
        up *= u
    return s


def dilog(x, prec: int = DEFAULT_PREC) -> mpmath.mpc:
    """Principal-branch dilogarithm Li2(x) on the closed unit disk.

    |x| <= 1/2: direct power series.  |1 - x| < 1/2: reflection
    Li2(x) = pi^2/6 - log(x) log(1-x) - Li2(1-x).  Elsewhere in the disk:
    Bernoulli series in -log(1-x), whose argument stays below 1.8 in modulus.
    """
    wp = prec + 20
    with mp.workprec(wp):
        x = hp(x, wp)
        r = abs(x)
        if r > 1 + DISK_SLACK:
            raise DomainError("dilog is only evaluated on the closed unit disk")
        if x == 0:
            v = mpmath.mpc(0)
        elif r <= 0.5:
            v = _li2_series(x, wp)
        elif abs(1 - x) < 0.5:
            y = 1 - x
            if y == 0:
                v = mpmath.mpc(mpmath.pi**2 / 6)
            else:
                v = mpmath.pi**2 / 6 - mpmath.log(x) * mpmath.log(y) - _li2_series(y, wp)
        else:
            v = _li2_bernoulli(x, wp)
    with mp.workprec(prec):
        return +v


def modular_check(tau, q_order: int | None = None, prec: int = 256) -> float:
    """Relative residual of P(e^{-2 pi tau}) = psi(tau) P(e^{-2 pi / tau}).

    psi(tau) = sqrt(tau) exp[(pi/12)(1/tau - tau)].  With ``q_order`` set both
    products are truncated to that many factors; otherwise they are summed to
    the working precision.
    """
    with mp.workprec(prec + 16):
        tau = hp(tau, prec + 16)
        if tau.real <= 0:
            raise DomainError("Re(tau) must be positive")
        x1 = mpmath.exp(-2 * mpmath.pi * tau)
        x2 = mpmath.exp(-2 * mpmath.pi / tau)
        limit = 1 - mpmath.mpf("1e-6")
        if abs(x1) > limit or abs(x2) > limit:
            raise DomainError("both nomes must satisfy |q| <= 1 - 1e-6")
        if q_order is None:
            tol = mpmath.ldexp(1, -prec - 8)
            lhs = eval_P(x1, tol=float(tol) or 1e-300, prec=prec + 16).value
            rhs_p = eval_P(x2, tol=float(tol) or 1e-300, prec=prec + 16).value
        else:
            if q_order < 1:
                raise ValueError("q_order must be >= 1")
            lhs = truncated_P(x1, q_order, prec + 16)
            rhs_p = truncated_P(x2, q_order, prec + 16)
        psi = mpmath.sqrt(tau) * mpmath.exp(mpmath.pi / 12 * (1 / tau - tau))
        return float(abs(lhs - psi * rhs_p) / abs(lhs))


def poly_eval_precision(p: ExactPolynomial) -> int:
    """Smallest precision eval_poly accepts for p."""
    return max(MIN_PREC, p.max_abs_coeff().bit_length() + 64)


def eval_poly(p: ExactPolynomial, x, prec: int = DEFAULT_PREC) -> mpmath.mpc:
    """Horner evaluation of an exact polynomial at ``prec`` bits."""
    need = poly_eval_precision(p)
    if prec < need:
        raise PrecisionError(f"{prec} bits requested, at least {need} needed for these coefficients")
    with mp.workprec(prec):
        x = hp(x, prec)
        acc = mpmath.mpc(0)
        for c in reversed(p.coeffs):
            acc = acc * x + c
        return acc


def arg_2pi(z) -> mpmath.mpf:
    """Argument in [0, 2 pi)."""
    a = mpmath.arg(z)
    if a < 0:
        a += 2 * mpmath.pi
    return a
