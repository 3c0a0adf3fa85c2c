"""Simultaneous (Aberth-Ehrlich) root finding for exact integer polynomials.

Roots at x = 0 are removed exactly first.  The remaining polynomial is solved
in two stages: a vectorized complex128 Aberth pass for starting values, then
a multiprecision Aberth iteration in gmpy2 at the policy precision, which is
doubled on stagnation (up to 8x).  Each root carries a backward-error residual
|p(z)| / sum_k |a_k| |z|^k.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import gmpy2
import mpmath
import numpy as np
from gmpy2 import mpc, mpfr
from mpmath import mp

from .exactpoly import ExactPolynomial

log = logging.getLogger(__name__)

DEFAULT_RESIDUAL = 1e-30
STAGNATION_SWEEPS = 50
MAX_PRECISION_FACTOR = 8
MAX_SWEEPS = 2000
# start-angle offset per circle; irrational so equal-radius circles do not line up
_ANGLE_OFFSET = 0.6180339887498949


class RootFindingError(RuntimeError):
    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


@dataclass(frozen=True)
class ZeroSet:
    """Computed zeros of one polynomial.

    ``roots`` excludes the exactly deflated zeros at the origin.  ``clusters``
    lists index groups of roots closer than the merge tolerance (treated as
    one multiple root); it is empty for simple-rooted input.
    """

    poly: ExactPolynomial
    roots: tuple
    precision_bits: int
    max_residual: float
    deflated_origin_multiplicity: int
    family: str | None = None
    n: int | None = None
    clusters: tuple[tuple[int, ...], ...] = ()
    sweeps: int = 0
    residuals: tuple[float, ...] = field(default=(), repr=False)

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def deflated(self) -> ExactPolynomial:
        return self.poly.deflate_origin()[1]

    def as_complex(self) -> np.ndarray:
        return np.array([complex(z) for z in self.roots], dtype=complex)

    def multiplicities(self) -> list[int]:
        mult = [1] * len(self.roots)
        for group in self.clusters:
            for i in group:
                mult[i] = len(group)
        return mult


def precision_policy(p: ExactPolynomial) -> int:
    """Starting precision in bits for ``find_roots``."""
    bits = p.max_abs_coeff().bit_length()
    deg = max(p.degree, 0)
    return max(128, bits + 4 * math.ceil(math.log2(deg + 1)) + 64)


def fujiwara_bound(coeffs) -> float:
    """Fujiwara's upper bound on root moduli (ascending integer coefficients)."""
    n = len(coeffs) - 1
    lead = abs(coeffs[-1])
    best = 0.0
    for i in range(1, n + 1):
        c = abs(coeffs[n - i])
        if c == 0:
            continue
        if i == n:
            c = c / 2
        best = max(best, math.exp((_log(c) - _log(lead)) / i))
    return 2 * best


def _log(c) -> float:
    if isinstance(c, int):
        b = c.bit_length()
        if b > 1000:
            return math.log(c >> (b - 60)) + (b - 60) * math.log(2)
        return math.log(c)
    return math.log(c)


def initial_guesses(coeffs) -> np.ndarray:
    """Points on concentric circles: radii from the upper convex hull of
    (k, log|a_k|), clamped between Fujiwara bounds for p and for its reversal.
    Angles are equally spaced with a fixed offset, so the result is deterministic."""
    n = len(coeffs) - 1
    la = [(_log(abs(c)) if c else -math.inf) for c in coeffs]
    hull: list[int] = []
    for k in range(n + 1):
        if la[k] == -math.inf:
            continue
        while len(hull) >= 2:
            i0, i1 = hull[-2], hull[-1]
            if (la[i1] - la[i0]) * (k - i0) <= (la[k] - la[i0]) * (i1 - i0):
                hull.pop()
            else:
                break
        hull.append(k)
    upper = fujiwara_bound(coeffs)
    lower = 1.0 / fujiwara_bound(list(reversed(coeffs)))
    pts = []
    for idx in range(len(hull) - 1):
        k0, k1 = hull[idx], hull[idx + 1]
        m = k1 - k0
        r = math.exp((la[k0] - la[k1]) / m)
        r = min(max(r, lower), upper)
        off = _ANGLE_OFFSET * (idx + 1) + 0.25
        for j in range(m):
            pts.append(r * complex(math.cos(2 * math.pi * j / m + off), math.sin(2 * math.pi * j / m + off)))
    return np.array(pts, dtype=complex)


# --- double-precision warm start ----------------------------------------------

def _horner_np(c, z):
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    for cc in c[::-1]:
        dp = dp * z + p
        p = p * z + cc
    return p, dp


def _newton_ratio_np(cf, z):
    n = len(cf) - 1
    out = np.empty_like(z)
    inside = np.abs(z) <= 1
    if inside.any():
        p, dp = _horner_np(cf, z[inside])
        out[inside] = p / dp
    if (~inside).any():
        y = 1 / z[~inside]
        q, dq = _horner_np(cf[::-1], y)
        out[~inside] = 1 / (y * (n - y * dq / q))
    return out


def _aberth_double(coeffs, z: np.ndarray, max_sweeps: int = 300) -> np.ndarray:
    scale = max(abs(c) for c in coeffs)
    shift = max(scale.bit_length() - 900, 0)
    cf = np.array([float(c >> shift) if shift else float(c) for c in coeffs], dtype=complex)
    z = z.copy()
    best = np.inf
    stall = 0
    with np.errstate(all="ignore"):
        for _ in range(max_sweeps):
            ratio = _newton_ratio_np(cf, z)
            d = z[:, None] - z[None, :]
            np.fill_diagonal(d, 1)
            inv = 1 / d
            np.fill_diagonal(inv, 0)
            w = ratio / (1 - ratio * inv.sum(axis=1))
            bad = ~np.isfinite(w)
            w[bad] = 0
            z = z - w
            step = np.max(np.abs(w) / np.maximum(np.abs(z), 1e-300))
            if step < 1e-13:
                break
            if step < best / 2:
                best = step
                stall = 0
            else:
                stall += 1
                if stall > 40:
                    break
    return z


# --- multiprecision stage -----------------------------------------------------

def _to_mpc(z: complex) -> mpc:
    return mpc(mpfr(z.real), mpfr(z.imag))


def _eval_point(A, Arev, n, z):
    """Newton ratio p/p' and backward-error residual at z."""
    az = abs(z)
    if az <= 1:
        p = mpc(0)
        dp = mpc(0)
        sc = mpfr(0)
        for c in reversed(A):
            dp = dp * z + p
            p = p * z + c
            sc = sc * az + abs(c)
        if dp == 0:
            return None, abs(p) / sc if sc else mpfr(0)
        return p / dp, abs(p) / sc
    y = 1 / z
    ay = abs(y)
    q = mpc(0)
    dq = mpc(0)
    sc = mpfr(0)
    for c in reversed(Arev):
        dq = dq * y + q
        q = q * y + c
        sc = sc * ay + abs(c)
    res = abs(q) / sc
    if q == 0:
        return mpc(0), res
    den = y * (n - y * dq / q)
    if den == 0:
        return None, res
    return 1 / den, res


def _aberth_mp(A, z0: list, prec: int, target: float, start_sweep: int = 0):
    """Jacobi-style Aberth sweeps at fixed precision.

    Returns (roots, residuals, sweeps, status) with status one of
    'converged', 'floor' (all roots at the precision floor but above target),
    'stagnated'.
    """
    n = len(A) - 1
    Arev = list(reversed(A))
    with gmpy2.context(gmpy2.get_context(), precision=prec):
        z = [mpc(v) for v in z0]
        floor = mpfr(2) ** (-prec) * (4 * n + 4)
        tiny_step = mpfr(2) ** (-prec + 6)
        active = list(range(n))
        res = [mpfr("inf")] * n
        best_max = mpfr("inf")
        last_improve = 0
        sweep = 0
        while active:
            sweep += 1
            updates = []
            for i in active:
                zi = z[i]
                ratio, r = _eval_point(A, Arev, n, zi)
                res[i] = r
                if ratio is None:
                    # critical point: nudge deterministically
                    updates.append((i, zi * mpfr("1e-3") + mpfr("1e-3"), False))
                    continue
                s = mpc(0)
                for j in range(n):
                    if j != i:
                        d = zi - z[j]
                        if d != 0:
                            s += 1 / d
                w = ratio / (1 - ratio * s)
                done = r <= floor or abs(w) <= tiny_step * abs(zi)
                updates.append((i, w, done))
            still = []
            for i, w, done in updates:
                z[i] = z[i] - w
                if not done:
                    still.append(i)
            active = still
            cur = max(res)
            if cur < best_max / 2:
                best_max = cur
                last_improve = sweep
            if not active:
                break
            if sweep - last_improve >= STAGNATION_SWEEPS or start_sweep + sweep >= MAX_SWEEPS:
                return z, res, sweep, "stagnated"
        # final residuals at the converged points
        for i in range(n):
            res[i] = _eval_point(A, Arev, n, z[i])[1]
        status = "converged" if max(res) <= target else "floor"
        return z, res, sweep, status


def _clusters(z: np.ndarray, tol: float) -> tuple[tuple[int, ...], ...]:
    if len(z) < 2 or tol <= 0:
        return ()
    order = np.argsort(z.real)
    zs = z[order]
    parent = list(range(len(z)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(len(zs)):
        b = a + 1
        while b < len(zs) and zs[b].real - zs[a].real <= tol:
            if abs(zs[b] - zs[a]) <= tol:
                parent[find(order[a])] = find(order[b])
            b += 1
    groups: dict[int, list[int]] = {}
    for i in range(len(z)):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values()) if len(g) > 1)


def find_roots(
    p: ExactPolynomial,
    target_residual: float = DEFAULT_RESIDUAL,
    *,
    precision_bits: int | None = None,
    family: str | None = None,
    n: int | None = None,
    warm_start: bool = True,
) -> ZeroSet:
    """All complex zeros of ``p``.

    Every returned root z satisfies |p(z)| / sum_k |a_k||z|^k <= target_residual.
    Raises RootFindingError if that cannot be reached at 8x the starting precision.
    """
    if p.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    if target_residual <= 0:
        raise ValueError("target_residual must be positive")
    m0, g = p.deflate_origin()
    prec0 = precision_bits or precision_policy(p)
    if g.degree == 0:
        return ZeroSet(p, (), prec0, 0.0, m0, family, n)

    A = [gmpy2.mpz(c) for c in g.coeffs]
    deg = g.degree
    if deg == 1:
        z0 = [complex(-g.coeffs[0] / g.coeffs[1])]
    else:
        start = initial_guesses(g.coeffs)
        if warm_start:
            start = _aberth_double(g.coeffs, start)
            bad = ~np.isfinite(start)
            if bad.any():
                start[bad] = initial_guesses(g.coeffs)[bad]
        z0 = list(start)

    prec = prec0
    total = 0
    history = []
    with gmpy2.context(gmpy2.get_context(), precision=prec):
        zcur = [_to_mpc(complex(v)) for v in z0]
    while True:
        zcur, res, sweeps, status = _aberth_mp(A, zcur, prec, target_residual, total)
        total += sweeps
        history.append({"precision_bits": prec, "sweeps": sweeps, "status": status,
                        "max_residual": float(max(res))})
        log.debug("aberth deg=%d prec=%d sweeps=%d status=%s", deg, prec, sweeps, status)
        if status == "converged":
            break
        if prec * 2 > prec0 * MAX_PRECISION_FACTOR:
            raise RootFindingError(
                f"no convergence for degree {deg} at {prec} bits",
                {"history": history, "max_residual": float(max(res)),
                 "worst_roots": sorted(range(deg), key=lambda i: -res[i])[:5]},
            )
        prec *= 2

    with mp.workprec(prec):
        roots = tuple(mpmath.mpc(_mpfr_to_mpf(v.real), _mpfr_to_mpf(v.imag)) for v in zcur)
    zc = np.array([complex(v) for v in zcur])
    clusters = _clusters(zc, 2.0 ** (-prec / 4))
    return ZeroSet(
        poly=p,
        roots=roots,
        precision_bits=prec,
        max_residual=float(max(res)),
        deflated_origin_multiplicity=m0,
        family=family,
        n=n,
        clusters=clusters,
        sweeps=total,
        residuals=tuple(float(r) for r in res),
    )


def _mpfr_to_mpf(x: mpfr) -> mpmath.mpf:
    if x == 0:
        return mpmath.mpf(0)
    man, exp = x.as_mantissa_exp()
    return mpmath.mpf((int(man), int(exp)))


def residual(p: ExactPolynomial, z, prec: int = 256) -> float:
    """Backward-error residual |p(z)| / sum |a_k| |z|^k evaluated in mpmath."""
    with mp.workprec(prec):
        z = mpmath.mpc(z)
        az = abs(z)
        acc = mpmath.mpc(0)
        sc = mpmath.mpf(0)
        for c in reversed(p.coeffs):
            acc = acc * z + c
            sc = sc * az + abs(c)
        return float(abs(acc) / sc) if sc else 0.0
