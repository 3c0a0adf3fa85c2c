"""Dilogarithm level-curve geometry in the upper unit disk.

f_k(x) = Re sqrt(Li2(x^k)) / k for k = 1, 2, 3.  The disk splits into regions
where one f_k dominates; the dominance boundaries gamma_{k,l} together with
the unit semicircle form the zero attractor of the parts polynomials.

Curve tracing runs in float64 (scipy's Spence function gives Li2) because it
needs ~10^6 evaluations; classification and point checks use the
arbitrary-precision dilogarithm from ``hpnum``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np
from mpmath import mp
from scipy.special import spence

from .hpnum import DomainError, DISK_SLACK, dilog, hp

KS = (1, 2, 3)
PAIRS = ((1, 2), (1, 3), (2, 3))
CLASSIFY_TOL = 1e-12
DOMINANCE_TOL = 1e-10  # float64 slack for the gamma condition during tracing
SEMICIRCLE = "semicircle"


@dataclass(frozen=True)
class RegionLabel:
    """Dominant index k, or a boundary between two indices."""

    k: int | None = None
    boundary: tuple[int, int] | None = None

    def __str__(self):
        if self.boundary:
            return f"B{self.boundary[0]}{self.boundary[1]}"
        return str(self.k)


@dataclass(frozen=True)
class CurvePolyline:
    label: tuple[int, int] | str
    points: np.ndarray  # complex128, ordered
    resolution: float

    @property
    def name(self) -> str:
        if self.label == SEMICIRCLE:
            return SEMICIRCLE
        k, l = self.label
        return f"gamma_{k}{l}"

    def max_gap(self) -> float:
        if len(self.points) < 2:
            return 0.0
        return float(np.abs(np.diff(self.points)).max())

    def __len__(self):
        return len(self.points)


# --- the functions f_k ----------------------------------------------------------

def f_k(x, k: int, prec: int = 128) -> mpmath.mpf:
    """Re sqrt(Li2(x^k)) / k at ``prec`` bits, principal branches."""
    if k not in KS:
        raise ValueError("k must be 1, 2 or 3")
    with mp.workprec(prec):
        x = hp(x, prec)
        if abs(x) > 1 + DISK_SLACK:
            raise DomainError("f_k is defined on the closed unit disk")
        return mpmath.sqrt(dilog(x**k, prec)).real / k


def li2_np(x: np.ndarray) -> np.ndarray:
    """Float64 Li2 via scipy's Spence function, with the power series near 0
    where forming 1 - x would cancel."""
    x = np.asarray(x, dtype=complex)
    shape = x.shape
    x = np.atleast_1d(x)
    out = np.asarray(spence(1 - x))
    small = np.abs(x) < 0.25
    if small.any():
        xs = x[small]
        acc = np.zeros_like(xs)
        for n in range(30, 0, -1):  # 0.25^30 < 1e-18
            acc = xs * (1 / n**2 + acc)
        out[small] = acc
    return out.reshape(shape)


def f_np(x, k: int) -> np.ndarray:
    """Vectorized float64 f_k."""
    x = np.asarray(x, dtype=complex)
    return np.sqrt(li2_np(x**k)).real / k


def classify(x, tol: float = CLASSIFY_TOL, prec: int = 128) -> RegionLabel:
    """Dominant f_k at x; a boundary label when the top two differ by at most tol.

    Defined on the closed disk; the labels are symmetric under conjugation.
    """
    with mp.workprec(prec):
        x = hp(x, prec)
        if abs(x) > 1 + DISK_SLACK:
            raise DomainError("classify is defined on the closed unit disk")
        vals = sorted(((f_k(x, k, prec), k) for k in KS), reverse=True)
    (v1, k1), (v2, k2) = vals[0], vals[1]
    if v1 - v2 <= tol:
        return RegionLabel(boundary=(min(k1, k2), max(k1, k2)))
    return RegionLabel(k=k1)


# --- tracing ---------------------------------------------------------------------

def _third(k, l):
    return ({1, 2, 3} - {k, l}).pop()


def _bisect(fun, a: np.ndarray, b: np.ndarray, iters: int = 60) -> np.ndarray:
    """Vectorized bisection on segments [a, b] (complex endpoints) with fun(a), fun(b) of opposite sign."""
    fa = fun(a)
    for _ in range(iters):
        m = (a + b) / 2
        fm = fun(m)
        left = np.sign(fm) == np.sign(fa)
        a = np.where(left, m, a)
        fa = np.where(left, fm, fa)
        b = np.where(left, b, m)
    return (a + b) / 2


def _diff_fun(k, l):
    return lambda z: f_np(z, k) - f_np(z, l)


def _gamma_ok(z, k, l, tol=DOMINANCE_TOL):
    j = _third(k, l)
    return f_np(z, k) >= f_np(z, j) - tol


@lru_cache(maxsize=4)
def triple_point(prec: int = 128) -> complex:
    """The point of the open upper disk where f_1 = f_2 = f_3."""
    # coarse float64 seed on the region where f_1 = f_2 meets f_1 = f_3
    xs = np.linspace(-0.95, 0.0, 400)
    ys = np.linspace(0.05, 0.95, 400)
    X, Y = np.meshgrid(xs, ys)
    Z = X + 1j * Y
    Z = Z[np.abs(Z) < 0.999]
    F1, F2, F3 = (f_np(Z, k) for k in KS)
    seed = Z[np.argmin(np.abs(F1 - F2) + np.abs(F1 - F3))]
    with mp.workprec(prec):
        def eqs(a, b):
            z = mpmath.mpc(a, b)
            v1, v2, v3 = (f_k(z, k, prec) for k in KS)
            return [v1 - v2, v1 - v3]
        sol = mpmath.findroot(eqs, (mpmath.mpf(seed.real), mpmath.mpf(seed.imag)),
                              tol=mpmath.ldexp(1, -prec + 24))
        return complex(sol[0], sol[1])


def _circle_crossings(k, l, n_theta: int = 20000) -> list[complex]:
    th = np.linspace(0.0, np.pi, n_theta + 1)
    z = np.exp(1j * th)
    g = _diff_fun(k, l)(z)
    idx = np.flatnonzero(np.sign(g[:-1]) * np.sign(g[1:]) < 0)
    out = []
    for i in idx:
        a, b = th[i], th[i + 1]
        ga = g[i]
        for _ in range(60):
            m = (a + b) / 2
            gm = _diff_fun(k, l)(np.exp(1j * m))
            if np.sign(gm) == np.sign(ga):
                a, ga = m, gm
            else:
                b = m
        zc = np.exp(1j * (a + b) / 2)
        if _gamma_ok(zc, k, l):
            out.append(complex(zc))
    return out


def _scan_points(k, l, resolution: float) -> np.ndarray:
    """Crossings of f_k - f_l along rays and along circular arcs of a polar grid."""
    h = resolution / 2
    radii = np.unique(np.concatenate([np.geomspace(1e-7, h, 24), np.arange(h, 1.0, h), [1.0]]))
    thetas = np.linspace(0.0, np.pi, int(np.ceil(np.pi / h)) + 1)
    R, T = np.meshgrid(radii, thetas, indexing="ij")
    Z = R * np.exp(1j * T)
    fun = _diff_fun(k, l)
    G = fun(Z)
    found = []
    # along rays (varying radius)
    s = np.sign(G)
    m = s[:-1, :] * s[1:, :] < 0
    if m.any():
        found.append(_bisect(fun, Z[:-1, :][m], Z[1:, :][m]))
    # along arcs (varying angle); bisect on the chord, then project back is
    # unnecessary since the chord stays inside the disk
    m = s[:, :-1] * s[:, 1:] < 0
    if m.any():
        found.append(_bisect(fun, Z[:, :-1][m], Z[:, 1:][m]))
    if not found:
        return np.zeros(0, dtype=complex)
    pts = np.concatenate(found)
    return pts[_gamma_ok(pts, k, l)]


def _fill_gaps(pts: list[complex], k, l, resolution: float) -> list[complex]:
    """Insert curve points between neighbours farther apart than ``resolution``
    by bisecting f_k - f_l along the perpendicular bisector of the gap."""
    fun = _diff_fun(k, l)
    out = [pts[0]]
    for b in pts[1:]:
        a = out[-1]
        seg = [a, b]
        while True:
            worst = max(range(len(seg) - 1), key=lambda i: abs(seg[i + 1] - seg[i]))
            p, q = seg[worst], seg[worst + 1]
            d = abs(q - p)
            if d <= resolution:
                break
            mid = (p + q) / 2
            nrm = 1j * (q - p) / d
            ts = np.linspace(-d, d, 41)
            cand = mid + ts * nrm
            cand = cand[np.abs(cand) <= 1.0]
            if len(cand) < 2:
                new = mid
            else:
                g = fun(cand)
                idx = np.flatnonzero(np.sign(g[:-1]) * np.sign(g[1:]) < 0)
                if idx.size:
                    best = idx[np.argmin(np.abs(cand[idx] - mid))]
                    new = complex(_bisect(fun, cand[best:best + 1], cand[best + 1:best + 2])[0])
                else:
                    new = mid
            seg.insert(worst + 1, new)
            if len(seg) > 10_000:
                break
        out.extend(seg[1:])
    return out


def trace_curve(k: int, l: int, resolution: float) -> CurvePolyline:
    """Ordered polyline along gamma_{k,l} = {f_k = f_l} within the closure of the f_k-dominant region."""
    if not (1 <= k < l <= 3):
        raise ValueError("need 1 <= k < l <= 3")
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    pts = _scan_points(k, l, resolution)
    tp = triple_point()
    ends = [tp]
    if pts.size and np.abs(pts).min() < 4 * resolution:
        ends.append(0j)
    ends.extend(_circle_crossings(k, l))
    if pts.size == 0 and len(ends) < 2:
        return CurvePolyline((k, l), np.zeros(0, dtype=complex), resolution)
    # endpoints: the triple point and the farthest other terminal
    start = tp
    others = [e for e in ends[1:] if abs(e - tp) > resolution / 4]
    if others:
        end = max(others, key=lambda e: abs(e - tp))
    else:
        end = complex(pts[np.argmax(np.abs(pts - tp))])
    chord = end - start
    proj = ((pts - start) * np.conj(chord)).real / abs(chord) ** 2
    keep = (proj > 0) & (proj < 1)
    order = np.argsort(proj[keep], kind="stable")
    inner = pts[keep][order]
    # drop near-duplicates coming from overlapping ray and arc scans
    seq = [start]
    for z in inner:
        if abs(z - seq[-1]) > resolution / 20:
            seq.append(complex(z))
    if abs(end - seq[-1]) <= resolution / 20:
        seq[-1] = end
    else:
        seq.append(end)
    seq = _fill_gaps(seq, k, l, resolution)
    return CurvePolyline((k, l), np.array(seq, dtype=complex), resolution)


def semicircle(resolution: float) -> CurvePolyline:
    m = max(int(np.ceil(np.pi / (resolution * 0.999))), 2)
    th = np.linspace(0.0, np.pi, m + 1)
    return CurvePolyline(SEMICIRCLE, np.exp(1j * th), resolution)


def attractor_set(resolution: float) -> list[CurvePolyline]:
    """Unit semicircle plus the three traced gamma curves."""
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    return [semicircle(resolution)] + [trace_curve(k, l, resolution) for k, l in PAIRS]


def attractor_points(curves: list[CurvePolyline]) -> np.ndarray:
    return np.concatenate([c.points for c in curves])


# --- Hausdorff distance --------------------------------------------------------

def _directed(a: np.ndarray, b: np.ndarray, chunk: int = 2048) -> float:
    best = 0.0
    for i in range(0, len(a), chunk):
        d = np.abs(a[i:i + chunk, None] - b[None, :]).min(axis=1)
        best = max(best, float(d.max()))
    return best


def hausdorff(A, B) -> float:
    """Hausdorff distance between two finite sets of complex points."""
    a = np.asarray(A, dtype=complex).ravel()
    b = np.asarray(B, dtype=complex).ravel()
    if a.size == 0 or b.size == 0:
        raise ValueError("Hausdorff distance needs two nonempty sets")
    return max(_directed(a, b), _directed(b, a))


def upper_half_zeros(roots, include_origin: bool = True, radius: float | None = None,
                     slack: float = 1e-12) -> np.ndarray:
    """Roots with Im >= 0 (optionally also |z| <= radius), plus the origin for
    exactly deflated zeros."""
    z = np.asarray(roots, dtype=complex)
    keep = z.imag >= -slack
    if radius is not None:
        keep &= np.abs(z) <= radius + slack
    z = z[keep]
    if include_origin:
        z = np.concatenate([z, [0j]])
    return z
