"""Invariant suites run by ``parzero check``.

Each check returns a CheckResult; a suite is a list of them.  The budget
bounds the largest n touched so the suites stay desk-scale.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np
from mpmath import mp

from . import asymptotics, attractor, families, hpnum, zerostats
from .families import FamilyId
from .rootfinder import ZeroSet, find_roots

SUITES = ("families", "zeros", "asymptotics", "attractor", "all")
MAX_BUDGET = 1000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _families(budget: int) -> list[CheckResult]:
    out = []
    top = min(budget, families.ORACLE_MAX_N)
    p = families.partition_counts(max(top, 1)).p
    tri = families.parts_triangle(max(top, 1))
    for n in range(1, top + 1):
        bad = []
        if families.parts_poly(n).coeffs != (0,) + tuple(
                families.oracle_counts(FamilyId.PARTS, n).get(k, 0) for k in range(1, n + 1)):
            bad.append("parts")
        if families.rank_series(n).coeff(n).coeffs != families.oracle_counts(FamilyId.RANK, n):
            bad.append("rank")
        if n >= 2 and families.crank_series(n).coeff(n).coeffs != families.oracle_counts(FamilyId.CRANK, n):
            bad.append("crank")
        d = families.durfee_poly(n)
        if dict((k, c) for k, c in enumerate(d.coeffs) if c) != families.oracle_counts(FamilyId.DURFEE, n):
            bad.append("durfee")
        if sum(tri.row(n)) != p[n] or d(1) != p[n]:
            bad.append("sums")
        out.append(CheckResult(f"oracle n={n}", not bad, ",".join(bad)))
    return out


def vieta_errors(zs: ZeroSet) -> tuple[float, float]:
    """Relative errors of the root product and root sum against the coefficients."""
    g = zs.deflated
    d = g.degree
    with mp.workprec(zs.precision_bits):
        prod = mpmath.fprod(zs.roots) * g.leading()
        want = (-1) ** d * g.coeffs[0]
        e_prod = abs(prod - want) / abs(want)
        s = mpmath.fsum(zs.roots)
        want_s = mpmath.mpf(-g.coeffs[d - 1]) / g.leading()
        e_sum = abs(s - want_s) / max(abs(want_s), 1)
    return float(e_prod), float(e_sum)


def conjugate_gap(zs: ZeroSet) -> float:
    z = zs.as_complex()
    if z.size == 0:
        return 0.0
    return float(np.abs(z[:, None] - np.conj(z)[None, :]).min(axis=1).max())


def _zeros(budget: int) -> list[CheckResult]:
    out = []
    for fam in FamilyId:
        n = max(budget, 2)
        zs = find_roots(families.family_poly(fam, n), family=fam.value, n=n)
        e_prod, e_sum = vieta_errors(zs)
        tol = 2.0**-32
        out.append(CheckResult(f"vieta {fam.value} n={n}", e_prod < tol and e_sum < tol,
                               f"prod={e_prod:.3e} sum={e_sum:.3e}"))
        out.append(CheckResult(f"conjugate symmetry {fam.value} n={n}", conjugate_gap(zs) < 1e-20,
                               f"gap={conjugate_gap(zs):.3e}"))
        if fam is FamilyId.TAYLOR:
            m = float(np.abs(zs.as_complex()).max())
            out.append(CheckResult(f"enestrom-kakeya n={n}", m <= 1 + 1e-10, f"max|z|={m:.12f}"))
        fails = [k for k in range(8)
                 if not zerostats.discrepancy(zs, k * math.pi / 4, (k + 1) * math.pi / 4).satisfied]
        out.append(CheckResult(f"erdos-turan {fam.value} n={n}", not fails, f"failing sectors {fails}" if fails else ""))
    return out


def _asymptotics(budget: int) -> list[CheckResult]:
    out = []
    for n in sorted({1, 7, 100, budget}):
        c = asymptotics.SaddleConstants.for_n(n)
        with mp.workprec(128):
            r = max(abs(2 * c.sigma - c.a * c.lambda_n), abs(mpmath.pi / (12 * c.alpha) - c.sigma))
        out.append(CheckResult(f"saddle constants n={n}", r < 2.0**-100, f"{float(r):.3e}"))
    with mp.workprec(256):
        taus = {"1": mpmath.mpf(1), "1/2": mpmath.mpf(1) / 2, "2": mpmath.mpf(2),
                "1+i/3": mpmath.mpc(1, mpmath.mpf(1) / 3)}
    for label, tau in taus.items():
        res = hpnum.modular_check(tau, prec=256)
        out.append(CheckResult(f"modular tau={label}", res < 1e-20, f"{res:.3e}"))
    half = max(budget // 2, 2)
    for x in (1.5, 2):
        e1 = asymptotics.sn_report(half, x).rel_error
        e2 = asymptotics.sn_report(2 * half, x).rel_error
        out.append(CheckResult(f"sn trend x={x}", e2 < e1, f"{e1:.3e} -> {e2:.3e}"))
    g1 = asymptotics.fn_outer_gap(half, 2)
    g2 = asymptotics.fn_outer_gap(2 * half, 2)
    out.append(CheckResult("outer gap trend x=2", g2 < g1, f"{float(g1):.3e} -> {float(g2):.3e}"))
    return out


def _attractor(budget: int) -> list[CheckResult]:
    res = 0.01
    curves = attractor.attractor_set(res)
    tp = attractor.triple_point()
    pts = attractor.attractor_points(curves)
    out = [CheckResult("four components", len(curves) == 4),
           CheckResult("moduli inside disk", float(np.abs(pts).max()) <= 1 + 1e-10)]
    for c in curves[1:]:
        near = float(np.abs(c.points - tp).min())
        out.append(CheckResult(f"{c.name} reaches triple point", near <= res, f"{near:.3e}"))
        out.append(CheckResult(f"{c.name} gaps", c.max_gap() <= res, f"{c.max_gap():.3e}"))
    lab = attractor.classify(0.5)
    out.append(CheckResult("positive axis in region 1", lab.k == 1, str(lab)))
    return out


def run_suite(suite: str, budget: int) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if not (1 <= budget <= MAX_BUDGET):
        raise ValueError(f"budget must lie in [1, {MAX_BUDGET}]")
    runners = {"families": _families, "zeros": _zeros, "asymptotics": _asymptotics, "attractor": _attractor}
    names = list(runners) if suite == "all" else [suite]
    out = []
    for name in names:
        out.extend(runners[name](budget))
    return out
