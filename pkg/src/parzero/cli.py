"""parzero command line.

Exit codes: 0 ok, 1 bad configuration, 2 I/O failure, 3 numeric failure,
4 invariant failure.  All numbers are written as decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass

import mpmath
import numpy as np
from mpmath import mp

from . import asymptotics, attractor, checks, families, zerostats
from .families import FamilyId
from .hpnum import DomainError, PrecisionError
from .rootfinder import DEFAULT_RESIDUAL, RootFindingError, find_roots

SCHEMA_VERSION = 1
EXIT_OK, EXIT_CONFIG, EXIT_IO, EXIT_NUMERIC, EXIT_INVARIANT = range(5)


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: FamilyId | None = None
    n: int | None = None
    n_list: tuple[int, ...] = ()
    precision_bits: int | None = None
    residual: float = DEFAULT_RESIDUAL
    resolution: float = 0.005
    sector: tuple[float, float] | None = None
    fmt: str = "json"
    out: str | None = None

    def ns(self) -> tuple[int, ...]:
        if self.n_list:
            return self.n_list
        if self.n is None:
            raise ConfigError("--n or --n-list is required")
        return (self.n,)


# --- formatting ------------------------------------------------------------------

def dec(x, digits: int = 17) -> str:
    """Deterministic decimal string for ints, floats and mpmath reals."""
    if isinstance(x, (bool, np.bool_)):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if math.isinf(x) or math.isnan(x):
            return str(x)
        return repr(x)
    return mpmath.nstr(x, digits, min_fixed=-4, max_fixed=digits)


def digits_for(prec: int) -> int:
    return max(int(prec * math.log10(2)), 17)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def write_output(text: str, path: str | None) -> None:
    """stdout, or an atomic temp-file-and-rename write."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".parzero-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --- commands --------------------------------------------------------------------

def _need_family(cfg: RunConfig) -> FamilyId:
    if cfg.family is None:
        raise ConfigError("--family is required")
    return cfg.family


def _check_n(fam: FamilyId, n: int) -> None:
    if n < families.min_n(fam):
        raise ConfigError(f"n must be >= {families.min_n(fam)} for {fam.value}")


def cmd_gen(cfg: RunConfig) -> str:
    fam = _need_family(cfg)
    polys = []
    for n in cfg.ns():
        _check_n(fam, n)
        entry = {"family": fam.value, "n": n,
                 "coefficients": [str(c) for c in families.family_poly(fam, n).coeffs]}
        if fam in (FamilyId.RANK, FamilyId.CRANK):
            lp = (families.rank_poly(n) if fam is FamilyId.RANK else families.crank_poly(n))[0]
            entry["laurent"] = [[str(e), str(c)] for e, c in lp.items()]
        polys.append(entry)
    if cfg.fmt == "csv":
        rows = [(e["family"], e["n"], k, c) for e in polys for k, c in enumerate(e["coefficients"])]
        return dump_csv(("family", "n", "degree", "coefficient"), rows)
    body = polys[0] if len(polys) == 1 else {"polynomials": polys}
    return dump_json({"schema_version": SCHEMA_VERSION, **body})


def _zeroset(cfg: RunConfig, n: int):
    fam = _need_family(cfg)
    _check_n(fam, n)
    p = families.family_poly(fam, n)
    if p.degree < 1:
        raise ConfigError(f"{fam.value} polynomial at n={n} has degree {p.degree}; nothing to solve")
    return find_roots(p, cfg.residual, precision_bits=cfg.precision_bits, family=fam.value, n=n)


def _roots_payload(zs) -> dict:
    d = digits_for(zs.precision_bits)
    with mp.workprec(zs.precision_bits):
        roots = [{"re": dec(z.real, d), "im": dec(z.imag, d)} for z in zs.roots]
    return {"family": zs.family, "n": zs.n, "precision_bits": zs.precision_bits,
            "max_residual": dec(float(zs.max_residual)),
            "deflated_origin_multiplicity": zs.deflated_origin_multiplicity, "roots": roots}


def cmd_roots(cfg: RunConfig) -> str:
    sets = [_zeroset(cfg, n) for n in cfg.ns()]
    if cfg.fmt == "csv":
        rows = []
        for zs in sets:
            pay = _roots_payload(zs)
            rows.extend((zs.family, zs.n, i, r["re"], r["im"]) for i, r in enumerate(pay["roots"]))
        return dump_csv(("family", "n", "idx", "re", "im"), rows)
    if len(sets) == 1:
        return dump_json({"schema_version": SCHEMA_VERSION, **_roots_payload(sets[0])})
    return dump_json({"schema_version": SCHEMA_VERSION, "zero_sets": [_roots_payload(z) for z in sets]})


def cmd_attractor(cfg: RunConfig) -> str:
    if not cfg.resolution > 0:
        raise ConfigError("--resolution must be positive")
    curves = attractor.attractor_set(cfg.resolution)
    if cfg.fmt == "json":
        return dump_json({
            "schema_version": SCHEMA_VERSION, "resolution": dec(cfg.resolution),
            "triple_point": {"re": dec(attractor.triple_point().real), "im": dec(attractor.triple_point().imag)},
            "curves": [{"label": c.name, "points": [{"re": dec(float(z.real)), "im": dec(float(z.imag))}
                                                    for z in c.points]} for c in curves]})
    rows = [(c.name, i, dec(float(z.real)), dec(float(z.imag))) for c in curves for i, z in enumerate(c.points)]
    return dump_csv(("curve_label", "idx", "re", "im"), rows)


def cmd_discrepancy(cfg: RunConfig) -> str:
    t1, t2 = cfg.sector if cfg.sector else (0.0, 2 * math.pi)
    if not (0 <= t1 < t2 <= 2 * math.pi + 1e-15):
        raise ConfigError("--sector needs 0 <= theta1 < theta2 <= 2 pi")
    reports = []
    for n in cfg.ns():
        zs = _zeroset(cfg, n)
        r = zerostats.discrepancy(zs, t1, t2)
        reports.append({"family": zs.family, "n": n, "theta1": dec(r.theta1), "theta2": dec(r.theta2),
                        "observed": r.observed, "expected": dec(r.expected), "bound": dec(r.bound),
                        "satisfied": bool(r.satisfied)})
    if cfg.fmt == "csv":
        keys = list(reports[0])
        return dump_csv(keys, [[str(r[k]).lower() if isinstance(r[k], bool) else r[k] for k in keys]
                               for r in reports])
    body = reports[0] if len(reports) == 1 else {"reports": reports}
    return dump_json({"schema_version": SCHEMA_VERSION, **body})


def cmd_hausdorff(cfg: RunConfig) -> str:
    if not cfg.resolution > 0:
        raise ConfigError("--resolution must be positive")
    A = attractor.attractor_points(attractor.attractor_set(cfg.resolution))
    reports = []
    for n in cfg.ns():
        zs = _zeroset(cfg, n)
        z = attractor.upper_half_zeros(zs.as_complex(), include_origin=zs.deflated_origin_multiplicity > 0)
        reports.append({"family": zs.family, "n": n, "against": "attractor",
                        "distance": dec(attractor.hausdorff(z, A)), "resolution_band": dec(cfg.resolution)})
    if cfg.fmt == "csv":
        keys = list(reports[0])
        return dump_csv(keys, [[r[k] for k in keys] for r in reports])
    body = reports[0] if len(reports) == 1 else {"reports": reports}
    return dump_json({"schema_version": SCHEMA_VERSION, **body})


def _report_dict(kind: str, r) -> dict:
    out = {"kind": kind, "n": r.n}
    if r.x is not None:
        out["x"] = {"re": dec(r.x.real), "im": dec(r.x.imag)}
    out["exact"] = {"re": dec(r.exact.real), "im": dec(r.exact.imag)}
    out["approx"] = {"re": dec(r.approx.real), "im": dec(r.approx.imag)}
    out["rel_error"] = dec(r.rel_error)
    return out


def cmd_asym(cfg: RunConfig, kind: str, x: str | None) -> str:
    reports = []
    for n in cfg.ns():
        if n < 1:
            raise ConfigError("n must be >= 1")
        if kind == "hr":
            r = asymptotics.hr_report(n)
            d = _report_dict(kind, r)
            d["ratio"] = dec(asymptotics.hr_ratio(n))
        else:
            if x is None:
                raise ConfigError(f"--x is required for --kind {kind}")
            try:
                xv = mpmath.mpmathify(x.replace("i", "j"))
            except (ValueError, TypeError) as exc:
                raise ConfigError(f"cannot parse --x {x!r}") from exc
            fn = {"sn": asymptotics.sn_report, "outer": asymptotics.fn_outer_report,
                  "inner": asymptotics.fn_inner_report}[kind]
            d = _report_dict(kind, fn(n, xv))
        reports.append(d)
    if cfg.fmt == "csv":
        return dump_csv(("kind", "n", "rel_error"), [(r["kind"], r["n"], r["rel_error"]) for r in reports])
    body = reports[0] if len(reports) == 1 else {"reports": reports}
    return dump_json({"schema_version": SCHEMA_VERSION, **body})


def cmd_check(cfg: RunConfig, suite: str, budget: int) -> tuple[str, bool]:
    if suite not in checks.SUITES:
        raise ConfigError(f"unknown suite {suite!r}")
    if not (1 <= budget <= checks.MAX_BUDGET):
        raise ConfigError(f"n_budget must lie in [1, {checks.MAX_BUDGET}]")
    results = checks.run_suite(suite, budget)
    ok = all(r.passed for r in results)
    payload = {"schema_version": SCHEMA_VERSION, "suite": suite, "n_budget": budget, "passed": ok,
               "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}
    if cfg.fmt == "csv":
        return dump_csv(("name", "passed", "detail"),
                        [(r.name, str(r.passed).lower(), r.detail) for r in results]), ok
    return dump_json(payload), ok


# --- argument parsing ------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _n_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty --n-list")
    return vals


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--family", choices=[f.value for f in FamilyId])
    common.add_argument("--n", type=int)
    common.add_argument("--n-list", type=_n_list, default=())
    common.add_argument("--precision-bits", type=int)
    common.add_argument("--residual", type=float, default=DEFAULT_RESIDUAL)
    common.add_argument("--resolution", type=float, default=0.005)
    common.add_argument("--sector", type=float, nargs=2, metavar=("THETA1", "THETA2"))
    common.add_argument("--format", dest="fmt", choices=("json", "csv"))
    common.add_argument("--out")

    parser = _Parser(prog="parzero", description="Partition polynomial families, their zeros and asymptotics.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("gen", parents=[common], help="exact coefficients")
    sub.add_parser("roots", parents=[common], help="all complex zeros")
    sub.add_parser("attractor", parents=[common], help="attractor curves as plot-ready points")
    sub.add_parser("discrepancy", parents=[common], help="sector count against the discrepancy bound")
    h = sub.add_parser("hausdorff", parents=[common], help="distance from zeros to the attractor")
    h.add_argument("--against", choices=("attractor",), default="attractor")
    a = sub.add_parser("asym", parents=[common], help="asymptotic formula vs exact value")
    a.add_argument("--kind", choices=("hr", "sn", "outer", "inner"), required=True)
    a.add_argument("--x")
    c = sub.add_parser("check", parents=[common], help="run an invariant suite")
    c.add_argument("suite", choices=checks.SUITES)
    c.add_argument("n_budget", type=int)
    return parser


def _config(args) -> RunConfig:
    fmt = args.fmt or ("csv" if args.command == "attractor" else "json")
    if args.n is not None and args.n < 0:
        raise ConfigError("--n must be nonnegative")
    if args.residual <= 0:
        raise ConfigError("--residual must be positive")
    if args.precision_bits is not None and args.precision_bits < 64:
        raise ConfigError("--precision-bits must be at least 64")
    return RunConfig(args.command, FamilyId(args.family) if args.family else None, args.n, args.n_list,
                     args.precision_bits, args.residual, args.resolution,
                     tuple(args.sector) if args.sector else None, fmt, args.out)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        ok = True
        if cfg.command == "gen":
            text = cmd_gen(cfg)
        elif cfg.command == "roots":
            text = cmd_roots(cfg)
        elif cfg.command == "attractor":
            text = cmd_attractor(cfg)
        elif cfg.command == "discrepancy":
            text = cmd_discrepancy(cfg)
        elif cfg.command == "hausdorff":
            text = cmd_hausdorff(cfg)
        elif cfg.command == "asym":
            text = cmd_asym(cfg, args.kind, args.x)
        else:
            text, ok = cmd_check(cfg, args.suite, args.n_budget)
        write_output(text, cfg.out)
        return EXIT_OK if ok else EXIT_INVARIANT
    except ConfigError as exc:
        print(f"parzero: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DomainError, PrecisionError) as exc:
        print(f"parzero: invalid input: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except RootFindingError as exc:
        print(f"parzero: root finding failed: {exc}", file=sys.stderr)
        for k, v in sorted(exc.diagnostics.items()):
            print(f"  {k}: {v}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"parzero: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
