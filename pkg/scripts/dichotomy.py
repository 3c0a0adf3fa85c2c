"""Zero counts of F_n inside |z| <= r_in and in |z| >= r_out along a doubling sequence."""
import argparse
import math
import time

from parzero.families import parts_poly
from parzero.rootfinder import find_roots
from parzero.zerostats import Annulus, Disk, region_count


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-list", default="125,250,500,1000")
    ap.add_argument("--r-in", type=float, default=0.8)
    ap.add_argument("--r-out", type=float, default=0.95)
    args = ap.parse_args()

    prev = None
    print(f"{'n':>6} {'inner':>6} {'inner/sqrt n':>12} {'outer':>6} {'outer/n':>8} {'ratios':>16} {'secs':>6}")
    for n in (int(v) for v in args.n_list.split(",")):
        t0 = time.perf_counter()
        zs = find_roots(parts_poly(n))
        inner = region_count(zs, Disk(args.r_in))
        outer = region_count(zs, Annulus(args.r_out))
        ratios = "" if prev is None else f"{inner / prev[0]:.3f} {outer / prev[1]:.3f}"
        print(f"{n:>6} {inner:>6} {inner / math.sqrt(n):>12.4f} {outer:>6} {outer / n:>8.4f} {ratios:>16} "
              f"{time.perf_counter() - t0:>6.1f}")
        prev = (inner, outer)


if __name__ == "__main__":
    main()
