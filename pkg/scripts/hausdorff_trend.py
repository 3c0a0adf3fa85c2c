"""Hausdorff distance from the upper-half zeros of F_n to the attractor."""
import argparse
import time

from parzero.attractor import attractor_points, attractor_set, hausdorff, upper_half_zeros
from parzero.families import parts_poly
from parzero.rootfinder import find_roots


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-list", default="100,200,400,800")
    ap.add_argument("--resolution", type=float, default=0.005)
    args = ap.parse_args()

    A = attractor_points(attractor_set(args.resolution))
    for n in (int(v) for v in args.n_list.split(",")):
        t0 = time.perf_counter()
        zs = find_roots(parts_poly(n))
        d = hausdorff(upper_half_zeros(zs.as_complex()), A)
        print(f"n={n:5d}  distance={d:.4f} +- {args.resolution}  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
