"""Angular uniformity and radial concentration of rank and crank zeros as n grows."""
import argparse

import numpy as np

from parzero.families import family_poly
from parzero.rootfinder import find_roots
from parzero.zerostats import modulus_fraction, sector_histogram


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-list", default="50,100,200,400")
    ap.add_argument("--bins", type=int, default=36)
    args = ap.parse_args()

    print(f"{'family':>6} {'n':>5} {'max/min':>8} {'in[0.9,1.1]':>12} {'median|z|':>10} {'max|z|':>8}")
    for fam in ("rank", "crank"):
        for n in (int(v) for v in args.n_list.split(",")):
            zs = find_roots(family_poly(fam, n))
            r = np.abs(zs.as_complex())
            h = sector_histogram(zs, args.bins)
            print(f"{fam:>6} {n:>5} {h.max_min_ratio():>8.3f} {modulus_fraction(zs, 0.9, 1.1):>12.3f} "
                  f"{np.median(r):>10.4f} {r.max():>8.4f}")


if __name__ == "__main__":
    main()
