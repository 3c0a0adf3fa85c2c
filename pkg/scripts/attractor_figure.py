"""Write plot-ready CSV: the attractor curves plus the upper-half zeros of F_n.

    python3 scripts/attractor_figure.py --n 400 --resolution 0.005 --out fig.csv
"""
import argparse
import csv

import numpy as np

from parzero.attractor import attractor_set, upper_half_zeros
from parzero.families import parts_poly
from parzero.rootfinder import find_roots


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=400)
    ap.add_argument("--resolution", type=float, default=0.005)
    ap.add_argument("--out", default="attractor_figure.csv")
    args = ap.parse_args()

    curves = attractor_set(args.resolution)
    zs = find_roots(parts_poly(args.n))
    zeros = upper_half_zeros(zs.as_complex())
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["curve_label", "idx", "re", "im"])
        for c in curves:
            for i, z in enumerate(c.points):
                w.writerow([c.name, i, repr(float(z.real)), repr(float(z.imag))])
        for i, z in enumerate(np.sort_complex(zeros)):
            w.writerow([f"zeros_F{args.n}", i, repr(float(z.real)), repr(float(z.imag))])
    print(f"wrote {args.out}: {sum(len(c) for c in curves)} curve points, {len(zeros)} zeros")


if __name__ == "__main__":
    main()
