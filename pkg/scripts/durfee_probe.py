"""Check that every zero of d_n(z)/z is real and negative, for n up to a limit."""
import argparse

from parzero.families import durfee_poly
from parzero.rootfinder import find_roots


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=400)
    ap.add_argument("--im-tol", type=float, default=1e-20)
    args = ap.parse_args()

    worst = 0.0
    found = []
    for n in range(4, args.n_max + 1):
        zs = find_roots(durfee_poly(n).deflate_origin()[1])
        for z in zs.roots:
            worst = max(worst, float(abs(z.imag)))
            if abs(z.imag) >= args.im_tol or z.real >= 0:
                found.append((n, complex(z)))
    if found:
        print(f"COUNTEREXAMPLES ({len(found)}):")
        for n, z in found:
            print(f"  n={n}: {z}")
    else:
        print(f"all zeros real and negative for 4 <= n <= {args.n_max}; max |Im z| = {worst:.3e}")


if __name__ == "__main__":
    main()
