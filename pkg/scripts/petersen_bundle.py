"""Petersen graph: full 1-Laplacian spectrum, mu_2 vs h vs lambda_2.

    python scripts/petersen_bundle.py [--threads K]
"""

import argparse
import time
from fractions import Fraction

from onelap.cheeger import cheeger_exact, mu2_via_pi_min, sweep_cut
from onelap.graph import petersen_graph
from onelap.linear import linear_spectrum
from onelap.rational import fmt_rat
from onelap.spectrum import EnumConfig, enumerate_spectrum, second_eigenvalue


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    g = petersen_graph()
    t0 = time.perf_counter()
    report = enumerate_spectrum(g, EnumConfig(threads=args.threads))
    t_enum = time.perf_counter() - t0

    print(f"spectrum ({t_enum:.2f}s, {(3 ** g.n - 1) // 2} patterns scanned)")
    for e in report.entries:
        print(f"  mu = {fmt_rat(e.mu):>5}   normal patterns = {e.pattern_count}")

    mu2 = second_eigenvalue(report)
    pi_min, pattern = mu2_via_pi_min(g, EnumConfig(threads=args.threads))
    h, cut = cheeger_exact(g)
    lin = linear_spectrum(g)
    sweep, _ = sweep_cut(g, list(lin.vector(1)))

    print(f"mu_2 (enumeration)   = {fmt_rat(mu2)}")
    print(f"mu_2 (min over pi)   = {fmt_rat(pi_min)}  pattern {pattern}")
    print(f"h(G)                 = {fmt_rat(h)}  S = {list(cut.subset)}, "
          f"boundary {cut.boundary_size}, vol {cut.vol_s}/{cut.vol_sbar}")
    print(f"lambda_2             = {lin.lambda2:.12g}")
    print(f"sweep of lambda_2 vector = {fmt_rat(sweep)}")
    print(f"lambda_2/2 <= h <= sqrt(2 lambda_2): "
          f"{lin.lambda2 / 2:.6f} <= {float(h):.6f} <= {(2 * lin.lambda2) ** 0.5:.6f}")
    print("mu_2 == h:", mu2 == h == Fraction(1, 3))


if __name__ == "__main__":
    main()
