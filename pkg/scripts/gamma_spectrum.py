#!/usr/bin/env python3
"""Eigenvalue profiles of the derivative families in sequency order.

Prints, for every sequency m below 2**n, the eigenvalue each family
attaches to the Walsh function with m sign changes.  The optimal family
follows 2m on even sequencies and 2(m+1) on odd ones, so it staircases
just above the classical frequency line 2m.
"""

import argparse

from dyadlab.best_approx import butzer_wagner_gamma, onneweer_gamma, optimal_gamma
from dyadlab.dyadic import gray


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", type=int, default=4, help="resolution")
    args = parser.parse_args()

    print(f"{'sequency':>9} {'paley':>6} {'optimal':>8} {'bw':>6} {'onneweer':>9}")
    for m in range(2**args.n):
        paley = gray(m)
        print(
            f"{m:>9} {paley:>6} {optimal_gamma(m):>8.0f} "
            f"{butzer_wagner_gamma(paley):>6.0f} {onneweer_gamma(paley):>9.0f}"
        )


if __name__ == "__main__":
    main()
