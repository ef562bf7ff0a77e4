#!/usr/bin/env python3
"""How well each eigenvalue family tracks the cyclic difference quotient.

For each resolution n this prints the HS distance between the scaled
backward difference operator and the convolution operator of each family,
plus the distance relative to the operator's own HS norm.  The optimal
family is the orthogonal projection, so its column is the attainable
minimum at every n.
"""

import argparse

import numpy as np

from dyadlab.best_approx import ConvolutionSymbol, approx_error, gamma_symbol
from dyadlab.operators import difference_operator, hs_norm


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8, help="largest resolution")
    args = parser.parse_args()

    families = ("optimal", "butzer_wagner", "onneweer")
    header = ["n", "norm(D)"] + list(families) + ["zero", "optimal/norm"]
    print("  ".join(f"{h:>14}" for h in header))
    for n in range(2, args.n_max + 1):
        delta = difference_operator(n)
        norm = hs_norm(delta)
        errors = [approx_error(delta, gamma_symbol(f, n)) for f in families]
        zero = approx_error(delta, ConvolutionSymbol(np.zeros(2**n)))
        row = [n, norm] + errors + [zero, errors[0] / norm]
        print(
            "  ".join(
                f"{v:>14}" if isinstance(v, int) else f"{v:>14.6f}" for v in row
            )
        )


if __name__ == "__main__":
    main()
