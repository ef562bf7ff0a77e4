#!/usr/bin/env python3
"""Convergence of the sphere-sampling estimate of the squared HS norm.

Draws a fixed random operator and prints the relative error of the
Monte-Carlo estimate N * E||AX||^2 against the exact squared Frobenius
norm for growing sample counts.  With a fixed seed the decades reuse the
earlier draws, so the error trace is reproducible.
"""

import argparse

import numpy as np

from dyadlab.operators import DenseOperator, hs_norm, hs_norm_monte_carlo


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", type=int, default=4, help="resolution of the operator")
    parser.add_argument("--seed", type=int, default=42, help="sampling seed")
    parser.add_argument(
        "--operator-seed", type=int, default=7, help="seed for the test operator"
    )
    parser.add_argument(
        "--max-decade", type=int, default=6, help="largest sample count is 10**this"
    )
    args = parser.parse_args()

    rng = np.random.default_rng(args.operator_seed)
    a = DenseOperator(rng.standard_normal((2**args.n, 2**args.n)))
    exact = hs_norm(a) ** 2
    print(f"n={args.n}  exact ||A||_HS^2 = {exact:.6f}")
    print(f"{'samples':>10}  {'estimate':>14}  {'rel error':>12}")
    for decade in range(2, args.max_decade + 1):
        samples = 10**decade
        estimate = hs_norm_monte_carlo(a, samples, args.seed)
        print(
            f"{samples:>10}  {estimate:>14.6f}  {abs(estimate - exact) / exact:>12.6f}"
        )


if __name__ == "__main__":
    main()
