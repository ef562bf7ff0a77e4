"""Bit-level algebra of the dyadic group at finite resolution.

A point of the resolution-n grid is stored as a cell index j in [0, 2**n),
standing for x = j * 2**-n.  The dyadic digits x_1, ..., x_n of x (most
significant first) are the binary digits of j from bit n-1 down to bit 0,
so digitwise addition mod 2 of points is XOR of their cell indices.

All functions here are pure and operate on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "GridPoint",
    "bit",
    "bit_reverse",
    "bit_reversal_permutation",
    "dyadic_add",
    "gray",
    "gray_inverse",
    "h_mask",
    "last_set_position",
    "shift",
]


def bit(k: int, j: int) -> int:
    """Binary digit k_j of k = sum_j k_j * 2**j."""
    if k < 0:
        raise ValueError("negative integers have no dyadic expansion")
    return (k >> j) & 1


@dataclass(frozen=True)
class GridPoint:
    """The point x = cell_index * 2**-resolution of the resolution-n grid."""

    cell_index: int
    resolution: int

    def __post_init__(self) -> None:
        if self.resolution < 1:
            raise ValueError("resolution must be a positive integer")
        if not 0 <= self.cell_index < 2**self.resolution:
            raise ValueError(
                f"cell index {self.cell_index} outside [0, 2**{self.resolution})"
            )

    @property
    def value(self) -> float:
        return self.cell_index * 2.0**-self.resolution

    def digit(self, i: int) -> int:
        """Dyadic digit x_i for 1 <= i <= n, where x = sum_i x_i * 2**-i."""
        if not 1 <= i <= self.resolution:
            raise ValueError(f"digit position {i} outside [1, {self.resolution}]")
        return bit(self.cell_index, self.resolution - i)


def dyadic_add(a, b, n: int | None = None):
    """Digitwise sum mod 2: XOR of the underlying bit patterns.

    Accepts two grid points of equal resolution or two plain nonnegative
    indices (optionally range-checked against resolution ``n``).  The
    operation is an involution in each argument.
    """
    if isinstance(a, GridPoint) or isinstance(b, GridPoint):
        if not (isinstance(a, GridPoint) and isinstance(b, GridPoint)):
            raise ValueError("cannot mix grid points and plain indices")
        if a.resolution != b.resolution:
            raise ValueError(
                f"resolution mismatch: {a.resolution} != {b.resolution}"
            )
        if n is not None and n != a.resolution:
            raise ValueError(f"operands have resolution {a.resolution}, not {n}")
        return GridPoint(a.cell_index ^ b.cell_index, a.resolution)
    if a < 0 or b < 0:
        raise ValueError("indices must be nonnegative")
    if n is not None and (a >= 2**n or b >= 2**n):
        raise ValueError(f"index exceeds 2**{n}")
    return a ^ b


def shift(k: int) -> int:
    """Drop the lowest binary digit: sum_j k_{j+1} * 2**j."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    return k >> 1


def gray(k: int) -> int:
    """Gray map k -> k XOR shift(k); digit j of the image is k_j XOR k_{j+1}.

    Bijective on [0, 2**n) for every n.  The image of k labels the Walsh
    function with exactly k sign changes (see walsh.sequency).
    """
    return k ^ shift(k)


def gray_inverse(k: int) -> int:
    """Inverse of the Gray map: k XOR shift(k) XOR shift(shift(k)) XOR ..."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    out = 0
    while k:
        out ^= k
        k >>= 1
    return out


def last_set_position(x: GridPoint) -> int:
    """Position M in [1, n] of the least significant set dyadic digit of x.

    For x = 0 returns 1, matching the mod-1 convention used by h_mask
    (subtracting one cell from 0 wraps to the all-ones digit pattern).
    """
    j = x.cell_index
    if j == 0:
        return 1
    lowest = (j & -j).bit_length() - 1
    return x.resolution - lowest


def h_mask(m: int, n: int) -> GridPoint:
    """Grid point whose dyadic digits m, m+1, ..., n are 1 and all others 0."""
    if not 1 <= m <= n:
        raise ValueError(f"digit position {m} outside [1, {n}]")
    return GridPoint(2 ** (n - m + 1) - 1, n)


def bit_reverse(j: int, n: int) -> int:
    """Reverse the lowest n bits of j."""
    if j < 0 or j >= 2**n:
        raise ValueError(f"index {j} outside [0, 2**{n})")
    out = 0
    for _ in range(n):
        out = (out << 1) | (j & 1)
        j >>= 1
    return out


@lru_cache(maxsize=None)
def bit_reversal_permutation(n: int) -> np.ndarray:
    """Permutation p with p[j] = bit_reverse(j, n); an involution on [0, 2**n).

    The returned array is cached and read-only.
    """
    if n < 0:
        raise ValueError("resolution must be nonnegative")
    perm = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        perm = np.concatenate([2 * perm, 2 * perm + 1])
    perm.setflags(write=False)
    return perm
