"""Small exact-arithmetic helpers shared across modules."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .lincomb import as_fraction


def hilbert(n: int, q) -> Fraction:
    """H_n(q) = q(q-1)...(q-n+1)/n!, with H_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _hilbert(n, as_fraction(q))


@lru_cache(maxsize=1 << 12)
def _hilbert(n: int, q: Fraction) -> Fraction:
    return prod((q - i for i in range(n)), start=Fraction(1)) / factorial(n)


@lru_cache(maxsize=None)
def segmentations(k: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All ways to cut ``range(k)`` into consecutive nonempty segments.

    Each segmentation is a tuple of half-open ``(start, stop)`` pairs; there are
    2^(k-1) of them for k >= 1 and exactly one (empty) for k = 0.
    """
    if k == 0:
        return ((),)
    out = []
    for mask in range(1 << (k - 1)):
        segs, start = [], 0
        for i in range(1, k):
            if mask >> (i - 1) & 1:
                segs.append((start, i))
                start = i
        segs.append((start, k))
        out.append(tuple(segs))
    return tuple(out)
