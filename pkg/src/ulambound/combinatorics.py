"""Exact integer combinatorics: binomials, Hamming sphere volumes, gcd windows.

Python integers are arbitrary precision, so nothing here can overflow.
"""

from functools import lru_cache
from math import comb, gcd


def binom(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binom needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def sphere_volume(n: int, t: int) -> int:
    """Number of n-bit words within Hamming distance t of a fixed word."""
    if n < 0 or t < 0:
        raise ValueError(f"sphere_volume needs n, t >= 0, got n={n}, t={t}")
    if t >= n:
        return 1 << n
    return sum(comb(n, i) for i in range(t + 1))


@lru_cache(maxsize=None)
def gcd_window(n_minus_s: int, t: int, s: int) -> int:
    """gcd of C(n-s, l) for l = max(0, t-s+1) .. t.

    This is the modulus of the residue constraint on the adversarial weight
    after ``s`` answers when ``n_minus_s`` questions remain.  A window whose
    lower index would go negative is clamped at 0, which puts C(., 0) = 1 in
    the set and makes the modulus 1.  An all-zero window also yields 1.
    """
    if s < 1:
        raise ValueError(f"gcd_window needs s >= 1, got s={s}")
    if n_minus_s < 0 or t < 0:
        raise ValueError(f"gcd_window needs n-s, t >= 0, got {n_minus_s}, {t}")
    g = 0
    for ell in range(max(0, t - s + 1), t + 1):
        g = gcd(g, binom(n_minus_s, ell))
    return g if g else 1
