"""Sphere-packing and liar-game lower bounds on binary code length.

The sphere-packing (Hamming) test is ``m * V(n, t) <= 2**n`` with ``V`` the
radius-``t`` Hamming ball volume.  The sharper test follows the adversarial
Spencer weight through the ``n`` answers: the weight can at best halve per
answer, it stays an integer, and it stays in a fixed residue class modulo a
binomial gcd.  The least integer sequence obeying those three rules is the
K-sequence; length ``n`` is ruled out when some ``K_i`` exceeds ``2**(n-i)``.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import gcd_window, sphere_volume

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodeParams:
    m: int
    t: int
    n: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"code size m must be >= 1, got {self.m}")
        if self.t < 0:
            raise ValueError(f"capability t must be >= 0, got {self.t}")
        if self.n is not None and self.n < 0:
            raise ValueError(f"length n must be >= 0, got {self.n}")

    @property
    def d(self) -> int:
        """Minimum distance needed to correct ``t`` errors."""
        return 2 * self.t + 1


@dataclass(frozen=True)
class KSequence:
    params: CodeParams
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Feasibility:
    """Outcome of the K-sequence test at one length.

    Truthiness is the verdict.  On failure ``index`` is the first step ``i``
    with ``K_i > 2**(n-i)`` and ``k_value``/``limit`` are that pair.
    """

    n: int
    feasible: bool
    index: int | None = None
    k_value: int | None = None
    limit: int | None = None

    def __bool__(self) -> bool:
        return self.feasible


@dataclass(frozen=True)
class BoundResult:
    m: int
    t: int
    spb_n: int
    new_n: int

    @property
    def improved(self) -> bool:
        return self.new_n > self.spb_n


def _check(n: int, m: int, t: int) -> None:
    CodeParams(m, t, n)


def spb_feasible(n: int, m: int, t: int) -> bool:
    _check(n, m, t)
    return m * sphere_volume(n, t) <= 1 << n


def spb_min_length(m: int, t: int) -> int:
    """Smallest ``n`` passing the sphere-packing test."""
    _check(0, m, t)
    # V(n, t) >= 1, so 2**n >= m is necessary
    n = (m - 1).bit_length()
    while m * sphere_volume(n, t) > 1 << n:
        n += 1
    return n


def _next_k(prev: int, n: int, m: int, t: int, i: int) -> tuple[int, int]:
    """Least integer >= prev/2 in the residue class of step ``i``; also returns the modulus."""
    base = -(-prev // 2)
    mod = gcd_window(n - i, t, i)
    if mod == 1:
        return base, 1
    r = (m * sphere_volume(n - i, t)) % mod
    return base + (r - base) % mod, mod


def k_sequence(n: int, m: int, t: int) -> KSequence:
    _check(n, m, t)
    values = [m * sphere_volume(n, t)]
    for i in range(1, n + 1):
        values.append(_next_k(values[-1], n, m, t, i)[0])
    return KSequence(CodeParams(m, t, n), tuple(values))


def theorem2_feasible(n: int, m: int, t: int) -> Feasibility:
    """Check ``K_i <= 2**(n-i)`` along the K-sequence for length ``n``.

    Step 0 is included.  For ``n >= 1`` it is implied by step 1, and for
    ``n = 0`` it is what rules out ``m > 1`` with zero bits.
    """
    _check(n, m, t)
    k = m * sphere_volume(n, t)
    if k > 1 << n:
        return Feasibility(n, False, 0, k, 1 << n)
    for i in range(1, n + 1):
        k, mod = _next_k(k, n, m, t, i)
        limit = 1 << (n - i)
        if k > limit:
            return Feasibility(n, False, i, k, limit)
        if mod == 1 and i > t:
            # every later modulus is 1 too, so K keeps halving under the limit
            break
    return Feasibility(n, True)


def new_bound_min_length(m: int, t: int, lookahead: int = 0) -> int:
    """Smallest ``n`` at or above the sphere-packing length passing the K test.

    Candidates are tried one by one.  With ``lookahead > 0`` the next few
    lengths past the answer are also tested and any infeasible one is logged,
    since monotonicity of the test in ``n`` is not known.
    """
    n = spb_min_length(m, t)
    while True:
        verdict = theorem2_feasible(n, m, t)
        if verdict:
            break
        log.debug("m=%d t=%d: n=%d ruled out at i=%d (%d > %d)",
                  m, t, n, verdict.index, verdict.k_value, verdict.limit)
        n += 1
    for extra in range(1, lookahead + 1):
        if not theorem2_feasible(n + extra, m, t):
            log.warning("non-monotone feasibility for m=%d t=%d: n=%d passes, n=%d fails",
                        m, t, n, n + extra)
    return n


def bound_result(m: int, t: int) -> BoundResult:
    return BoundResult(m, t, spb_min_length(m, t), new_bound_min_length(m, t))


def _sweep_block(args: tuple[int, int, int]) -> list[BoundResult]:
    t, lo, hi = args
    return [bound_result(m, t) for m in range(lo, hi + 1)]


def sweep(m_min: int, m_max: int, t_list: Iterable[int], workers: int = 1,
          chunk: int = 5000) -> list[BoundResult]:
    """Bounds for every (m, t) pair, ordered by t then m.

    ``workers > 1`` splits the grid into blocks across processes; the merged
    list is identical to the sequential one.
    """
    t_list = list(t_list)
    if not 1 <= m_min <= m_max:
        raise ValueError(f"need 1 <= m_min <= m_max, got {m_min}, {m_max}")
    if not t_list:
        raise ValueError("t_list is empty")
    for t in t_list:
        _check(0, 1, t)
    blocks = [(t, lo, min(lo + chunk - 1, m_max))
              for t in t_list for lo in range(m_min, m_max + 1, chunk)]
    if workers <= 1 or len(blocks) == 1:
        parts: Sequence[list[BoundResult]] = [_sweep_block(b) for b in blocks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_block, blocks))
    return [row for part in parts for row in part]
