"""Brute-force ground truth for small parameters.

Nothing here uses the bound formulas or the weight function: code existence
is decided by exhaustive backtracking over codewords, and the adaptive game
by a full game-tree search.  Both are meant for desk-scale inputs only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

CODE_N_CAP = 14
GAME_M_CAP = 6
GAME_N_CAP = 10
GAME_T_CAP = 2

PLAYER1 = "Player1"
PLAYER2 = "Player2"


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class BinaryCode:
    n: int
    words: tuple[int, ...]

    @classmethod
    def from_bits(cls, strings) -> "BinaryCode":
        strings = list(strings)
        if not strings:
            raise ValueError("empty code")
        n = len(strings[0])
        if any(len(s) != n or set(s) - {"0", "1"} for s in strings):
            raise ValueError(f"codewords must be {n}-bit strings: {strings}")
        return cls(n, tuple(int(s, 2) for s in strings))

    def bits(self) -> list[str]:
        return [format(w, f"0{self.n}b") if self.n else "" for w in self.words]

    def min_distance(self) -> int | None:
        if len(self.words) < 2:
            return None
        return min(bin(a ^ b).count("1") for a, b in combinations(self.words, 2))


def validate_code(code: BinaryCode, t: int) -> bool:
    """True iff all pairwise distances are at least 2t+1."""
    if len(set(code.words)) != len(code.words):
        raise ValueError("duplicate codewords")
    if any(not 0 <= w < 1 << code.n for w in code.words):
        raise ValueError(f"codeword outside {code.n} bits")
    d = code.min_distance()
    return d is None or d >= 2 * t + 1


@dataclass(frozen=True)
class SearchCertificate:
    n: int
    m: int
    d: int
    code: BinaryCode | None
    nodes: int

    @property
    def exists(self) -> bool:
        return self.code is not None

    @property
    def verdict(self) -> str:
        return "Exists" if self.exists else "Exhausted"

    def format(self) -> str:
        lines = [f"query n={self.n} m={self.m} d={self.d}",
                 f"verdict={self.verdict} nodes={self.nodes}"]
        if self.code is not None:
            lines += self.code.bits()
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "SearchCertificate":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        q = dict(kv.split("=") for kv in lines[0].split()[1:])
        v = dict(kv.split("=") for kv in lines[1].split())
        n, m, d = int(q["n"]), int(q["m"]), int(q["d"])
        code = None
        if v["verdict"] == "Exists":
            code = BinaryCode.from_bits(lines[2:]) if n else BinaryCode(0, (0,))
        elif v["verdict"] != "Exhausted" or len(lines) > 2:
            raise ValueError("malformed certificate")
        return cls(n, m, d, code, int(v["nodes"]))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _color_bound(cand: int, adj: list[int]) -> int:
    """Greedy colouring of the compatibility graph on ``cand``; colour count bounds any clique."""
    colors = 0
    while cand:
        colors += 1
        avail = cand
        while avail:
            v = (avail & -avail).bit_length() - 1
            cand &= ~(1 << v)
            avail &= ~(1 << v) & ~adj[v]
    return colors


def code_exists(n: int, m: int, d: int, cap: int = CODE_N_CAP) -> SearchCertificate:
    """Decide whether m words of length n with pairwise distance >= d exist.

    The first word is fixed to zero (distance is XOR-invariant) and further
    words are chosen in increasing numeric order.  Branches are cut when the
    words still compatible with every chosen word cannot complete the code,
    using a greedy colouring as the bound.
    """
    if n < 0 or m < 1 or d < 0:
        raise ValueError(f"invalid query n={n} m={m} d={d}")
    if n > cap:
        raise CapExceeded(f"n={n} above the code search cap {cap}")
    size = 1 << n
    if m > size:
        return SearchCertificate(n, m, d, None, 0)
    full = (1 << size) - 1
    near = [p for p in range(size) if _popcount(p) < d]
    adj = []
    for a in range(size):
        ball = 0
        for p in near:
            ball |= 1 << (a ^ p)
        adj.append(full & ~ball)

    nodes = 0
    chosen = [0]

    def extend(cand: int) -> bool:
        nonlocal nodes
        nodes += 1
        need = m - len(chosen)
        if need == 0:
            return True
        if _popcount(cand) < need or _color_bound(cand, adj) < need:
            return False
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            if _popcount(cand) + 1 < need:
                return False
            chosen.append(v)
            if extend(cand & adj[v]):
                return True
            chosen.pop()
        return False

    if extend(adj[0] & ~1):
        return SearchCertificate(n, m, d, BinaryCode(n, tuple(chosen)), nodes)
    return SearchCertificate(n, m, d, None, nodes)


def max_code_size(n: int, d: int, cap: int = CODE_N_CAP) -> int:
    """Largest m for which :func:`code_exists` finds a code."""
    m = 1
    while m < 1 << n and code_exists(n, m + 1, d, cap).exists:
        m += 1
    return m


def _child(profile: tuple[int, ...], counts: tuple[int, ...], answer_yes: bool) -> tuple[int, ...]:
    """Bin sizes after an answer; chips the answer counts against shift one bin right."""
    moved = [a if not answer_yes else s - a for s, a in zip(profile, counts)]
    stay = [s - x for s, x in zip(profile, moved)]
    return tuple(stay[i] + (moved[i - 1] if i else 0) for i in range(len(profile)))


@lru_cache(maxsize=None)
def _questioner_wins(profile: tuple[int, ...], left: int) -> bool:
    if sum(profile) <= 1:
        return True
    if left == 0:
        return False
    for counts in product(*(range(s + 1) for s in profile)):
        # a question and its complement are the same question
        if counts > tuple(s - a for s, a in zip(profile, counts)):
            continue
        if (_questioner_wins(_child(profile, counts, True), left - 1)
                and _questioner_wins(_child(profile, counts, False), left - 1)):
            return True
    return False


def minimax_game(m: int, t: int, n: int, caps: tuple[int, int, int] | None = None) -> str:
    """Winner of the (m, t, n) liar game under perfect play.

    Player 2 wins when some adaptive questioning leaves at most one chip
    after at most n answers, whatever the answers.  A state with no chips
    cannot arise from an honest-up-to-t Player 1, so it counts for Player 2.
    """
    m_cap, t_cap, n_cap = caps or (GAME_M_CAP, GAME_T_CAP, GAME_N_CAP)
    if m < 1 or t < 0 or n < 0:
        raise ValueError(f"invalid game ({m}, {t}, {n})")
    if m > m_cap or t > t_cap or n > n_cap:
        raise CapExceeded(f"game ({m}, {t}, {n}) above caps m<={m_cap} t<={t_cap} n<={n_cap}")
    start = (m,) + (0,) * t
    return PLAYER2 if _questioner_wins(start, n) else PLAYER1
