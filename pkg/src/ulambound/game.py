"""Ulam's liar game on Spencer's chip-and-bin state space.

Chips are the integers ``0..m-1``.  Bin ``i`` holds the chips that have had
``i`` answers cast against them; a chip pushed past bin ``t`` is lost.  States
are immutable, and every update returns a new state.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from .combinatorics import sphere_volume

YES = "Y"
NO = "N"
ANSWERS = (YES, NO)

EXHAUSTIVE_CAP = 1 << 20
"""Largest number of question profiles the balanced questioner enumerates."""

TRACE_VERSION = 1


class GameError(ValueError):
    pass


@dataclass(frozen=True)
class GameParams:
    m: int
    t: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.t < 0 or self.n < 0:
            raise GameError(f"invalid game parameters {self}")


@dataclass(frozen=True)
class SpencerState:
    params: GameParams
    bins: tuple[frozenset[int], ...]
    step: int = 0
    lost: frozenset[int] = frozenset()

    @property
    def survivors(self) -> frozenset[int]:
        return frozenset().union(*self.bins)

    @property
    def remaining(self) -> int:
        return self.params.n - self.step

    def profile(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bins)

    def weight(self) -> int:
        return spencer_weight(self)


def initial_state(params: GameParams) -> SpencerState:
    bins = (frozenset(range(params.m)),) + (frozenset(),) * params.t
    return SpencerState(params, bins)


def _as_chips(state: SpencerState, chips: Iterable[int]) -> frozenset[int]:
    a = frozenset(chips)
    bad = [c for c in a if not 0 <= c < state.params.m]
    if bad:
        raise GameError(f"chips {sorted(bad)} outside 0..{state.params.m - 1}")
    return a


def apply_answer(state: SpencerState, question: Iterable[int], answer: str) -> SpencerState:
    """Move chips one bin right when the answer goes against them.

    A "No" counts against the chips in the question, a "Yes" against the rest.
    Lost chips named in the question are ignored.
    """
    if state.step >= state.params.n:
        raise GameError(f"question budget n={state.params.n} exhausted")
    if answer not in ANSWERS:
        raise GameError(f"answer must be Y or N, got {answer!r}")
    a = _as_chips(state, question)
    against = [v & a if answer == NO else v - a for v in state.bins]
    kept = [v - x for v, x in zip(state.bins, against)]
    bins = [kept[0]] + [kept[i] | against[i - 1] for i in range(1, len(kept))]
    return SpencerState(state.params, tuple(bins), state.step + 1, state.lost | against[-1])


def _bin_weights(t: int, remaining: int) -> list[int]:
    """Per-chip weight of bins 0..t with ``remaining`` questions left, plus 0 for lost."""
    return [sphere_volume(remaining, t - i) for i in range(t + 1)] + [0]


def spencer_weight(state: SpencerState, n: int | None = None) -> int:
    """Sum over bins of chip count times V(n - step, t - bin)."""
    n = state.params.n if n is None else n
    if state.step > n:
        raise GameError(f"step {state.step} beyond n={n}")
    w = _bin_weights(state.params.t, n - state.step)
    return sum(len(b) * w[i] for i, b in enumerate(state.bins))


def weight_split(state: SpencerState, question: Iterable[int]) -> tuple[int, int]:
    return (spencer_weight(apply_answer(state, question, YES)),
            spencer_weight(apply_answer(state, question, NO)))


def _profile_split(profile: Sequence[int], counts: Sequence[int], w: Sequence[int]) -> tuple[int, int]:
    """Child weights when ``counts[i]`` of the ``profile[i]`` chips of bin i are asked about."""
    yes = no = 0
    for i, (size, a) in enumerate(zip(profile, counts)):
        yes += a * w[i] + (size - a) * w[i + 1]
        no += (size - a) * w[i] + a * w[i + 1]
    return yes, no


@dataclass(frozen=True)
class Choice:
    question: frozenset[int]
    heuristic: bool = False


def questioner_balanced(state: SpencerState, cap: int = EXHAUSTIVE_CAP) -> Choice:
    """Question minimizing the heavier child weight.

    Chips sharing a bin are interchangeable, so a question is determined up
    to relabelling by how many chips it takes from each bin.  Those count
    profiles are enumerated exactly when there are at most ``cap`` of them;
    otherwise chips are placed greedily, heaviest first, on the lighter side.
    The question uses the lowest-numbered chips of each bin.
    """
    if state.remaining <= 0:
        raise GameError("no questions remain")
    w = _bin_weights(state.params.t, state.remaining - 1)
    profile = state.profile()
    space = 1
    for size in profile:
        space *= size + 1
    ordered = [sorted(b) for b in state.bins]

    if space <= cap:
        best, best_counts = None, None
        for counts in product(*(range(s + 1) for s in profile)):
            worst = max(_profile_split(profile, counts, w))
            if best is None or worst < best:
                best, best_counts = worst, counts
        chosen = [c for cs, k in zip(ordered, best_counts) for c in cs[:k]]
        return Choice(frozenset(chosen))

    yes = no = 0
    chosen = []
    for i, chips in enumerate(ordered):
        for c in chips:
            heavy, light = w[i], w[i + 1]
            # in the question: heavy goes to Yes; outside: heavy goes to No
            if yes <= no:
                chosen.append(c)
                yes, no = yes + heavy, no + light
            else:
                yes, no = yes + light, no + heavy
    return Choice(frozenset(chosen), heuristic=True)


def adversary_max_weight(state: SpencerState, question: Iterable[int]) -> str:
    """Answer leaving the heavier child; ties go to No unless No kills every chip."""
    question = frozenset(question)
    yes_state = apply_answer(state, question, YES)
    no_state = apply_answer(state, question, NO)
    wy, wn = spencer_weight(yes_state), spencer_weight(no_state)
    if wy > wn:
        return YES
    if wy == wn and not no_state.survivors and yes_state.survivors:
        return YES
    return NO


@dataclass(frozen=True)
class Step:
    question: frozenset[int]
    answer: str
    state: SpencerState
    weight: int
    heuristic: bool = False


@dataclass(frozen=True)
class GameTrace:
    params: GameParams
    start: SpencerState
    steps: tuple[Step, ...] = field(default_factory=tuple)

    @property
    def final(self) -> SpencerState:
        return self.steps[-1].state if self.steps else self.start

    @property
    def conclusive(self) -> bool:
        return len(self.final.survivors) == 1

    @property
    def outcome(self) -> tuple[str, frozenset[int]]:
        """("Conclusive", {chip}) or ("Inconclusive", survivors)."""
        return ("Conclusive" if self.conclusive else "Inconclusive", self.final.survivors)

    def states(self) -> list[SpencerState]:
        return [self.start] + [s.state for s in self.steps]


Questioner = Callable[[SpencerState], "Choice | Iterable[int]"]
Answerer = Callable[[SpencerState, frozenset], str]


def run_game(params: GameParams,
             questions: Questioner | Sequence[Iterable[int]] = questioner_balanced,
             answers: Answerer | Sequence[str] = adversary_max_weight,
             start: SpencerState | None = None) -> GameTrace:
    """Play the game and record every step.

    ``questions`` and ``answers`` are either strategies (callables) or
    scripts (sequences).  With a script the game lasts as long as the script;
    with strategies on both sides it runs until the budget is spent.  Play
    resumes from ``start`` when given.
    """
    state = initial_state(params) if start is None else start
    if state.params != params:
        raise GameError("start state belongs to a different game")
    q_script = None if callable(questions) else list(questions)
    a_script = None if callable(answers) else list(answers)
    for script in (q_script, a_script):
        if script is not None and len(script) > state.remaining:
            raise GameError(f"script has {len(script)} steps, {state.remaining} questions remain")
    length = state.remaining
    if q_script is not None:
        length = len(q_script)
    if a_script is not None:
        if q_script is not None and len(a_script) != len(q_script):
            raise GameError("question and answer scripts differ in length")
        length = len(a_script)

    start, steps = state, []
    for j in range(length):
        if q_script is not None:
            choice = Choice(_as_chips(state, q_script[j]))
        else:
            choice = questions(state)
            if not isinstance(choice, Choice):
                choice = Choice(_as_chips(state, choice))
        answer = a_script[j] if a_script is not None else answers(state, choice.question)
        state = apply_answer(state, choice.question, answer)
        steps.append(Step(choice.question, answer, state, spencer_weight(state), choice.heuristic))
    return GameTrace(params, start, tuple(steps))


# --- text formats -----------------------------------------------------------

def _fmt_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(c) for c in sorted(s)) + "}"


def _parse_set(text: str) -> frozenset[int]:
    inner = text.strip()
    if not (inner.startswith("{") and inner.endswith("}")):
        raise GameError(f"malformed chip set {text!r}")
    inner = inner[1:-1].strip()
    return frozenset(int(x) for x in inner.split(",")) if inner else frozenset()


def _state_line(step: int, question, answer, state: SpencerState, weight: int) -> str:
    a = "-" if question is None else _fmt_set(question)
    bins = "|".join(_fmt_set(b) for b in state.bins)
    return (f"step={step} A={a} answer={answer or '-'} bins={bins} "
            f"lost={_fmt_set(state.lost)} weight={weight}")


def format_trace(trace: GameTrace) -> str:
    p = trace.params
    lines = [f"# ulam-trace v{TRACE_VERSION} m={p.m} t={p.t} n={p.n}",
             _state_line(trace.start.step, None, None, trace.start, spencer_weight(trace.start))]
    for s in trace.steps:
        line = _state_line(s.state.step, s.question, s.answer, s.state, s.weight)
        lines.append(line + (" heuristic=1" if s.heuristic else ""))
    kind, chips = trace.outcome
    lines.append(f"outcome={kind} survivors={_fmt_set(chips)}")
    return "\n".join(lines) + "\n"


_STEP_RE = re.compile(
    r"^step=(\d+) A=(\S+) answer=([YN-]) bins=(\S+) lost=(\S+) weight=(\d+)( heuristic=1)?$")


def parse_trace(text: str) -> GameTrace:
    """Inverse of :func:`format_trace`; recomputed weights must match the recorded ones."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = re.match(r"^# ulam-trace v(\d+) m=(\d+) t=(\d+) n=(\d+)$", lines[0]) if lines else None
    if not head or int(head.group(1)) != TRACE_VERSION:
        raise GameError("missing or unsupported trace header")
    params = GameParams(*(int(head.group(k)) for k in (2, 3, 4)))
    start, steps = None, []
    for line in lines[1:]:
        if line.startswith("outcome="):
            break
        mt = _STEP_RE.match(line)
        if not mt:
            raise GameError(f"malformed trace line {line!r}")
        bins = tuple(_parse_set(b) for b in mt.group(4).split("|"))
        state = SpencerState(params, bins, int(mt.group(1)), _parse_set(mt.group(5)))
        weight = int(mt.group(6))
        if weight != spencer_weight(state):
            raise GameError(f"recorded weight {weight} disagrees with state at step {state.step}")
        if start is None:
            start = state
        else:
            steps.append(Step(_parse_set(mt.group(2)), mt.group(3), state, weight,
                              bool(mt.group(7))))
    if start is None:
        raise GameError("trace has no states")
    return GameTrace(params, start, tuple(steps))


def parse_script(text: str) -> tuple[list[frozenset[int]], list[str | None]]:
    """Read ``A=<chips> answer=<Y|N>`` lines; answers may be omitted, ``#`` starts a comment."""
    questions, answers = [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        mt = re.match(r"^A=([0-9,\s]*?)(?:\s+answer=([YN]))?$", line)
        if not mt:
            raise GameError(f"malformed script line {raw!r}")
        chips = [x for x in mt.group(1).replace(" ", "").split(",") if x]
        questions.append(frozenset(int(x) for x in chips))
        answers.append(mt.group(2))
    return questions, answers
