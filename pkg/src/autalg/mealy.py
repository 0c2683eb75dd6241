"""Letter-to-letter machines acting on words, and the group operations on
the mappings they define.

An initialized machine transforms every word over its alphabet into one
of the same length.  Machines whose letter map is a permutation at every
state have invertible mappings; composing, inverting, and comparing these
mappings (exactly, via bisimulation) gives the group the machine
generates.  Two standing fixtures ship here: the binary odometer, whose
mapping adds one to least-significant-bit-first words, and the classical
five-state machine with generators a, b, c, d whose mappings are
involutions with b c == d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteSet, Word, as_table
from .second_type import PureAutomatonSecond
from .serial import AutomatonMapping, NotInvertible, apply_mapping


@dataclass(frozen=True, slots=True)
class MealyMachine:
    """A machine whose inputs and outputs share one alphabet."""

    states: int
    alphabet: int
    next: tuple[tuple[int, ...], ...]
    out: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.states < 1:
            raise ValueError("need at least one state")
        if self.alphabet < 1:
            raise ValueError("alphabet must be non-empty")
        object.__setattr__(self, "next",
                           as_table("next", self.next, self.states, self.alphabet, self.states))
        object.__setattr__(self, "out",
                           as_table("out", self.out, self.states, self.alphabet, self.alphabet))


def non_invertible_state(m: MealyMachine) -> int | None:
    """First state whose letter map is not a permutation, or None."""
    for q in range(m.states):
        if len(set(m.out[q])) != m.alphabet:
            return q
    return None


def is_invertible(m: MealyMachine) -> bool:
    return non_invertible_state(m) is None


@lru_cache(maxsize=8192)
def as_second(m: MealyMachine) -> PureAutomatonSecond:
    """View the machine as a letter-to-letter automaton with Y == X."""
    return PureAutomatonSecond(FiniteSet(m.states), FiniteSet(m.alphabet),
                               FiniteSet(m.alphabet), m.next, m.out)


@dataclass(frozen=True, slots=True)
class MealyElement:
    """A machine pinned at an initial state: one word mapping."""

    machine: MealyMachine
    initial: int

    def __post_init__(self) -> None:
        if not 0 <= self.initial < self.machine.states:
            raise ValueError(f"initial state {self.initial} out of range")


def identity_element(alphabet: int = 2) -> MealyElement:
    m = MealyMachine(1, alphabet, ((0,) * alphabet,), (tuple(range(alphabet)),))
    return MealyElement(m, 0)


def odometer() -> MealyElement:
    """Adds one to a least-significant-bit-first binary word, truncated to
    the word's length.  State 0 carries, state 1 copies."""
    m = MealyMachine(2, 2, next=((1, 0), (1, 1)), out=((1, 0), (0, 1)))
    return MealyElement(m, 0)


def grigorchuk_machine() -> MealyMachine:
    """The standard five-state binary machine with states a, b, c, d, e
    (e is the identity state)."""
    a, b, c, d, e = range(5)
    nxt = (
        (e, e),  # a
        (a, c),  # b
        (a, d),  # c
        (e, b),  # d
        (e, e),  # e
    )
    out = (
        (1, 0),  # a swaps the first letter
        (0, 1),  # b
        (0, 1),  # c
        (0, 1),  # d
        (0, 1),  # e
    )
    return MealyMachine(5, 2, nxt, out)


def grigorchuk_elements() -> dict[str, MealyElement]:
    m = grigorchuk_machine()
    return {name: MealyElement(m, q) for q, name in enumerate("abcde")}


def element_apply(e: MealyElement, u: Word) -> Word:
    """The image of ``u`` under the initialized run."""
    return apply_mapping(AutomatonMapping(as_second(e.machine), e.initial), u)


def element_compose(e1: MealyElement, e2: MealyElement) -> MealyElement:
    """The mapping applying e1 first and e2 to its output.

    The product machine runs both machines in lockstep on state pairs,
    feeding e1's output letters to e2.
    """
    if e1.machine.alphabet != e2.machine.alphabet:
        raise ValueError("alphabet mismatch")
    m1, m2 = e1.machine, e2.machine
    q2 = m2.states
    nxt = []
    out = []
    for a in range(m1.states):
        for b in range(q2):
            nrow = []
            orow = []
            for x in range(m1.alphabet):
                y = m1.out[a][x]
                nrow.append(m1.next[a][x] * q2 + m2.next[b][y])
                orow.append(m2.out[b][y])
            nxt.append(tuple(nrow))
            out.append(tuple(orow))
    machine = MealyMachine(m1.states * q2, m1.alphabet, tuple(nxt), tuple(out))
    return MealyElement(machine, e1.initial * q2 + e2.initial)


def element_invert(e: MealyElement) -> MealyElement:
    """The inverse mapping: same states, letter maps inverted, transitions
    re-read through the inverted letters."""
    m = e.machine
    bad = non_invertible_state(m)
    if bad is not None:
        raise NotInvertible(bad, f"letter map at state {bad} is not a permutation")
    nxt = []
    out = []
    for q in range(m.states):
        inv = [0] * m.alphabet
        for x in range(m.alphabet):
            inv[m.out[q][x]] = x
        out.append(tuple(inv))
        nxt.append(tuple(m.next[q][inv[y]] for y in range(m.alphabet)))
    return MealyElement(MealyMachine(m.states, m.alphabet, tuple(nxt), tuple(out)),
                        e.initial)


def _bisimulation_blocks(machines: list[MealyMachine]) -> list[list[int]]:
    """Coarsest partition of the disjoint union of state sets where
    equivalent states have equal letter maps and equivalent successors.
    Block ids are assigned by first occurrence, so they are deterministic.
    """
    offsets = []
    nxt: list[tuple[int, ...]] = []
    out: list[tuple[int, ...]] = []
    for m in machines:
        offset = len(nxt)
        offsets.append(offset)
        for q in range(m.states):
            nxt.append(tuple(v + offset for v in m.next[q]))
            out.append(m.out[q])
    total = len(nxt)
    keys: dict[tuple, int] = {}
    block = [keys.setdefault(row, len(keys)) for row in out]
    while True:
        keys = {}
        refined = [keys.setdefault((block[q],) + tuple(block[v] for v in nxt[q]),
                                   len(keys))
                   for q in range(total)]
        if refined == block:
            break
        block = refined
    return [block[offsets[i]:offsets[i] + machines[i].states]
            for i in range(len(machines))]


def element_equal(e1: MealyElement, e2: MealyElement) -> bool:
    """Do the two mappings agree on every word?  Decided exactly by
    partition refinement; no depth bound."""
    if e1.machine.alphabet != e2.machine.alphabet:
        raise ValueError("alphabet mismatch")
    b1, b2 = _bisimulation_blocks([e1.machine, e2.machine])
    return b1[e1.initial] == b2[e2.initial]


def minimize_element(e: MealyElement) -> MealyElement:
    """An equivalent element on the fewest states: restrict to the part
    reachable from the initial state, then merge bisimilar states.
    States of the result are numbered in reachability (breadth-first)
    order of their first representatives."""
    m = e.machine
    reach = [e.initial]
    seen = {e.initial}
    for q in reach:
        for x in range(m.alphabet):
            v = m.next[q][x]
            if v not in seen:
                seen.add(v)
                reach.append(v)
    block = _bisimulation_blocks([m])[0]
    renumber: dict[int, int] = {}
    for q in reach:
        if block[q] not in renumber:
            renumber[block[q]] = len(renumber)
    reps: list[int] = [0] * len(renumber)
    for q in reach:
        reps[renumber[block[q]]] = q
    nxt = tuple(tuple(renumber[block[m.next[reps[i]][x]]] for x in range(m.alphabet))
                for i in range(len(reps)))
    out = tuple(m.out[reps[i]] for i in range(len(reps)))
    machine = MealyMachine(len(reps), m.alphabet, nxt, out)
    return MealyElement(machine, renumber[block[e.initial]])


@dataclass(frozen=True, slots=True)
class OrderResult:
    """Outcome of a bounded order search: the order if one was found
    within the power bound, else the power reached and why the search
    stopped."""

    order: int | None
    reached: int
    reason: str = ""

    def describe(self) -> str:
        if self.order is not None:
            return str(self.order)
        return f"exceeds bound ({self.reason}, reached power {self.reached})"


def element_order_bounded(e: MealyElement, max_power: int = 64,
                          max_states: int = 100_000,
                          minimize_threshold: int = 64) -> OrderResult:
    """Smallest k <= max_power with e^k the identity mapping.

    Powers are built by composition and minimized whenever they exceed
    ``minimize_threshold`` states; if a minimized power still exceeds
    ``max_states`` the search reports the bound instead of failing.
    """
    bad = non_invertible_state(e.machine)
    if bad is not None:
        raise NotInvertible(bad, f"letter map at state {bad} is not a permutation")
    ident = identity_element(e.machine.alphabet)
    power = e
    for k in range(1, max_power + 1):
        if element_equal(power, ident):
            return OrderResult(k, k)
        if k == max_power:
            break
        power = element_compose(power, e)
        if power.machine.states > minimize_threshold:
            power = minimize_element(power)
            if power.machine.states > max_states:
                return OrderResult(None, k + 1, "state cap")
    return OrderResult(None, max_power, "power cap")
