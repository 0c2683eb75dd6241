"""Automata whose outputs carry no algebra: a run's observable output is
the output of its final step only.

A pure automaton acts by input letters; a semigroup automaton acts by a
semigroup whose product folds into the action, subject to

    a . (g1 g2) == (a . g1) . g2          (state law)
    a * (g1 g2) == (a . g1) * g2          (output law)

Every pure automaton induces a faithful semigroup automaton through the
universal pair semigroup S_A x Fun(A,B): see ``semigroupify``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import (
    DEFAULT_CAP,
    CheckReport,
    FiniteSet,
    FunMap,
    PairElement,
    SemigroupTable,
    Transformation,
    Word,
    as_table,
    close_generators,
    multiply_pair,
)


@dataclass(frozen=True, slots=True)
class PureAutomatonFirst:
    """States x inputs -> states/outputs, with no structure on outputs."""

    states: FiniteSet
    inputs: FiniteSet
    outputs: FiniteSet
    next: tuple[tuple[int, ...], ...]
    out: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        a, x = self.states.size, self.inputs.size
        object.__setattr__(self, "next", as_table("next", self.next, a, x, a))
        object.__setattr__(self, "out", as_table("out", self.out, a, x, self.outputs.size))


@dataclass(frozen=True, slots=True)
class SemigroupAutomatonFirst:
    """An automaton acted on by a semigroup, with final-output semantics.

    Construction validates shapes only; run ``check_first_axioms`` to
    verify the action laws (constructors in this package guarantee them,
    hand-built tables may not).
    """

    states: FiniteSet
    gamma: SemigroupTable
    outputs: FiniteSet
    next: tuple[tuple[int, ...], ...]
    out: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        a, g = self.states.size, self.gamma.order
        object.__setattr__(self, "next", as_table("next", self.next, a, g, a))
        object.__setattr__(self, "out", as_table("out", self.out, a, g, self.outputs.size))


def check_first_axioms(m: SemigroupAutomatonFirst) -> CheckReport:
    """Exhaustively verify both action laws; report the first violation."""
    nxt, out, prod = m.next, m.out, m.gamma.product
    for a in range(m.states.size):
        row_a = nxt[a]
        for g1 in range(m.gamma.order):
            a1 = row_a[g1]
            prow = prod[g1]
            for g2 in range(m.gamma.order):
                g12 = prow[g2]
                if row_a[g12] != nxt[a1][g2]:
                    return CheckReport.failed("state law a.(g1 g2) == (a.g1).g2",
                                              (a, g1, g2), row_a[g12], nxt[a1][g2])
                if out[a][g12] != out[a1][g2]:
                    return CheckReport.failed("output law a*(g1 g2) == (a.g1)*g2",
                                              (a, g1, g2), out[a][g12], out[a1][g2])
    return CheckReport.passed()


def to_universal(m: PureAutomatonFirst) -> tuple[PairElement, ...]:
    """The map input -> (sigma_x, phi_x) into S_A x Fun(A,B) that reads
    each input's transition and output columns off the tables."""
    pairs = []
    for x in range(m.inputs.size):
        sigma = Transformation(tuple(m.next[a][x] for a in range(m.states.size)))
        phi = FunMap(tuple(m.out[a][x] for a in range(m.states.size)), m.outputs.size)
        pairs.append(PairElement(sigma, phi))
    return tuple(pairs)


def semigroupify(m: PureAutomatonFirst, cap: int = DEFAULT_CAP) -> SemigroupAutomatonFirst:
    """Close the universal images of the inputs inside S_A x Fun(A,B) and
    read the actions off the closure.

    The result is faithful by construction: table elements literally are
    distinct pair elements, and distinct pairs act distinctly.  Input
    letter x corresponds to generator position x of the result's
    semigroup (``gamma.generators[x]``).
    """
    closure = close_generators(to_universal(m), multiply_pair, cap)
    states = range(m.states.size)
    nxt = tuple(tuple(e.sigma.image[a] for e in closure.elements) for a in states)
    out = tuple(tuple(e.phi.image[a] for e in closure.elements) for a in states)
    return SemigroupAutomatonFirst(m.states, closure.table, m.outputs, nxt, out)


class Run(NamedTuple):
    state: int
    output: int


def act_word(m: PureAutomatonFirst | SemigroupAutomatonFirst, a: int, w: Word) -> Run:
    """Fold the action over a word; the output is the final step's only.

    For a pure automaton the letters index inputs; for a semigroup
    automaton they index generator positions of ``gamma``.
    """
    if isinstance(m, SemigroupAutomatonFirst):
        gens = m.gamma.generators
        if gens is None:
            raise ValueError("semigroup automaton has no generator list")
        if w.alphabet_size != len(gens):
            raise ValueError(f"word over {w.alphabet_size} letters, {len(gens)} generators")
        letters = [gens[letter] for letter in w.letters]
    else:
        if w.alphabet_size != m.inputs.size:
            raise ValueError(f"word over {w.alphabet_size} letters, {m.inputs.size} inputs")
        letters = list(w.letters)
    if not 0 <= a < m.states.size:
        raise ValueError(f"state {a} out of range")
    for letter in letters[:-1]:
        a = m.next[a][letter]
    last = letters[-1]
    return Run(m.next[a][last], m.out[a][last])
