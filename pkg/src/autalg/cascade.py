"""Cascade connections of two automata, triple morphisms, the wreath
product, and the embedding of every cascade into it.

A cascade of (A1, -, B1) and (A2, -, B2) runs on A1 x A2: the second
coordinate sees the raw input through beta while steering the first
coordinate's input through alpha, which also reads the second state:

    (a1, a2) . x == (a1 . alpha(a2, x), a2 . beta(x))

For semigroup automata beta must be a homomorphism and alpha must satisfy
the crossed law alpha(a2, g1 g2) == alpha(a2, g1) alpha(a2 . beta(g1), g2).
The wreath product is the largest such connection: every other one maps
into it, uniquely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    DEFAULT_CAP,
    CapExceeded,
    CheckReport,
    FiniteSet,
    SemigroupTable,
    VerificationError,
    as_table,
)
from .first_type import PureAutomatonFirst, SemigroupAutomatonFirst


def product_set(s1: FiniteSet, s2: FiniteSet) -> FiniteSet:
    """A1 x A2 flattened row-major: (i, j) becomes i * |A2| + j."""
    labels = tuple(f"({s1.label(i)},{s2.label(j)})"
                   for i in range(s1.size) for j in range(s2.size))
    return FiniteSet(s1.size * s2.size, labels)


@dataclass(frozen=True, slots=True)
class CascadeTriplePure:
    """The datum (X, alpha, beta) steering a cascade of pure automata."""

    inputs: FiniteSet
    alpha: tuple[tuple[int, ...], ...]  # [a2][x] -> input of the first automaton
    beta: tuple[int, ...]               # [x]     -> input of the second automaton

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(tuple(r) for r in self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        if len(self.beta) != self.inputs.size:
            raise ValueError(f"beta has {len(self.beta)} entries for {self.inputs.size} inputs")
        for i, row in enumerate(self.alpha):
            if len(row) != self.inputs.size:
                raise ValueError(f"alpha[{i}] has {len(row)} entries for {self.inputs.size} inputs")


def check_pure_triple(t: CascadeTriplePure, m1: PureAutomatonFirst,
                      m2: PureAutomatonFirst) -> None:
    """Raise if the triple's tables do not fit the component automata."""
    as_table("alpha", t.alpha, m2.states.size, t.inputs.size, m1.inputs.size)
    as_table("beta", (t.beta,), 1, t.inputs.size, m2.inputs.size)


def cascade_pure(m1: PureAutomatonFirst, m2: PureAutomatonFirst,
                 t: CascadeTriplePure) -> PureAutomatonFirst:
    """The cascade connection of two pure automata along a triple."""
    check_pure_triple(t, m1, m2)
    n2 = m2.states.size
    b2 = m2.outputs.size
    states = product_set(m1.states, m2.states)
    outputs = product_set(m1.outputs, m2.outputs)
    nxt = []
    out = []
    for a1 in range(m1.states.size):
        for a2 in range(n2):
            nrow = []
            orow = []
            for x in range(t.inputs.size):
                x1 = t.alpha[a2][x]
                x2 = t.beta[x]
                nrow.append(m1.next[a1][x1] * n2 + m2.next[a2][x2])
                orow.append(m1.out[a1][x1] * b2 + m2.out[a2][x2])
            nxt.append(tuple(nrow))
            out.append(tuple(orow))
    return PureAutomatonFirst(states, t.inputs, outputs, tuple(nxt), tuple(out))


def check_triple_morphism(t: CascadeTriplePure, t2: CascadeTriplePure,
                          mu: tuple[int, ...]) -> CheckReport:
    """Does relabelling inputs by ``mu`` carry t's tables into t2's?

    Passes iff alpha(a2, x) == alpha2(a2, mu(x)) and beta(x) == beta2(mu(x)).
    """
    if len(mu) != t.inputs.size:
        raise ValueError(f"mu has {len(mu)} entries for {t.inputs.size} inputs")
    if len(t.alpha) != len(t2.alpha):
        raise ValueError("triples live over different second-component state sets")
    for x, mx in enumerate(mu):
        if not 0 <= mx < t2.inputs.size:
            raise ValueError(f"mu[{x}] = {mx} out of range")
        if t.beta[x] != t2.beta[mx]:
            return CheckReport.failed("beta == beta' . mu", (x,), t.beta[x], t2.beta[mx])
        for a2 in range(len(t.alpha)):
            if t.alpha[a2][x] != t2.alpha[a2][mx]:
                return CheckReport.failed("alpha == alpha' . mu", (a2, x),
                                          t.alpha[a2][x], t2.alpha[a2][mx])
    return CheckReport.passed()


@dataclass(frozen=True, slots=True)
class CascadeTripleSemigroup:
    """The datum (Gamma, alpha, beta) steering a semigroup cascade.

    Validity against the component automata (beta a homomorphism, alpha
    crossed) is checked by ``check_semigroup_triple``.
    """

    gamma: SemigroupTable
    alpha: tuple[tuple[int, ...], ...]  # [a2][g] -> element of Gamma1
    beta: tuple[int, ...]               # [g]     -> element of Gamma2

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(tuple(r) for r in self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        if len(self.beta) != self.gamma.order:
            raise ValueError(f"beta has {len(self.beta)} entries for order {self.gamma.order}")
        for i, row in enumerate(self.alpha):
            if len(row) != self.gamma.order:
                raise ValueError(f"alpha[{i}] has {len(row)} entries for order {self.gamma.order}")


def check_semigroup_triple(t: CascadeTripleSemigroup, m1: SemigroupAutomatonFirst,
                           m2: SemigroupAutomatonFirst) -> CheckReport:
    """beta must be a homomorphism into m2's semigroup and alpha must
    satisfy the crossed law against m2's action."""
    as_table("alpha", t.alpha, m2.states.size, t.gamma.order, m1.gamma.order)
    as_table("beta", (t.beta,), 1, t.gamma.order, m2.gamma.order)
    prod = t.gamma.product
    p1, p2 = m1.gamma.product, m2.gamma.product
    for g1 in range(t.gamma.order):
        for g2 in range(t.gamma.order):
            g12 = prod[g1][g2]
            if t.beta[g12] != p2[t.beta[g1]][t.beta[g2]]:
                return CheckReport.failed("beta homomorphism", (g1, g2),
                                          t.beta[g12], p2[t.beta[g1]][t.beta[g2]])
    for a2 in range(m2.states.size):
        for g1 in range(t.gamma.order):
            a2_moved = m2.next[a2][t.beta[g1]]
            for g2 in range(t.gamma.order):
                g12 = prod[g1][g2]
                rhs = p1[t.alpha[a2][g1]][t.alpha[a2_moved][g2]]
                if t.alpha[a2][g12] != rhs:
                    return CheckReport.failed(
                        "crossed law alpha(a2, g1 g2) == alpha(a2, g1) alpha(a2.beta(g1), g2)",
                        (a2, g1, g2), t.alpha[a2][g12], rhs)
    return CheckReport.passed()


def check_semigroup_triple_morphism(t: CascadeTripleSemigroup, t2: CascadeTripleSemigroup,
                                    mu: tuple[int, ...]) -> CheckReport:
    """Is ``mu`` a morphism of semigroup triples (a homomorphism commuting
    with both alpha and beta)?"""
    if len(mu) != t.gamma.order:
        raise ValueError(f"mu has {len(mu)} entries for order {t.gamma.order}")
    if len(t.alpha) != len(t2.alpha):
        raise ValueError("triples live over different second-component state sets")
    for g1 in range(t.gamma.order):
        for g2 in range(t.gamma.order):
            lhs = mu[t.gamma.product[g1][g2]]
            rhs = t2.gamma.product[mu[g1]][mu[g2]]
            if lhs != rhs:
                return CheckReport.failed("mu homomorphism", (g1, g2), lhs, rhs)
    for g in range(t.gamma.order):
        if t.beta[g] != t2.beta[mu[g]]:
            return CheckReport.failed("beta == beta' . mu", (g,), t.beta[g], t2.beta[mu[g]])
        for a2 in range(len(t.alpha)):
            if t.alpha[a2][g] != t2.alpha[a2][mu[g]]:
                return CheckReport.failed("alpha == alpha' . mu", (a2, g),
                                          t.alpha[a2][g], t2.alpha[a2][mu[g]])
    return CheckReport.passed()


def cascade_semigroup(m1: SemigroupAutomatonFirst, m2: SemigroupAutomatonFirst,
                      t: CascadeTripleSemigroup) -> SemigroupAutomatonFirst:
    """The cascade of two semigroup automata along a (Gamma, alpha, beta)
    triple; with a valid triple the result satisfies the action laws."""
    as_table("alpha", t.alpha, m2.states.size, t.gamma.order, m1.gamma.order)
    as_table("beta", (t.beta,), 1, t.gamma.order, m2.gamma.order)
    n2 = m2.states.size
    b2 = m2.outputs.size
    states = product_set(m1.states, m2.states)
    outputs = product_set(m1.outputs, m2.outputs)
    nxt = []
    out = []
    for a1 in range(m1.states.size):
        for a2 in range(n2):
            nrow = []
            orow = []
            for g in range(t.gamma.order):
                g1 = t.alpha[a2][g]
                g2 = t.beta[g]
                nrow.append(m1.next[a1][g1] * n2 + m2.next[a2][g2])
                orow.append(m1.out[a1][g1] * b2 + m2.out[a2][g2])
            nxt.append(tuple(nrow))
            out.append(tuple(orow))
    return SemigroupAutomatonFirst(states, t.gamma, outputs, tuple(nxt), tuple(out))


@dataclass(frozen=True, slots=True)
class WreathElement:
    """A pair (bar, g2): a map A2 -> Gamma1 together with an element of
    Gamma2."""

    bar: tuple[int, ...]
    g2: int


@dataclass(frozen=True, slots=True)
class WreathProduct:
    """The full function-space wreath product of two semigroups relative
    to an action of the second on a finite set.

    Elements are enumerated with the function part varying lexicographically
    and the Gamma2 part fastest, so ranks are arithmetic: see ``index``.
    """

    g1: SemigroupTable
    a2: FiniteSet
    action: tuple[tuple[int, ...], ...]  # [a2][g2] -> a2
    g2: SemigroupTable
    table: SemigroupTable
    elements: tuple[WreathElement, ...]

    def index(self, e: WreathElement) -> int:
        rank = 0
        for v in e.bar:
            rank = rank * self.g1.order + v
        return rank * self.g2.order + e.g2


def wreath_product(g1: SemigroupTable, a2: FiniteSet,
                   action: tuple[tuple[int, ...], ...], g2: SemigroupTable,
                   cap: int = DEFAULT_CAP) -> WreathProduct:
    """Build the wreath product of g1 by g2 acting on a2.

    The carrier is every map a2 -> g1 paired with an element of g2, so the
    order is exactly |g1| ** |a2| * |g2|; multiplication shifts the right
    factor's map by the left factor's g2 part:

        (f, s)(f', s') == (a |-> f(a) f'(a . s), s s')
    """
    action = as_table("action", action, a2.size, g2.order, a2.size)
    for a in range(a2.size):
        for s in range(g2.order):
            moved = action[a][s]
            for s2 in range(g2.order):
                if action[a][g2.product[s][s2]] != action[moved][s2]:
                    raise ValueError(
                        f"not an action: a.(s s') != (a.s).s' at ({a}, {s}, {s2})")
    order = g1.order ** a2.size * g2.order
    if order > cap:
        raise CapExceeded(f"wreath product order {order} exceeds cap {cap}")
    elements = tuple(WreathElement(bar, s)
                     for bar in itertools.product(range(g1.order), repeat=a2.size)
                     for s in range(g2.order))
    rank = {e: i for i, e in enumerate(elements)}
    p1, p2 = g1.product, g2.product
    rows = []
    for e in elements:
        row = []
        for f in elements:
            bar = tuple(p1[e.bar[a]][f.bar[action[a][e.g2]]] for a in range(a2.size))
            row.append(rank[WreathElement(bar, p2[e.g2][f.g2])])
        rows.append(tuple(row))
    table = SemigroupTable(order, tuple(rows))
    return WreathProduct(g1, a2, action, g2, table, elements)


def wreath_semigroup(g1: SemigroupTable, a2: FiniteSet,
                     action: tuple[tuple[int, ...], ...], g2: SemigroupTable,
                     cap: int = DEFAULT_CAP) -> SemigroupTable:
    """The wreath product's multiplication table alone."""
    return wreath_product(g1, a2, action, g2, cap).table


def wreath_triple(w: WreathProduct) -> CascadeTripleSemigroup:
    """The wreath product's own steering triple: alpha evaluates the
    function part at a2 and beta projects to the second factor."""
    alpha = tuple(tuple(e.bar[a] for e in w.elements) for a in range(w.a2.size))
    beta = tuple(e.g2 for e in w.elements)
    return CascadeTripleSemigroup(w.table, alpha, beta)


def wreath_automaton(m1: SemigroupAutomatonFirst, m2: SemigroupAutomatonFirst,
                     cap: int = DEFAULT_CAP
                     ) -> tuple[SemigroupAutomatonFirst, CascadeTripleSemigroup]:
    """The wreath product of two semigroup automata: the cascade of m1 and
    m2 along the wreath product's own triple, using m2's transition table
    as the action of its semigroup on its states."""
    w = wreath_product(m1.gamma, m2.states, m2.next, m2.gamma, cap)
    t = wreath_triple(w)
    return cascade_semigroup(m1, m2, t), t


def embed_into_wreath(t: CascadeTripleSemigroup, w: WreathProduct) -> tuple[int, ...]:
    """The canonical homomorphism from a cascade triple's semigroup into
    the wreath product: g |-> (a2 |-> alpha(a2, g), beta(g)).

    Verifies that the map is a homomorphism, that it commutes with both
    triples' alpha and beta, and that it is the only map doing so (the
    wreath coordinates force it pointwise).  Any failure raises
    VerificationError; with a valid triple none can occur.
    """
    n_a2 = w.a2.size
    if len(t.alpha) != n_a2:
        raise ValueError(f"alpha has {len(t.alpha)} state rows, wreath expects {n_a2}")
    as_table("alpha", t.alpha, n_a2, t.gamma.order, w.g1.order)
    as_table("beta", (t.beta,), 1, t.gamma.order, w.g2.order)
    phi = tuple(w.index(WreathElement(tuple(t.alpha[a2][g] for a2 in range(n_a2)),
                                      t.beta[g]))
                for g in range(t.gamma.order))
    wt = wreath_triple(w)
    morphism = check_semigroup_triple_morphism(t, wt, phi)
    if not morphism.ok:
        raise VerificationError(f"canonical map is not a triple morphism: "
                                f"{morphism.describe()}")
    for g in range(t.gamma.order):
        matches = [i for i, e in enumerate(w.elements)
                   if e.g2 == t.beta[g]
                   and all(e.bar[a2] == t.alpha[a2][g] for a2 in range(n_a2))]
        if matches != [phi[g]]:
            raise VerificationError(
                f"diagram-compatible images of element {g} are {matches}, "
                f"expected exactly [{phi[g]}]")
    return phi
