"""Shared algebra layer: finite carriers, transformations, the pair
semigroup S_A x Fun(A,B), free-semigroup words, and multiplication-table
machinery.

Conventions used throughout the package:

* right actions: states are acted on from the right, and products act
  left factor first, so ``a . (s t) == (a . s) . t``;
* semigroups, not monoids: no identity is adjoined and words are
  non-empty; identities appear only when a closure produces them;
* every carrier is ``{0, .., n-1}``; labels are display-only.

All values are immutable after construction and safe to share between
concurrent readers.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterator, Sequence

import numpy as np

DEFAULT_CAP = 1_000_000


class CapExceeded(RuntimeError):
    """A closure or product construction grew past the configured cap."""


class VerificationError(RuntimeError):
    """A construction failed its own built-in verification.

    Raising this signals an internal inconsistency, not bad user input.
    """


def as_table(name: str, table: Sequence[Sequence[int]], rows: int, cols: int,
             bound: int) -> tuple[tuple[int, ...], ...]:
    """Normalize a rows x cols integer table, naming any offending entry."""
    if len(table) != rows:
        raise ValueError(f"{name}: expected {rows} rows, got {len(table)}")
    norm = []
    for i, row in enumerate(table):
        row = tuple(row)
        if len(row) != cols:
            raise ValueError(f"{name}[{i}]: expected {cols} entries, got {len(row)}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < bound:
                raise ValueError(f"{name}[{i}][{j}] = {v!r} out of range 0..{bound - 1}")
        norm.append(row)
    return tuple(norm)


@dataclass(frozen=True, slots=True)
class FiniteSet:
    """A carrier {0, .., size-1} with optional display labels."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"size must be a positive integer, got {self.size!r}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
            if len(self.labels) != self.size:
                raise ValueError(f"{len(self.labels)} labels for {self.size} elements")
            if len(set(self.labels)) != self.size:
                raise ValueError("labels must be distinct")

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)


@dataclass(frozen=True, slots=True)
class Transformation:
    """A total self-map of {0, .., n-1}, written as its image sequence."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "image", tuple(self.image))
        n = len(self.image)
        if n == 0:
            raise ValueError("empty transformation")
        for i, v in enumerate(self.image):
            if not 0 <= v < n:
                raise ValueError(f"image[{i}] = {v} out of range 0..{n - 1}")

    @property
    def domain_size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]


def identity_transformation(n: int) -> Transformation:
    return Transformation(tuple(range(n)))


def all_transformations(n: int) -> Iterator[Transformation]:
    """All n^n self-maps of {0, .., n-1}, in lexicographic order."""
    for image in itertools.product(range(n), repeat=n):
        yield Transformation(image)


@dataclass(frozen=True, slots=True)
class FunMap:
    """A total map {0, .., n-1} -> {0, .., m-1} as its image sequence."""

    image: tuple[int, ...]
    codomain_size: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) == 0:
            raise ValueError("empty map")
        if self.codomain_size < 1:
            raise ValueError("codomain must be non-empty")
        for i, v in enumerate(self.image):
            if not 0 <= v < self.codomain_size:
                raise ValueError(f"image[{i}] = {v} out of range 0..{self.codomain_size - 1}")

    @property
    def domain_size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]


def all_funmaps(domain_size: int, codomain_size: int) -> Iterator[FunMap]:
    for image in itertools.product(range(codomain_size), repeat=domain_size):
        yield FunMap(image, codomain_size)


@dataclass(frozen=True, slots=True)
class PairElement:
    """An element (sigma, phi) of the pair semigroup S_A x Fun(A,B).

    Multiplication is (s1, p1)(s2, p2) = (s1 s2, s1 p2): the state part
    composes left-first and the output part reads the second map after
    moving by the first transformation.
    """

    sigma: Transformation
    phi: FunMap

    def __post_init__(self) -> None:
        if self.sigma.domain_size != self.phi.domain_size:
            raise ValueError(
                f"domain mismatch: sigma on {self.sigma.domain_size} points, "
                f"phi on {self.phi.domain_size}")


def compose_transformations(s: Transformation, t: Transformation) -> Transformation:
    """Product st under the right-action convention: apply s, then t."""
    if s.domain_size != t.domain_size:
        raise ValueError(f"domain mismatch: {s.domain_size} vs {t.domain_size}")
    ti = t.image
    return Transformation(tuple(ti[v] for v in s.image))


def multiply_pair(p: PairElement, q: PairElement) -> PairElement:
    """Multiply in S_A x Fun(A,B): (s1, p1)(s2, p2) = (s1 s2, s1 p2)."""
    if p.sigma.domain_size != q.sigma.domain_size:
        raise ValueError(
            f"carrier mismatch: {p.sigma.domain_size} vs {q.sigma.domain_size} states")
    if p.phi.codomain_size != q.phi.codomain_size:
        raise ValueError(
            f"carrier mismatch: {p.phi.codomain_size} vs {q.phi.codomain_size} outputs")
    qi = q.phi.image
    phi = FunMap(tuple(qi[v] for v in p.sigma.image), q.phi.codomain_size)
    return PairElement(compose_transformations(p.sigma, q.sigma), phi)


@dataclass(frozen=True, slots=True)
class Word:
    """A non-empty word over {0, .., alphabet_size-1}."""

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("words are non-empty")
        if self.alphabet_size < 1:
            raise ValueError("alphabet must be non-empty")
        if min(self.letters) < 0 or max(self.letters) >= self.alphabet_size:
            raise ValueError(
                f"letters {self.letters} out of range 0..{self.alphabet_size - 1}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if self.alphabet_size != other.alphabet_size:
            raise ValueError("alphabet mismatch")
        return Word(self.letters + other.letters, self.alphabet_size)


def all_words(alphabet_size: int, max_len: int) -> Iterator[Word]:
    """All words of length 1..max_len in shortlex order."""
    for length in range(1, max_len + 1):
        for letters in itertools.product(range(alphabet_size), repeat=length):
            yield Word(letters, alphabet_size)


def _associativity_witness(product: np.ndarray) -> tuple[int, int, int] | None:
    """First triple (a, b, c) with (ab)c != a(bc), or None."""
    for a in range(len(product)):
        row = product[a]
        left = product[row]   # left[b, c]  = product[product[a, b], c]
        right = row[product]  # right[b, c] = product[a, product[b, c]]
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            return a, int(b), int(c)
    return None


@dataclass(frozen=True, slots=True)
class SemigroupTable:
    """A finite semigroup as a total multiplication table.

    ``generators``, when present, lists the element index of each
    generator in generator order (entries may repeat if two generators
    coincide), and every element must be a product of them.  ``names``
    are words over generator positions; the name of element i must
    evaluate back to i.  Associativity is checked exhaustively on
    construction.
    """

    order: int
    product: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...] | None = None
    names: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        n = self.order
        if n < 1:
            raise ValueError("order must be >= 1")
        object.__setattr__(self, "product", as_table("product", self.product, n, n, n))
        witness = _associativity_witness(np.array(self.product, dtype=np.int64))
        if witness is not None:
            a, b, c = witness
            raise ValueError(f"product not associative at ({a}, {b}, {c})")
        if self.generators is not None:
            gens = tuple(self.generators)
            object.__setattr__(self, "generators", gens)
            for g in gens:
                if not 0 <= g < n:
                    raise ValueError(f"generator index {g} out of range")
            reached = set(gens)
            frontier = list(reached)
            while frontier:
                nxt = []
                for e in frontier:
                    for g in gens:
                        p = self.product[e][g]
                        if p not in reached:
                            reached.add(p)
                            nxt.append(p)
                frontier = nxt
            if len(reached) != n:
                missing = sorted(set(range(n)) - reached)
                raise ValueError(f"elements {missing} not generated by {gens}")
        if self.names is not None:
            if self.generators is None:
                raise ValueError("names require generators")
            names = tuple(tuple(w) for w in self.names)
            object.__setattr__(self, "names", names)
            if len(names) != n:
                raise ValueError(f"{len(names)} names for {n} elements")
            for i, w in enumerate(names):
                if not w:
                    raise ValueError(f"names[{i}] is empty")
                e = self.generators[w[0]]
                for letter in w[1:]:
                    e = self.product[e][self.generators[letter]]
                if e != i:
                    raise ValueError(f"names[{i}] = {w} evaluates to {e}, not {i}")

    def multiply(self, i: int, j: int) -> int:
        return self.product[i][j]


def trivial_semigroup() -> SemigroupTable:
    return SemigroupTable(1, ((0,),), generators=(0,), names=((0,),))


@dataclass(frozen=True, slots=True)
class Closure:
    """Result of closing a generator list under a binary operation."""

    table: SemigroupTable
    elements: tuple
    letter_to_index: tuple[int, ...]


def close_generators(generators: Sequence[Hashable],
                     multiply: Callable,
                     cap: int = DEFAULT_CAP) -> Closure:
    """Breadth-first closure of ``generators`` under ``multiply``.

    Elements are discovered by word length with letters tried in order,
    so element i's name is the lexicographically least shortest generator
    word producing it.  Raises CapExceeded past ``cap`` elements and
    ValueError if the induced table is not associative.
    """
    if not generators:
        raise ValueError("need at least one generator")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    index: dict = {}
    elements: list = []
    names: list[tuple[int, ...]] = []
    letter_to_index: list[int] = []
    for i, g in enumerate(generators):
        found = index.get(g)
        if found is None:
            if len(elements) >= cap:
                raise CapExceeded(f"closure exceeded cap {cap}")
            found = len(elements)
            index[g] = found
            elements.append(g)
            names.append((i,))
        letter_to_index.append(found)
    frontier = list(range(len(elements)))
    while frontier:
        new_level: list[int] = []
        for ei in frontier:
            e = elements[ei]
            for li, gi in enumerate(letter_to_index):
                p = multiply(e, elements[gi])
                if p not in index:
                    if len(elements) >= cap:
                        raise CapExceeded(f"closure exceeded cap {cap}")
                    index[p] = len(elements)
                    elements.append(p)
                    names.append(names[ei] + (li,))
                    new_level.append(index[p])
        frontier = new_level
    n = len(elements)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            p = multiply(elements[i], elements[j])
            k = index.get(p)
            if k is None:
                raise ValueError(
                    f"product of elements {i} and {j} leaves the closure; "
                    "multiply is not associative")
            row.append(k)
        rows.append(tuple(row))
    table = SemigroupTable(n, tuple(rows), generators=tuple(letter_to_index),
                           names=tuple(names))
    return Closure(table, tuple(elements), tuple(letter_to_index))


def generate_semigroup(generators: Sequence[Hashable],
                       multiply: Callable,
                       cap: int = DEFAULT_CAP) -> SemigroupTable:
    """The semigroup generated by ``generators`` as a multiplication table."""
    return close_generators(generators, multiply, cap).table


def evaluate_word(table: SemigroupTable, assignment: Sequence[int], word: Word) -> int:
    """Image of ``word`` under the homomorphism sending letter i to
    table element assignment[i]."""
    if word.alphabet_size != len(assignment):
        raise ValueError(
            f"word over {word.alphabet_size} letters, assignment has {len(assignment)}")
    e = assignment[word.letters[0]]
    prod = table.product
    for letter in word.letters[1:]:
        e = prod[e][assignment[letter]]
    return e


def kernel_classes(alphabet_size: int, words_up_to: int,
                   eval_word: Callable[[Word], int]) -> dict[int, list[Word]]:
    """Group all words of length <= words_up_to by their image under
    ``eval_word``; two words land in one class iff the homomorphism
    identifies them."""
    classes: dict[int, list[Word]] = {}
    for w in all_words(alphabet_size, words_up_to):
        classes.setdefault(eval_word(w), []).append(w)
    return classes


@dataclass(frozen=True, slots=True)
class CheckReport:
    """Outcome of an exhaustive law check: pass, or the first violation
    with both sides of the offending instance."""

    ok: bool
    law: str = ""
    witness: tuple = ()
    lhs: object = None
    rhs: object = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "CheckReport":
        return cls(True)

    @classmethod
    def failed(cls, law: str, witness: tuple, lhs: object, rhs: object) -> "CheckReport":
        return cls(False, law, tuple(witness), lhs, rhs)

    def describe(self) -> str:
        if self.ok:
            return "pass"
        return (f"fail: {self.law} at {self.witness}: "
                f"lhs = {self.lhs!r}, rhs = {self.rhs!r}")
