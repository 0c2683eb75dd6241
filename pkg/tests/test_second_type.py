import itertools
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autalg import (
    FiniteSet,
    GeneratorHom,
    PureAutomatonSecond,
    QuotientWitness,
    SemigroupAutomatonSecond,
    SemigroupTable,
    Word,
    act_letters,
    all_words,
    check_second_axioms,
    evaluate_word,
    free_extension_out,
    quotient_construct,
)
from autalg.mealy import odometer
from helpers import random_closure, random_pure_second

Z2 = SemigroupTable(2, ((0, 1), (1, 0)))
LEFT_ZERO = SemigroupTable(2, ((0, 0), (1, 1)))
TRIVIAL = SemigroupTable(1, ((0,),))

# swap the state on the single input, output constantly letter 0
PARITY = PureAutomatonSecond(FiniteSet(2), FiniteSet(1), FiniteSet(1),
                             next=((1,), (0,)), out=((0,), (0,)))


def odometer_second() -> PureAutomatonSecond:
    m = odometer().machine
    return PureAutomatonSecond(FiniteSet(2), FiniteSet(2), FiniteSet(2), m.next, m.out)


class TestCheckSecondAxioms:
    def test_trivial_passes(self):
        m = SemigroupAutomatonSecond(FiniteSet(1), TRIVIAL, TRIVIAL, ((0,),), ((0,),))
        assert check_second_axioms(m).ok

    def test_quotient_output_passes(self):
        q = quotient_construct(PARITY, GeneratorHom(1, Z2, (1,)),
                               GeneratorHom(1, Z2, (1,)))
        assert isinstance(q, SemigroupAutomatonSecond)
        assert check_second_axioms(q).ok

    def test_corrupted_out_entry_fails_with_witness(self):
        q = quotient_construct(PARITY, GeneratorHom(1, Z2, (1,)),
                               GeneratorHom(1, Z2, (1,)))
        bad_out = [list(r) for r in q.out]
        bad_out[0][0] = 1 - bad_out[0][0]
        bad = SemigroupAutomatonSecond(q.states, q.gamma, q.sigma, q.next,
                                       tuple(map(tuple, bad_out)))
        report = check_second_axioms(bad)
        assert not report.ok
        assert len(report.witness) == 3


class TestFreeExtension:
    def test_single_letter(self):
        m = odometer_second()
        assert free_extension_out(m, 0, Word((0,), 2)).letters == (m.out[0][0],)

    def test_odometer_adds_one(self):
        # +1 on least-significant-bit-first words: 11 -> 00 (wraps), 011 -> 111
        m = odometer_second()
        assert free_extension_out(m, 0, Word((1, 1), 2)).letters == (0, 0)
        assert free_extension_out(m, 0, Word((0, 1, 1), 2)).letters == (1, 1, 1)

    def test_every_split_glues(self):
        rng = Random(23)
        for _ in range(40):
            m = random_pure_second(rng, 2, 2, 2)
            for w in all_words(2, 5):
                full = free_extension_out(m, 0, w)
                for k in range(1, len(w)):
                    u = Word(w.letters[:k], 2)
                    v = Word(w.letters[k:], 2)
                    mid = act_letters(m, 0, u.letters)
                    assert full == free_extension_out(m, 0, u) + free_extension_out(m, mid, v)

    @settings(max_examples=80)
    @given(st.data())
    def test_length_preserved(self, data):
        rng = Random(data.draw(st.integers(0, 10 ** 6)))
        m = random_pure_second(rng, 3, 2, 3)
        letters = data.draw(st.lists(st.integers(0, 1), min_size=1, max_size=8))
        w = Word(tuple(letters), 2)
        assert len(free_extension_out(m, 0, w)) == len(w)


class TestGeneratorHom:
    def test_rejects_non_surjective(self):
        with pytest.raises(ValueError, match="not surjective"):
            GeneratorHom(1, Z2, (0,))  # the identity of Z2 does not generate it

    def test_apply_folds_products(self):
        mu = GeneratorHom(1, Z2, (1,))
        assert mu.apply(Word((0,), 1)) == 1
        assert mu.apply(Word((0, 0), 1)) == 0
        assert mu.apply(Word((0, 0, 0), 1)) == 1


class TestQuotientConstruct:
    def test_trivial_targets_one_state(self):
        m = PureAutomatonSecond(FiniteSet(1), FiniteSet(1), FiniteSet(1),
                                ((0,),), ((0,),))
        q = quotient_construct(m, GeneratorHom(1, TRIVIAL, (0,)),
                               GeneratorHom(1, TRIVIAL, (0,)))
        assert isinstance(q, SemigroupAutomatonSecond)
        assert q.next == ((0,),) and q.out == ((0,),)

    def test_parity_instance_well_defined(self):
        # constant output letter, transition action of order two, both
        # homs onto Z2: the image of a word is its length's parity either way
        q = quotient_construct(PARITY, GeneratorHom(1, Z2, (1,)),
                               GeneratorHom(1, Z2, (1,)))
        assert isinstance(q, SemigroupAutomatonSecond)
        # element 0 of Z2 is the image of even-length words, 1 of odd
        assert q.next == ((0, 1), (1, 0))
        assert q.out == ((0, 1), (0, 1))

    def test_identified_inputs_with_distinct_outputs_witnessed(self):
        m = PureAutomatonSecond(FiniteSet(1), FiniteSet(2), FiniteSet(2),
                                next=((0, 0),), out=((0, 1),))
        q = quotient_construct(m, GeneratorHom(2, Z2, (1, 1)),
                               GeneratorHom(2, LEFT_ZERO, (0, 1)))
        assert isinstance(q, QuotientWitness)
        assert {q.u.letters, q.v.letters} == {(0,), (1,)}
        assert q.behavior_u != q.behavior_v

    def test_witness_words_really_disagree(self):
        rng = Random(71)
        found = 0
        for _ in range(300):
            m = random_pure_second(rng, 2, 2, 2)
            mu = _hom_from_closure(rng, 2, 4)
            nu = _hom_from_closure(rng, 2, 4)
            q = quotient_construct(m, mu, nu)
            if isinstance(q, QuotientWitness):
                found += 1
                assert mu.apply(q.u) == mu.apply(q.v)
                a = q.state
                bu = (act_letters(m, a, q.u.letters),
                      nu.apply(free_extension_out(m, a, q.u)))
                bv = (act_letters(m, a, q.v.letters),
                      nu.apply(free_extension_out(m, a, q.v)))
                assert bu == q.behavior_u
                assert bv == q.behavior_v
                assert bu != bv
        assert found > 10

    def test_verdict_matches_word_oracle(self):
        rng = Random(97)
        for _ in range(150):
            m = random_pure_second(rng, 2, 2, 2)
            mu = _hom_from_closure(rng, 2, 4)
            nu = _hom_from_closure(rng, 2, 4)
            got = quotient_construct(m, mu, nu)
            expected = _brute_force_compatible(m, mu, nu, 6)
            assert isinstance(got, SemigroupAutomatonSecond) == expected

    def test_alphabet_mismatch_rejected(self):
        with pytest.raises(ValueError):
            quotient_construct(PARITY, GeneratorHom(2, Z2, (1, 1)),
                               GeneratorHom(1, Z2, (1,)))


def _hom_from_closure(rng: Random, alphabet: int, max_order: int) -> GeneratorHom:
    closure = random_closure(rng, alphabet, max_order)
    return GeneratorHom(alphabet, closure.table, closure.letter_to_index)


def _brute_force_compatible(m: PureAutomatonSecond, mu: GeneratorHom,
                            nu: GeneratorHom, bound: int) -> bool:
    """Oracle: compare all word pairs with equal input image up to the
    length bound."""
    for a in range(m.states.size):
        behavior: dict[int, tuple[int, int]] = {}
        for w in all_words(m.inputs.size, bound):
            key = mu.apply(w)
            value = (act_letters(m, a, w.letters),
                     nu.apply(free_extension_out(m, a, w)))
            if behavior.setdefault(key, value) != value:
                return False
    return True
