import pytest
from hypothesis import given
from hypothesis import strategies as st

from lascoux.combi_core import WeakComposition
from lascoux.errors import DomainError
from lascoux.heckewords import (
    CompatiblePair,
    PairMode,
    Permutation,
    Word,
    coxeter_length,
    enumerate_compatible_pairs,
    hecke_eval,
    is_hecke_word,
    is_reduced,
    shift_perm,
)

words = st.lists(st.integers(min_value=1, max_value=5), max_size=8).map(lambda xs: Word(tuple(xs)))


class TestPermutation:
    def test_identity_normalises(self):
        assert Permutation([1, 2, 3]) == Permutation()
        assert Permutation([2, 1, 3]).size == 2
        assert str(Permutation()) == "1"

    def test_rejects_non_bijection(self):
        with pytest.raises(DomainError):
            Permutation([1, 1])

    def test_inverse_and_product(self):
        w = Permutation([2, 3, 1])
        assert w.inverse() == Permutation([3, 1, 2])
        assert w * w.inverse() == Permutation()
        assert (Permutation.simple(1) * Permutation.simple(2))(1) == 2

    def test_length(self):
        assert Permutation([3, 2, 1]).length() == 3
        assert Permutation.simple(4).length() == 1

    def test_shift(self):
        assert shift_perm(Permutation([2, 1]), 2) == Permutation([1, 2, 4, 3])
        assert shift_perm(Permutation([3, 2, 1]), 5).one_line() == (1, 2, 3, 4, 5, 8, 7, 6)
        with pytest.raises(DomainError):
            shift_perm(Permutation(), -1)


class TestHeckeProduct:
    def test_worked_word(self):
        assert hecke_eval(Word.of(4, 2, 1, 4, 3, 3)) == Permutation([2, 4, 1, 5, 3])

    def test_idempotent_letters(self):
        assert hecke_eval(Word.of(1, 1)) == Permutation.simple(1)
        assert not is_reduced(Word.of(1, 1))
        assert is_reduced(Word.of(1, 2, 1))

    def test_braid_relation(self):
        assert hecke_eval(Word.of(1, 2, 1)) == hecke_eval(Word.of(2, 1, 2)) == Permutation([3, 2, 1])

    @given(words)
    def test_reversal_inverts(self, word):
        assert hecke_eval(word.reversed()) == hecke_eval(word).inverse()

    @given(words)
    def test_length_never_exceeds_word_length(self, word):
        assert hecke_eval(word).length() <= len(word)

    def test_shifted_letters(self):
        assert hecke_eval(Word.of(7, 6, 7)) == shift_perm(Permutation([3, 2, 1]), 5)

    def test_coxeter_length_and_membership(self):
        w = Permutation([2, 4, 1, 5, 3])
        assert coxeter_length(w) == 4
        assert is_hecke_word(Word.of(4, 2, 1, 4, 3, 3), w)
        assert not is_hecke_word(Word.of(4, 2, 1), w)


class TestWord:
    def test_weight(self):
        assert Word.of(1, 3, 3).weight(3) == WeakComposition((1, 0, 2))
        with pytest.raises(DomainError):
            Word.of(4).weight(3)

    def test_subwords(self):
        w = Word.of(7, 3, 1, 4, 6, 7)
        assert w.above(5) == Word.of(7, 6, 7)
        assert w.below(5) == Word.of(3, 1, 4)

    def test_str(self):
        assert str(Word.of(2, 1, 3)) == "213"
        assert str(Word.of(12, 1)) == "12,1"


class TestCompatiblePair:
    def test_bounded(self):
        assert CompatiblePair(Word.of(4, 2, 1, 4, 3, 3), Word.of(1, 1, 1, 2, 2, 3)).is_bounded
        assert not CompatiblePair(Word.of(1), Word.of(2)).is_bounded

    def test_plateau_needs_strict_descent(self):
        with pytest.raises(DomainError):
            CompatiblePair(Word.of(1, 2), Word.of(1, 1))

    def test_i_must_weakly_increase(self):
        with pytest.raises(DomainError):
            CompatiblePair(Word.of(1, 2), Word.of(2, 1))

    def test_split(self):
        pair = CompatiblePair(Word.of(5, 1, 6, 1, 6), Word.of(1, 1, 2, 2, 3))
        small, large = pair.split_at(3)
        assert small == CompatiblePair(Word.of(1, 1), Word.of(1, 2))
        assert large == CompatiblePair(Word.of(5, 6, 6), Word.of(1, 2, 3))
        with pytest.raises(DomainError):
            pair.split_at(6)

    def test_str(self):
        assert str(CompatiblePair(Word.of(2, 1, 3, 1, 3), Word.of(1, 1, 2, 2, 3))) == "(21313, 11223)"


class TestEnumeration:
    def test_bounded_pairs_of_s1(self):
        pairs = list(enumerate_compatible_pairs(Permutation.simple(1)))
        assert pairs == [CompatiblePair(Word.of(1), Word.of(1))]

    def test_capped_pairs_of_s1(self):
        pairs = set(enumerate_compatible_pairs(Permutation.simple(1), PairMode.CAP, 2))
        assert pairs == {
            CompatiblePair(Word.of(1), Word.of(1)),
            CompatiblePair(Word.of(1), Word.of(2)),
            CompatiblePair(Word.of(1, 1), Word.of(1, 2)),
        }

    def test_every_pair_multiplies_to_target(self):
        w = Permutation([3, 1, 2])
        for pair in enumerate_compatible_pairs(w, PairMode.CAP, 2):
            assert hecke_eval(pair.a) == w

    def test_cap_mode_needs_n(self):
        with pytest.raises(DomainError):
            list(enumerate_compatible_pairs(Permutation.simple(1), PairMode.CAP))

    def test_identity_has_only_the_empty_pair(self):
        assert list(enumerate_compatible_pairs(Permutation())) == [CompatiblePair(Word(), Word())]
