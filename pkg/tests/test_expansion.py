import random

import pytest

from lascoux import verify
from lascoux.combi_core import WeakComposition
from lascoux.errors import DomainError, NegativeCoefficientError, NotInSpanError
from lascoux.expansion import (
    build_p1,
    default_threshold,
    expand_grothendieck,
    expand_in_lascoux_basis,
    expand_key_product,
    expand_product,
    grothendieck_tableaux,
    product_tableaux,
    shuffle_pairs,
)
from lascoux.heckewords import CompatiblePair, Permutation, Word
from lascoux.polynomials import ExpansionResult, LPolynomial, lascoux
from lascoux.tableaux import IncreasingTableau


def comp(*entries):
    return WeakComposition(entries)


class TestFirstTableau:
    def test_worked_example(self):
        p1 = build_p1(comp(1, 0, 2))
        assert p1 == IncreasingTableau([[1, 4], [3]])
        assert default_threshold(3, p1) == 5

    def test_zero_weight(self):
        assert build_p1(comp(0, 0)).is_empty()

    def test_single_row(self):
        assert build_p1(comp(3,)) == IncreasingTableau([[1, 2, 3]])


class TestProduct:
    def test_trivial_product(self):
        assert expand_product(comp(1), Permutation(), 1).lines() == ["L_(1) : 1"]

    def test_identity_permutation_returns_alpha(self, worked_product_inputs):
        alpha, _, n = worked_product_inputs
        assert expand_product(alpha, Permutation(), n, verify=True) == ExpansionResult({alpha: (1,)})

    def test_worked_tableaux_qualify(self, worked_product_inputs, example_tableaux):
        found = product_tableaux(*worked_product_inputs)
        for p in example_tableaux:
            assert p in found

    def test_small_product_is_certified(self):
        result = expand_product(comp(1, 0), Permutation.simple(1), 2, verify=True)
        assert result == expand_in_lascoux_basis(result.to_polynomial(2), 2)
        assert result.row(0)

    def test_key_product_is_beta_zero_part(self):
        alpha, w = comp(1, 0), Permutation.simple(1)
        full = expand_product(alpha, w, 2, verify=False)
        assert expand_key_product(alpha, w, 2, verify=True) == full.beta_zero()

    def test_alpha_length_must_match(self):
        with pytest.raises(DomainError):
            expand_product(comp(1, 0), Permutation(), 3)

    def test_override_needs_matching_weight(self):
        with pytest.raises(DomainError):
            expand_product(comp(1, 0), Permutation(), 2, p1_override=IncreasingTableau([[2]]))

    def test_threshold_must_exceed_entries(self):
        with pytest.raises(DomainError):
            expand_product(comp(1, 0), Permutation.simple(1), 2, threshold=2)

    def test_larger_threshold_gives_same_result(self):
        alpha, w = comp(0, 1), Permutation.simple(1)
        assert expand_product(alpha, w, 2, verify=False) == expand_product(alpha, w, 2, verify=False, threshold=6)


class TestGrothendieck:
    def test_simple_transposition(self):
        assert expand_grothendieck(Permutation.simple(1)) == ExpansionResult({comp(1): (1,)})

    def test_identity(self):
        assert expand_grothendieck(Permutation()) == ExpansionResult({comp(0): (1,)})

    def test_lascoux_permutation(self):
        assert expand_grothendieck(Permutation([1, 3, 2]), verify=True) == ExpansionResult({comp(0, 1): (1,)})

    def test_tableaux_use_the_reversed_reading(self):
        assert grothendieck_tableaux(Permutation([1, 3, 2])) == [IncreasingTableau([[2]])]


class TestBasisSolve:
    def test_recovers_a_lascoux_polynomial(self):
        assert expand_in_lascoux_basis(lascoux(comp(0, 2, 1)), 3) == ExpansionResult({comp(0, 2, 1): (1,)})

    def test_zero(self):
        assert len(expand_in_lascoux_basis(LPolynomial.zero(2), 2)) == 0

    def test_negative_coefficient(self):
        with pytest.raises(NegativeCoefficientError):
            expand_in_lascoux_basis(-LPolynomial.x(1, 1), 1)

    def test_not_in_span(self):
        with pytest.raises(NotInSpanError):
            expand_in_lascoux_basis(LPolynomial.x(2, 2), 2)

    def test_variable_count_must_match(self):
        with pytest.raises(DomainError):
            expand_in_lascoux_basis(LPolynomial.x(2, 1), 3)


class TestShuffle:
    def test_merges_by_index_then_descending_letter(self):
        small = CompatiblePair(Word.of(1, 1), Word.of(1, 2))
        large = CompatiblePair(Word.of(5, 6, 6), Word.of(1, 2, 3))
        merged = shuffle_pairs(small, large)
        assert merged == CompatiblePair(Word.of(5, 1, 6, 1, 6), Word.of(1, 1, 2, 2, 3))
        assert merged.split_at(3) == (small, large)

    def test_product_tableaux_decompose(self):
        rng = random.Random(2)
        assert verify.shuffle_decomposition(WeakComposition((1, 0)), Permutation.simple(1), 2, rng) is True


@pytest.mark.slow
class TestAcceptance:
    def test_worked_product(self, worked_product_inputs):
        result = expand_product(*worked_product_inputs, verify=True)
        assert verify.worked_product_verdict(result) != "neither printed version"
        assert result.row(0) == {
            comp(1, 1, 4): 1,
            comp(2, 0, 4): 1,
            comp(3, 0, 3): 1,
            comp(1, 2, 3): 1,
            comp(2, 1, 3): 1,
            comp(2, 2, 2): 1,
        }
        assert result.row(3) == {comp(3, 2, 4): 1}

    def test_worked_product_matches_basis_solve(self, worked_product_inputs):
        alpha, w, n = worked_product_inputs
        result = expand_product(alpha, w, n, verify=False)
        assert expand_in_lascoux_basis(result.to_polynomial(n), n) == result

    @pytest.mark.parametrize(
        "name",
        [
            "lascoux_worked_example",
            "worked_product",
            "product_rule_grid",
            "grothendieck_expansion_s4",
            "degenerations",
            "choice_independence",
            "shuffle_decomposition_small",
        ],
    )
    def test_exhaustive_checks(self, name):
        outcome = verify._run_check(name, seed=1, trials=0)
        assert outcome.ok, (outcome.counterexample, outcome.note)
