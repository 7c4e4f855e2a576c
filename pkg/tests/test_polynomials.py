import pytest
from hypothesis import given
from hypothesis import strategies as st

from lascoux.combi_core import Key, Partition, WeakComposition, cap_n, wt_key
from lascoux.errors import DomainError, InternalAssertionError
from lascoux.heckewords import Permutation
from lascoux.polynomials import (
    ExpansionResult,
    LPolynomial,
    grothendieck,
    grothendieck_stable_truncated,
    key_bounded_rsvt_sum,
    key_polynomial,
    lascoux,
    poly_add,
    poly_mul,
    schur_polynomial,
    stanley_truncated,
)

LASCOUX_021 = (
    "x2^2*x3 + x1*x2^2 + x1*x2*x3 + x1^2*x2 + x1^2*x3"
    " + 2*b*x1*x2^2*x3 + b*x1^2*x2^2 + 2*b*x1^2*x2*x3 + b^2*x1^2*x2^2*x3"
)


def comp(*entries):
    return WeakComposition(entries)


class TestArithmetic:
    def test_ring_operations(self):
        x1, beta = LPolynomial.x(1, 1), LPolynomial.beta(1)
        assert str((x1 + beta) * (x1 - beta)) == "x1^2 - b^2"
        assert poly_mul(LPolynomial.x(2, 1), LPolynomial.x(2, 2)) == LPolynomial.monomial(2, (1, 1))
        assert poly_add(LPolynomial.one(2), LPolynomial.zero(2)) == 1

    def test_one_is_multiplicative_identity(self):
        p = lascoux(comp(0, 1))
        assert p * LPolynomial.one(2) == p

    def test_mismatched_variables(self):
        with pytest.raises(DomainError):
            LPolynomial.x(2, 1) + LPolynomial.x(3, 1)

    def test_zero_prints_as_zero(self):
        assert str(LPolynomial.zero(3)) == "0"
        assert LPolynomial.zero(3).is_zero()

    def test_parse(self):
        p = LPolynomial.parse("x1^2 - 3*b*x1*x2 + 2", 2)
        assert p.coefficient((2, 0)) == 1
        assert p.coefficient((1, 1), beta_degree=1) == -3
        assert p.coefficient((0, 0)) == 2

    def test_parse_rejects_unknown_variable(self):
        with pytest.raises(DomainError):
            LPolynomial.parse("x3", 2)

    @given(st.dictionaries(
        st.tuples(st.integers(0, 2), st.tuples(st.integers(0, 3), st.integers(0, 3))),
        st.integers(-5, 5),
        max_size=6,
    ))
    def test_text_form_round_trips(self, terms):
        p = LPolynomial(2, terms)
        assert LPolynomial.parse(str(p), 2) == p

    def test_inspection(self):
        p = lascoux(comp(0, 2, 1))
        assert p.max_beta_degree == 2
        assert p.x_degree(1) == 2
        assert p.beta_part(1).coefficient((1, 2, 1), beta_degree=1) == 2
        assert p.is_nonnegative()

    def test_permute_variables(self):
        assert LPolynomial.x(2, 1).permute_variables([2, 1]) == LPolynomial.x(2, 2)


class TestLascoux:
    def test_worked_example(self):
        assert lascoux(comp(0, 2, 1), 3) == LPolynomial.parse(LASCOUX_021, 3)

    def test_zero_weight_is_one(self):
        assert str(lascoux(comp(0, 0), 2)) == "1"

    def test_two_variables(self):
        assert str(lascoux(comp(0, 1))) == "x1 + x2 + b*x1*x2"
        assert str(lascoux(comp(0, 2))) == "x1^2 + x1*x2 + x2^2 + b*x1^2*x2 + b*x1*x2^2"

    def test_length_must_match(self):
        with pytest.raises(DomainError):
            lascoux(comp(1, 0), 3)

    def test_key_polynomial(self):
        expected = "x1*x2^2 + x1*x2*x3 + x1^2*x2 + x1^2*x3 + x2^2*x3"
        assert key_polynomial(comp(0, 2, 1)) == LPolynomial.parse(expected, 3)

    @pytest.mark.parametrize("alpha", [(1, 2), (0, 1, 2), (1, 1, 2), (0, 0, 3)])
    def test_increasing_weight_gives_schur(self, alpha):
        shape = Partition(tuple(sorted(alpha, reverse=True)))
        assert key_polynomial(WeakComposition(alpha)) == schur_polynomial(shape, len(alpha))

    def test_capped_key_sum(self):
        key = Key(((3,),))
        assert key_bounded_rsvt_sum(key, 2) == lascoux(wt_key(cap_n(key, 2), 2))
        big = Key(((1, 3, 7), (1, 3), (3,), (3,)))
        assert key_bounded_rsvt_sum(big, 3) == lascoux(comp(2, 1, 4))

    @pytest.mark.parametrize(
        "build",
        [lambda: key_bounded_rsvt_sum(Key(((3,),)), 2), lambda: schur_polynomial(Partition((2, 1)), 2)],
        ids=["capped_key_sum", "schur"],
    )
    def test_sums_are_certified_nonnegative(self, mocker, build):
        mocker.patch.object(LPolynomial, "is_nonnegative", return_value=False)
        with pytest.raises(InternalAssertionError):
            build()


class TestGrothendieck:
    def test_simple_transposition(self):
        assert str(grothendieck(Permutation.simple(1))) == "x1"

    def test_identity(self):
        assert grothendieck(Permutation()) == 1

    def test_matches_lascoux(self):
        assert grothendieck(Permutation([1, 3, 2])) == lascoux(comp(0, 1))

    def test_worked_pair_contributes(self):
        assert grothendieck(Permutation([3, 1, 5, 2, 4])).coefficient((3, 2, 1, 0), beta_degree=2) >= 1

    def test_too_few_variables(self):
        with pytest.raises(DomainError):
            grothendieck(Permutation([1, 3, 2]), 1)

    def test_stable_truncation(self):
        assert str(grothendieck_stable_truncated(Permutation.simple(1), 2)) == "x1 + x2 + b*x1*x2"
        assert str(stanley_truncated(Permutation.simple(1), 2)) == "x1 + x2"

    def test_schur(self):
        assert str(schur_polynomial(Partition((2, 1)), 2)) == "x1^2*x2 + x1*x2^2"
        assert schur_polynomial(Partition(()), 3) == 1


class TestExpansionResult:
    def test_lines(self):
        r = ExpansionResult.from_counts({(comp(1, 0), 0): 1, (comp(1, 0), 2): 3, (comp(0, 1), 1): 2})
        assert r.lines() == ["L_(1,0) : 1", "b L_(0,1) : 2", "b^2 L_(1,0) : 3"]
        assert r.coefficient(comp(1, 0)) == (1, 0, 3)
        assert r.tableau_count() == 6

    def test_trailing_zeros_dropped(self):
        r = ExpansionResult({comp(1,): (1, 0, 0), comp(2,): (0,)})
        assert r.terms == {comp(1,): (1,)}
        assert len(r) == 1

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            ExpansionResult({comp(1,): (-1,)})

    def test_json_dict(self):
        r = ExpansionResult({comp(1, 0, 2): (1, 2)})
        assert r.to_json_dict() == {"1,0,2": [1, 2]}
        assert ExpansionResult.from_json_dict(r.to_json_dict()) == r

    def test_rows(self):
        r = ExpansionResult({comp(1, 0): (1, 2), comp(0, 1): (0, 1)})
        assert r.row(1) == {comp(1, 0): 2, comp(0, 1): 1}
        assert r.beta_zero() == ExpansionResult({comp(1, 0): (1,)})

    def test_to_polynomial(self):
        r = ExpansionResult({comp(0, 1): (1,), comp(1, 0): (0, 1)})
        beta = LPolynomial.beta(2)
        assert r.to_polynomial(2) == lascoux(comp(0, 1)) + beta * lascoux(comp(1, 0))
        assert r.key_polynomial_sum(2) == key_polynomial(comp(0, 1))
