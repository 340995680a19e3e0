from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import cover_data
from torelli_screen import (
    eigen_rank_difference,
    fibration_negativity,
    flat_rank_lower_bounds,
    hodge_table,
    rank_positive_characters,
    second_fibration_witness,
    validate,
)
from torelli_screen.arith import is_prime
from torelli_screen.errors import CharacterOutOfRange, NotPrime, PrimeTooSmall

PRIMES_TO_31 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


class TestEigenRankDifference:
    def test_examples(self):
        assert eigen_rank_difference(validate(7, 1, [1] * 7), 5) == 3
        assert eigen_rank_difference(validate(7, 1, [1, 2, 4]), 4) == -1
        assert eigen_rank_difference(validate(6, 1, [1] * 6), 3) == 0
        assert eigen_rank_difference(validate(8, 1, [1, 3, 4]), 4) == 0

    def test_character_out_of_range(self):
        with pytest.raises(CharacterOutOfRange):
            eigen_rank_difference(validate(7, 1, [1] * 7), 0)

    @given(cover_data())
    def test_antisymmetric(self, d):
        for i in range(1, d.n):
            assert eigen_rank_difference(d, i) == -eigen_rank_difference(
                d, d.n - i
            )

    @pytest.mark.parametrize("n,r", [(5, 5), (7, 7), (7, 14), (9, 9), (12, 12)])
    def test_unit_branch_closed_form(self, n, r):
        d = validate(n, 1, [1] * r)
        for i in range((n + 1) // 2, n):
            assert eigen_rank_difference(d, i) == Fraction(r * (2 * i - n), n)


class TestFlatRankLowerBounds:
    def test_totals(self):
        assert flat_rank_lower_bounds(validate(7, 1, [1] * 7)).total == 9
        assert flat_rank_lower_bounds(validate(6, 1, [1] * 6)).total == 6
        assert flat_rank_lower_bounds(validate(2, 1, [1, 1])).total == 0

    def test_prime_refined_per_char(self):
        bounds = flat_rank_lower_bounds(validate(7, 1, [1] * 7))
        assert bounds.prime_refinement_applied
        assert bounds.bound_for(4) == 2
        assert bounds.per_char == (5, 4, 3, 2, 1, 0)

    def test_no_refinement_for_composite(self):
        bounds = flat_rank_lower_bounds(validate(6, 1, [1] * 6))
        assert not bounds.prime_refinement_applied

    @pytest.mark.parametrize("n", range(2, 25))
    def test_unit_branch_total_closed_forms(self, n):
        for r in (n, 2 * n):
            total = flat_rank_lower_bounds(validate(n, 1, [1] * r)).total
            if n % 2 == 0:
                assert total == Fraction(r * (n - 2), 4)
            else:
                assert total == Fraction(r * (n - 1) ** 2, 4 * n)

    @given(cover_data())
    def test_bound_invariants(self, d):
        table = hodge_table(d).h
        bounds = flat_rank_lower_bounds(d)
        pair_total = sum(
            abs(table[i] - table[d.n - i]) for i in range(1, (d.n + 1) // 2)
        )
        assert bounds.total >= pair_total
        for i in range(1, d.n):
            assert bounds.bound_for(i) >= max(0, table[i] - table[d.n - i])
            assert bounds.bound_for(i) >= 0


class TestRankPositiveCharacters:
    def test_unit_branch_examples(self):
        assert {4, 5} <= rank_positive_characters(validate(7, 1, [1] * 7))
        assert 3 in rank_positive_characters(validate(5, 1, [1] * 5))

    def test_mixed_multiplicities(self):
        positive = rank_positive_characters(validate(7, 1, [1, 2, 4]))
        assert 4 in positive
        assert 5 not in positive

    def test_requires_prime(self):
        with pytest.raises(NotPrime):
            rank_positive_characters(validate(6, 1, [1] * 6))

    def test_requires_prime_at_least_5(self):
        with pytest.raises(PrimeTooSmall):
            rank_positive_characters(validate(3, 1, [1, 1, 1]))

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_paper_range_with_exact_bounds(self, p):
        for r in (p, 2 * p):
            d = validate(p, 1, [1] * r)
            positive = rank_positive_characters(d)
            bounds = flat_rank_lower_bounds(d)
            for i in range((p + 1) // 2, p - 1):
                assert i in positive
                assert bounds.bound_for(i) == Fraction(r * (p - i - 1), p)


class TestFibrationNegativity:
    def test_examples(self):
        value, negative = fibration_negativity(validate(7, 1, [1, 2, 4]), 3, 5)
        assert (value, negative) == (-1, True)
        value, negative = fibration_negativity(validate(7, 1, [1] * 7), 3, 4)
        assert (value, negative) == (0, False)
        value, negative = fibration_negativity(validate(7, 2, [1, 2, 4]), 3, 5)
        assert (value, negative) == (1, False)

    def test_character_out_of_range(self):
        with pytest.raises(CharacterOutOfRange):
            fibration_negativity(validate(7, 1, [1, 2, 4]), 0, 3)

    @given(cover_data(), st.data())
    def test_symmetric(self, d, data):
        i1 = data.draw(st.integers(1, d.n - 1))
        i2 = data.draw(st.integers(1, d.n - 1))
        assert fibration_negativity(d, i1, i2) == fibration_negativity(d, i2, i1)

    @given(cover_data(), st.data())
    def test_invariant_under_unit_rescaling(self, d, data):
        units = oracles.units_mod(d.n)
        m = data.draw(st.sampled_from(units))
        inverse = pow(m, -1, d.n)
        i1 = data.draw(st.integers(1, d.n - 1))
        i2 = data.draw(st.integers(1, d.n - 1))
        rescaled = validate(d.n, d.s, [(m * v) % d.n for v in d.u])
        j1, j2 = (inverse * i1) % d.n, (inverse * i2) % d.n
        assert fibration_negativity(d, i1, i2) == fibration_negativity(
            rescaled, j1, j2
        )

    @pytest.mark.parametrize("p", [p for p in PRIMES_TO_31 if p >= 3])
    def test_unit_branch_rule(self, p):
        d = validate(p, 1, [1] * p)
        for i1 in range(1, p):
            for i2 in range(1, p):
                assert fibration_negativity(d, i1, i2).negative == (i1 + i2 > p)


class TestSecondFibrationWitness:
    def test_unit_branch_seven(self):
        assert second_fibration_witness(validate(7, 1, [1] * 7)) == (5, 4)

    def test_unit_branch_five_has_none(self):
        assert second_fibration_witness(validate(5, 1, [1] * 5)) is None

    def test_high_base_genus_has_none(self):
        assert second_fibration_witness(validate(7, 3, [1, 2, 4])) is None

    def test_requires_prime(self):
        with pytest.raises(NotPrime):
            second_fibration_witness(validate(6, 1, [1] * 6))

    def test_deterministic(self):
        d = validate(11, 1, [1] * 11)
        assert second_fibration_witness(d) == second_fibration_witness(d)

    @given(cover_data(min_n=5, max_n=23, max_s=1))
    def test_witness_certifies_its_conditions(self, d):
        if not is_prime(d.n):
            return
        witness = second_fibration_witness(d)
        if witness is None:
            return
        i0, i = witness
        bounds = flat_rank_lower_bounds(d)
        assert bounds.bound_for(i0) > 0 and bounds.bound_for(i) > 0
        assert 2 * i > d.n and i < i0
        assert fibration_negativity(d, i, i0).negative
        assert fibration_negativity(d, d.n - i, i0).negative
