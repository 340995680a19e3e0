from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import cover_data
from torelli_screen import (
    cw_dimension,
    cw_unit_branch_closed_form,
    eigen_fiber_degree,
    fiber_genus,
    galois_orbits,
    hodge_table,
    rank_local_system,
    rr_oracle_dimension,
    validate,
)
from torelli_screen.errors import (
    CharacterOutOfRange,
    DegreeNotPositive,
    DegreeTooSmall,
    NotUnitBranch,
)


class TestCwDimension:
    @pytest.mark.parametrize(
        "datum,i,expected",
        [
            ((5, 1, [1] * 5), 2, 3),
            ((7, 1, [1, 2, 4]), 0, 1),
            ((7, 1, [1, 2, 4]), 1, 2),
            ((7, 1, [1, 2, 4]), 3, 1),
        ],
    )
    def test_examples(self, datum, i, expected):
        assert cw_dimension(validate(*datum), i) == expected

    def test_character_out_of_range(self):
        d = validate(7, 1, [1, 2, 4])
        for i in (-1, 7, 100):
            with pytest.raises(CharacterOutOfRange):
                cw_dimension(d, i)

    @given(cover_data())
    def test_matches_fraction_oracle(self, d):
        for i in range(d.n):
            assert cw_dimension(d, i) == oracles.cw_dim_fraction(d.n, d.s, d.u, i)


class TestHodgeTable:
    @pytest.mark.parametrize(
        "datum,expected",
        [
            ((7, 1, [1, 2, 4]), (1, 2, 2, 1, 2, 1, 1)),
            ((5, 1, [1] * 5), (1, 4, 3, 2, 1)),
            ((2, 0, [1, 1]), (0, 0)),
        ],
    )
    def test_examples(self, datum, expected):
        assert hodge_table(validate(*datum)).h == expected

    @given(cover_data())
    def test_componentwise_equals_cw_dimension(self, d):
        table = hodge_table(d).h
        assert table == tuple(cw_dimension(d, i) for i in range(d.n))

    @given(cover_data())
    def test_invariants(self, d):
        table = hodge_table(d).h
        assert table[0] == d.s
        assert all(h >= 0 for h in table)
        assert sum(table) == fiber_genus(d)
        for i in range(1, d.n):
            seen = sum(1 for v in d.u if (i * v) % d.n != 0)
            assert table[i] + table[d.n - i] == 2 * d.s - 2 + seen


class TestUnitBranchClosedForm:
    @pytest.mark.parametrize(
        "datum,i,expected",
        [
            ((7, 1, [1] * 7), 5, 2),
            ((5, 1, [1] * 5), 1, 4),
            ((7, 1, [1] * 14), 6, 2),
        ],
    )
    def test_examples(self, datum, i, expected):
        assert cw_unit_branch_closed_form(validate(*datum), i) == expected

    def test_rejects_non_unit_branch(self):
        with pytest.raises(NotUnitBranch):
            cw_unit_branch_closed_form(validate(7, 1, [1, 2, 4]), 1)

    def test_rejects_character_zero(self):
        with pytest.raises(CharacterOutOfRange):
            cw_unit_branch_closed_form(validate(7, 1, [1] * 7), 0)

    @pytest.mark.parametrize("n", range(2, 21))
    def test_agrees_with_general_formula(self, n):
        for r in range(n, 61, n):
            for s in (0, 1, 2):
                d = validate(n, s, [1] * r)
                for i in range(1, n):
                    assert cw_unit_branch_closed_form(d, i) == cw_dimension(d, i)


class TestEigenFiberDegree:
    @pytest.mark.parametrize(
        "datum,i,expected",
        [
            ((7, 1, [1, 2, 4]), 3, 2),
            ((6, 1, [2, 2, 2]), 3, 0),
            ((7, 1, [1] * 7), 5, 5),
            ((7, 1, [1, 2, 4]), 0, 0),
        ],
    )
    def test_examples(self, datum, i, expected):
        value = eigen_fiber_degree(validate(*datum), i)
        assert isinstance(value, Fraction)
        assert value == expected

    @given(cover_data())
    def test_conjugate_pair_sum(self, d):
        for i in range(1, d.n):
            seen = sum(1 for v in d.u if (i * v) % d.n != 0)
            assert (
                eigen_fiber_degree(d, i) + eigen_fiber_degree(d, d.n - i) == seen
            )


class TestRiemannRochOracle:
    def test_examples(self):
        d = validate(7, 1, [1, 2, 4])
        assert rr_oracle_dimension(d, 3) == 2 == cw_dimension(d, 4)
        d5 = validate(5, 1, [1] * 5)
        assert rr_oracle_dimension(d5, 1) == 1 == cw_dimension(d5, 4)

    def test_refuses_degree_zero(self):
        with pytest.raises(DegreeNotPositive):
            rr_oracle_dimension(validate(6, 1, [2, 2, 2]), 3)

    @given(cover_data())
    def test_pairs_with_conjugate_dimension(self, d):
        # the central sign-convention check: bundle i pairs with eigenspace n - i
        for i in range(1, d.n):
            if eigen_fiber_degree(d, i) > 0:
                assert rr_oracle_dimension(d, i) == cw_dimension(d, d.n - i)


class TestGaloisOrbits:
    def test_prime_single_orbit(self):
        assert galois_orbits(7).orbits == ((1, 2, 3, 4, 5, 6),)

    def test_degree_eight(self):
        assert galois_orbits(8).orbits == ((1, 3, 5, 7), (2, 6), (4,))

    def test_degree_two(self):
        assert galois_orbits(2).orbits == ((1,),)

    def test_degree_too_small(self):
        with pytest.raises(DegreeTooSmall):
            galois_orbits(1)

    @pytest.mark.parametrize("n", range(2, 41))
    def test_matches_brute_force_closure(self, n):
        assert galois_orbits(n).orbits == oracles.brute_galois_closure(n)


class TestRankLocalSystem:
    @pytest.mark.parametrize(
        "datum,i,expected",
        [
            ((7, 1, [1, 2, 4]), 1, 3),
            ((6, 1, [2, 2, 2]), 3, 0),
            ((5, 1, [1] * 5), 2, 5),
        ],
    )
    def test_examples(self, datum, i, expected):
        assert rank_local_system(validate(*datum), i) == expected

    @given(cover_data())
    def test_constant_on_galois_orbits(self, d):
        for orbit in galois_orbits(d.n).orbits:
            ranks = {rank_local_system(d, i) for i in orbit}
            assert len(ranks) == 1
