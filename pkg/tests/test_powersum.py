from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padlab.bernoulli import bernoulli
from padlab.padic_core import PrimePowerModulus
from padlab.powersum import lemma1_check, lemma2_check, power_sum_exact, power_sum_mod

M25 = PrimePowerModulus(5, 2)


def faulhaber(n_max, e):
    # closed-form oracle: sum_{n=0}^{N-1} n^e + N^e - 0^e, exact rationals
    total = sum(
        Fraction(comb(e + 1, j)) * bernoulli(j) * Fraction(n_max) ** (e + 1 - j)
        for j in range(e + 1)
    ) / (e + 1)
    total += Fraction(n_max) ** e - (1 if e == 0 else 0)
    assert total.denominator == 1
    return total.numerator


class TestPowerSumMod:
    def test_examples(self):
        assert power_sum_mod(5, 14, M25).value == 10
        assert power_sum_mod(5, 0, M25).value == 5
        assert power_sum_mod(5, 2, PrimePowerModulus(5, 3)).value == 55

    @given(st.integers(min_value=0, max_value=200), st.integers(min_value=0, max_value=50))
    def test_matches_exact_sum(self, n_max, e):
        m = PrimePowerModulus(7, 3)
        assert power_sum_mod(n_max, e, m).value == power_sum_exact(n_max, e) % m.modulus

    @pytest.mark.parametrize("n_max,e", [(10, 3), (49, 14), (120, 7), (30, 0)])
    def test_matches_faulhaber_oracle(self, n_max, e):
        m = PrimePowerModulus(11, 4)
        assert power_sum_mod(n_max, e, m).value == faulhaber(n_max, e) % m.modulus

    @given(st.integers(min_value=1, max_value=80), st.integers(min_value=0, max_value=30))
    def test_range_additivity(self, n, e):
        m = PrimePowerModulus(5, 4)
        whole = power_sum_mod(2 * n, e, m)
        upper = sum(pow(x, e, m.modulus) for x in range(n + 1, 2 * n + 1))
        assert whole == power_sum_mod(n, e, m) + upper


class TestLemma1:
    def test_holds_example(self):
        rep = lemma1_check(5, 1, 4)
        assert rep.holds
        assert rep.lhs == "104" and rep.rhs == "104"
        assert rep.modulus == (5, 3)
        assert rep.margin >= 0

    def test_r2_anomaly(self):
        rep = lemma1_check(5, 1, 2)
        assert not rep.holds
        assert rep.lhs == "55" and rep.rhs == "105"
        assert rep.margin < 0

    def test_p7_example(self):
        rep = lemma1_check(7, 1, 6)
        assert rep.holds
        assert rep.lhs == rep.rhs == "286"

    def test_preconditions(self):
        with pytest.raises(ValueError, match="greater than 3"):
            lemma1_check(3, 1, 4)
        with pytest.raises(ValueError, match="positive"):
            lemma1_check(5, 0, 4)
        with pytest.raises(ValueError, match="even"):
            lemma1_check(5, 1, 3)

    def test_known_failure_class(self):
        # a = 1 with (p-1) | r-2 and p coprime to r-1 drops one valuation:
        # the Faulhaber tail term r(r-1)/6 * B_{r-2} * p^(3a) has a p in
        # the denominator of B_{r-2} exactly there
        rep = lemma1_check(5, 1, 14)
        assert not rep.holds and rep.margin == -1
        # same class rescued by p | r-1
        assert lemma1_check(5, 1, 6).holds
        assert lemma1_check(5, 1, 26).holds
        # and by a = 2
        assert lemma1_check(5, 2, 14).holds


class TestLemma2:
    def test_examples(self):
        assert lemma2_check(5, 1, 1, 5).holds
        assert lemma2_check(5, 1, 1, 10).holds

    def test_exact_values(self):
        assert power_sum_exact(5, 5) == 4425
        assert power_sum_exact(5, 10) == 10874275

    def test_precondition_p_minus_one(self):
        with pytest.raises(ValueError, match="must not divide"):
            lemma2_check(5, 1, 1, 4)

    def test_precondition_k_lower_bound(self):
        with pytest.raises(ValueError, match="at least"):
            lemma2_check(5, 2, 1, 2)

    def test_precondition_p_power_divides(self):
        with pytest.raises(ValueError, match="must divide"):
            lemma2_check(5, 1, 2, 10)

    def test_margin_sign_matches_verdict(self):
        for kk in (5, 10, 15, 30):
            rep = lemma2_check(5, 1, 1, kk)
            assert rep.holds == (rep.margin >= 0)
