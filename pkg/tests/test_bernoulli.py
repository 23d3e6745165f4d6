from fractions import Fraction
from math import comb

import pytest

from padlab.bernoulli import (
    BernoulliTable,
    adams_check,
    bernoulli,
    bernoulli_div_n_mod,
    von_staudt_clausen_check,
)
from padlab.padic_core import is_prime, vp_rational


def akiyama_tanigawa(n_max):
    # independent oracle; the triangle gives B_1 = +1/2, flip to our convention
    out = []
    row = [Fraction(0)] * (n_max + 1)
    for m in range(n_max + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(-row[0] if m == 1 else row[0])
    return out


class TestTable:
    def test_base_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(7) == 0
        assert bernoulli(12) == Fraction(-691, 2730)
        assert bernoulli(26) == Fraction(8553103, 6)

    def test_odd_indices_vanish(self):
        assert all(bernoulli(n) == 0 for n in range(3, 61, 2))

    def test_recurrence_residual_is_zero(self):
        for m in range(1, 61):
            assert sum(comb(m + 1, j) * bernoulli(j) for j in range(m + 1)) == 0

    def test_matches_akiyama_tanigawa(self):
        oracle = akiyama_tanigawa(30)
        assert [bernoulli(n) for n in range(31)] == oracle

    def test_fresh_table_grows(self):
        table = BernoulliTable()
        assert table.value(40) == bernoulli(40)
        assert len(table) >= 41

    def test_negative_index(self):
        with pytest.raises(ValueError):
            BernoulliTable().value(-1)


class TestVonStaudtClausen:
    @pytest.mark.parametrize("n,primes", [(2, [2, 3]), (4, [2, 3, 5]), (12, [2, 3, 5, 7, 13])])
    def test_examples(self, n, primes):
        rep = von_staudt_clausen_check(n)
        assert rep.holds
        assert rep.details["primes"] == primes
        assert rep.lhs == "1/1"

    def test_holds_up_to_120(self):
        assert all(von_staudt_clausen_check(n).holds for n in range(2, 121, 2))

    def test_denominator_is_squarefree_product(self):
        # the identity pins the denominator of B_n exactly
        for n in range(2, 61, 2):
            den = 1
            for d in range(1, n + 1):
                if n % d == 0 and is_prime(d + 1):
                    den *= d + 1
            assert bernoulli(n).denominator == den


class TestAdams:
    def test_examples(self):
        rep = adams_check(6, 5)
        assert rep.holds and rep.details["valuation"] == 0
        assert adams_check(2, 7).holds

    def test_hypothesis_violation(self):
        with pytest.raises(ValueError, match="Adams hypothesis"):
            adams_check(6, 7)

    def test_grid(self):
        # p-integrality of B_r/r across the stated desk-scale grid
        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
            for r in range(2, 201, 2):
                if r % (p - 1) == 0:
                    continue
                assert adams_check(r, p).holds, (r, p)


class TestDivNMod:
    def test_examples(self):
        assert bernoulli_div_n_mod(6, 5, 2).value == 13
        assert bernoulli_div_n_mod(2, 5, 1).value == 3
        assert bernoulli_div_n_mod(26, 5, 2).value == 13

    def test_hypothesis_violation(self):
        with pytest.raises(ValueError, match="Adams hypothesis"):
            bernoulli_div_n_mod(6, 7, 1)

    def test_odd_index_rejected(self):
        with pytest.raises(ValueError, match="even"):
            bernoulli_div_n_mod(5, 7, 1)

    def test_reduction_consistent_with_valuation(self):
        for p in (5, 7, 11):
            for r in range(2, 41, 2):
                if r % (p - 1) == 0:
                    continue
                q = bernoulli(r) / r
                got = bernoulli_div_n_mod(r, p, 3).value
                assert (got * q.denominator - q.numerator) % p**3 == 0
                if q != 0:
                    assert vp_rational(q, p) >= 0
