"""Exact Bernoulli numbers as arbitrary-precision rationals.

Convention: B_1 = -1/2 (the "first" Bernoulli numbers).  Every statement
this library checks involves even indices, where the two conventions
agree, so the choice is documentation rather than substance.

The numbers come from the defining recurrence

    sum_{j=0}^{m} C(m+1, j) * B_j = 0        (m >= 1)

memoized in a grow-only table.  The von Staudt-Clausen identity
(B_n plus the sum of 1/q over primes q with (q-1) | n is an integer)
serves as an independent cross-check, and the p-integrality of B_r/r
for (p-1) ∤ r is exposed both as a guarded reduction and as a checker.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .padic_core import (
    BigRational,
    PrimePowerModulus,
    Residue,
    is_odd_prime,
    is_prime,
    reduce_rational,
    vp_rational,
)
from .report import CheckReport, rational_margin, timed_check


class BernoulliTable:
    """Grow-only memo table of B_0..B_n.

    Growth is O(n^2) rational operations, fine for the desk-scale indices
    used here (a few hundred, at most ~1500).  Concurrent readers are safe
    once grown; growth itself must be serialized by the caller.
    """

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1), Fraction(-1, 2)]

    def __len__(self):
        return len(self._values)

    def grow(self, n: int) -> None:
        while len(self._values) <= n:
            m = len(self._values)
            if m % 2 == 1:  # B_odd = 0 for odd >= 3
                self._values.append(Fraction(0))
                continue
            acc = Fraction(0)
            for j in range(0, m, 2):
                acc += comb(m + 1, j) * self._values[j]
            acc += comb(m + 1, 1) * self._values[1]
            self._values.append(-acc / (m + 1))

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be nonnegative")
        self.grow(n)
        return self._values[n]


_TABLE = BernoulliTable()


def bernoulli(n: int) -> BigRational:
    """The n-th Bernoulli number, exactly."""
    return _TABLE.value(n)


def prewarm(n: int) -> None:
    """Grow the shared table up front (call before any parallel fan-out)."""
    _TABLE.grow(n)


def _require_even_positive(r: int) -> None:
    if r < 2 or r % 2 != 0:
        raise ValueError(f"index must be even and positive, got {r}")


def bernoulli_div_n_mod(r: int, p: int, m: int) -> Residue:
    """B_r/r reduced mod p^m, for even r with (p-1) ∤ r."""
    _require_even_positive(r)
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if r % (p - 1) == 0:
        raise ValueError(f"Adams hypothesis violated: {p - 1} divides {r}")
    q = bernoulli(r) / r
    if q != 0 and vp_rational(q, p) < 0:
        # cannot happen while p-integrality of B_r/r holds; a firing here
        # means the Bernoulli table itself is corrupt
        raise ArithmeticError(f"B_{r}/{r} = {q} is unexpectedly not a {p}-integer")
    return reduce_rational(q, PrimePowerModulus(p, m))


@timed_check
def adams_check(r: int, p: int) -> CheckReport:
    """Check p-integrality of B_r/r for even r not divisible by p-1."""
    _require_even_positive(r)
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if r % (p - 1) == 0:
        raise ValueError(f"Adams hypothesis violated: {p - 1} divides {r}")
    q = bernoulli(r) / r
    val = rational_margin(q, p, 0)
    return CheckReport(
        name="adams",
        inputs={"r": r, "p": p},
        holds=val >= 0,
        lhs=f"{q.numerator}/{q.denominator}",
        rhs="p-integer",
        modulus=None,
        margin=val,
        details={"valuation": val},
    )


@timed_check
def von_staudt_clausen_check(n: int) -> CheckReport:
    """Check that B_n + sum of 1/q over primes q with (q-1) | n is an integer."""
    _require_even_positive(n)
    primes = [d + 1 for d in range(1, n + 1) if n % d == 0 and is_prime(d + 1)]
    total = bernoulli(n) + sum(Fraction(1, q) for q in primes)
    return CheckReport(
        name="von_staudt_clausen",
        inputs={"n": n},
        holds=total.denominator == 1,
        lhs=f"{total.numerator}/{total.denominator}",
        rhs="integer",
        details={"primes": primes},
    )
