"""Power sums over initial segments, modularly and exactly.

power_sum_mod evaluates sum_{n=1}^{N} n^e mod p^M term by term with
modular exponentiation.  The two checkers compare such sums against
Bernoulli data:

    lemma1:  sum_{n=1}^{p^a} n^r  vs  p^a * B_r     mod p^(2a+vp(r)+1)
    lemma2:  sum_{n=1}^{p^a} n^k  vs  0             mod p^(r+a)

lemma1 is a reporter, not an assertion: the stated congruence has
documented failures (r = 2, and more generally small-a points where
(p-1) | r-2), so the report records holds/fails plus the exact margin
and the caller maps the validity region.
"""

from __future__ import annotations

from fractions import Fraction

from .bernoulli import bernoulli
from .padic_core import PrimePowerModulus, Residue, is_odd_prime, reduce_rational, vp
from .report import CheckReport, rational_margin, timed_check


def power_sum_mod(n_max: int, e: int, m: PrimePowerModulus) -> Residue:
    """sum_{n=1}^{n_max} n^e mod p^M."""
    if n_max < 0 or e < 0:
        raise ValueError("power_sum_mod expects nonnegative bound and exponent")
    pM = m.modulus
    total = 0
    for n in range(1, n_max + 1):
        total += pow(n, e, pM)
    return m.residue(total)


def power_sum_exact(n_max: int, e: int) -> int:
    """The same sum as an exact big integer (used for exact margins)."""
    return sum(n**e for n in range(1, n_max + 1))


@timed_check
def lemma1_check(p: int, a: int, r: int) -> CheckReport:
    """Report on  sum_{n=1}^{p^a} n^r  ≡  p^a B_r  (mod p^(2a+vp(r)+1))."""
    if not is_prime_gt3(p):
        raise ValueError(f"p must be a prime greater than 3, got {p}")
    if a < 1:
        raise ValueError("a must be a positive integer")
    if r < 2 or r % 2 != 0:
        raise ValueError(f"r must be even and positive, got {r}")

    exponent = 2 * a + vp(r, p) + 1
    m = PrimePowerModulus(p, exponent)
    lhs = power_sum_mod(p**a, r, m)
    rhs = reduce_rational(p**a * bernoulli(r), m)  # p^a * B_r is p-integral: vp(B_r) >= -1
    diff = Fraction(power_sum_exact(p**a, r)) - p**a * bernoulli(r)
    margin = rational_margin(diff, p, exponent)
    return CheckReport(
        name="lemma1",
        inputs={"p": p, "a": a, "r": r},
        holds=lhs == rhs,
        lhs=str(lhs),
        rhs=str(rhs),
        modulus=(p, exponent),
        margin=margin,
    )


@timed_check
def lemma2_check(p: int, a: int, rr: int, kk: int) -> CheckReport:
    """Check  sum_{n=1}^{p^a} n^kk  ≡  0  (mod p^(rr+a))."""
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if a < 1:
        raise ValueError("a must be a positive integer")
    if rr < 1:
        raise ValueError("rr must be a positive integer")
    if kk < rr + a:
        raise ValueError(f"k = {kk} must be at least rr + a = {rr + a}")
    if kk % (p - 1) == 0:
        raise ValueError(f"(p-1) = {p - 1} must not divide k = {kk}")
    if kk % p**rr != 0:
        raise ValueError(f"p^rr = {p**rr} must divide k = {kk}")

    exponent = rr + a
    m = PrimePowerModulus(p, exponent)
    lhs = power_sum_mod(p**a, kk, m)
    margin = rational_margin(Fraction(power_sum_exact(p**a, kk)), p, exponent)
    return CheckReport(
        name="lemma2",
        inputs={"p": p, "a": a, "rr": rr, "kk": kk},
        holds=lhs.value == 0,
        lhs=str(lhs),
        rhs="0",
        modulus=(p, exponent),
        margin=margin,
    )


def is_prime_gt3(p: int) -> bool:
    return p > 3 and is_odd_prime(p)
