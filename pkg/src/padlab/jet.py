"""Derivatives of the two-monomial f and their p-adic valuations.

f^(m)(n) has the falling-factorial closed form

    FF(e+, m) * n^(e+ - m)  +  FF(e-, m) * n^(e- - m),
    FF(e, m) = e (e-1) ... (e-m+1),

evaluated modulo p^cap; a result of 0 mod p^cap reports as ">= cap"
(valuations of polynomial values at residue classes are minima over the
class, so saturation is the honest answer).  On top of that sit the
valuation claim matrix for f^(m), the first-order Taylor truncation
check, and the count of near-critical points of f'.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .padic_core import vp
from .params import ParameterSet, f_exponents
from .report import MARGIN_WINDOW, CheckReport, timed_check


@dataclass(frozen=True)
class DerivativeSpec:
    """f with a derivative order; beyond min(e+, e-) a monomial just vanishes."""

    ps: ParameterSet
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("derivative order must be nonnegative")


def falling_factorial(e: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= e - i
    return out


def derivative_mod(ds: DerivativeSpec, n: int, modulus: int) -> int:
    """f^(m)(n) mod modulus."""
    e_plus, e_minus = f_exponents(ds.ps)
    total = 0
    for e in (e_plus, e_minus):
        if ds.m <= e:  # otherwise the monomial's m-th derivative is 0
            total += falling_factorial(e, ds.m) * pow(n, e - ds.m, modulus)
    return total % modulus


def derivative_valuation(ds: DerivativeSpec, n: int, cap: int) -> int:
    """vp(f^(m)(n)) computed mod p^cap; a return of cap means ">= cap"."""
    if ds.m < 1:
        raise ValueError("derivative order must be >= 1")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    p = ds.ps.p
    if n % p == 0:
        raise ValueError(f"n = {n} must be invertible mod p = {p}")
    value = derivative_mod(ds, n, p**cap)
    return cap if value == 0 else vp(value, p)


@timed_check
def lemma4_check(ps: ParameterSet, m: int, n: int) -> CheckReport:
    """Check the valuation claim matrix for f^(m)(n), n a unit.

    Floor for every m >= 1: vp >= 2a+t+v.  Sharper claims:
      m=1: vp >= 2a+t+v+1, with equality whenever v < t;
      m=2: vp = 2a+2t if v = t, vp >= 2a+t+v+1 if v < t;
      m=3: if v = t, vp = 2a+2t except p = 3 where vp >= 2a+2t+1;
           if v < t, vp >= 2a+t+v+1.
    """
    if m < 1:
        raise ValueError("derivative order must be >= 1")
    if n % ps.p == 0:
        raise ValueError(f"n = {n} must be invertible mod p = {ps.p}")

    a, t, v, p = ps.a, ps.t, ps.v, ps.p
    floor = 2 * a + t + v
    cap = 2 * a + 2 * t + MARGIN_WINDOW
    val = derivative_valuation(DerivativeSpec(ps, m), n, cap)
    saturated = val == cap

    claims: dict[str, bool] = {"floor": val >= floor}
    if m == 1:
        claims["first_order_bound"] = val >= floor + 1
        if v < t:
            claims["first_order_equality"] = val == 2 * a + t + v + 1
    elif m == 2:
        if v == t:
            claims["second_order_equality"] = val == 2 * a + 2 * t
        else:
            claims["second_order_bound"] = val >= 2 * a + t + v + 1
    elif m == 3:
        if v == t:
            if p == 3:
                claims["third_order_bound_p3"] = val >= 2 * a + 2 * t + 1
            else:
                claims["third_order_equality"] = val == 2 * a + 2 * t
        else:
            claims["third_order_bound"] = val >= 2 * a + t + v + 1

    return CheckReport(
        name="lemma4",
        inputs={**ps.as_dict(), "m": m, "n": n},
        holds=all(claims.values()),
        lhs=f">={cap}" if saturated else str(val),
        rhs=f"floor {floor}",
        modulus=(p, floor),
        margin=val - floor,
        details={"valuation": val, "saturated": saturated, "claims": claims},
    )


@timed_check
def corollary3_check(ps: ParameterSet, s: int, kk: int, x: int) -> CheckReport:
    """Check f(s + p^kk x) ≡ f(s) + f'(s) p^kk x mod p^(2a+t+v+2kk).

    When v < t the congruence is also claimed one exponent higher; both
    verdicts are reported and the overall verdict includes the strong
    form exactly when it applies.
    """
    p = ps.p
    if s % p == 0:
        raise ValueError(f"s = {s} must be invertible mod p = {p}")
    if kk < 1:
        raise ValueError("kk must be >= 1")

    weak_exp = 2 * ps.a + ps.t + ps.v + 2 * kk
    strong_exp = weak_exp + 1
    cap = strong_exp + MARGIN_WINDOW
    big = p**cap

    e_plus, e_minus = f_exponents(ps)
    shifted = s + p**kk * x
    lhs_big = (pow(shifted, e_plus, big) + pow(shifted, e_minus, big)) % big
    f_s = (pow(s, e_plus, big) + pow(s, e_minus, big)) % big
    fprime_s = derivative_mod(DerivativeSpec(ps, 1), s, big)
    rhs_big = (f_s + fprime_s * p**kk * x) % big

    diff = (lhs_big - rhs_big) % big
    val = cap if diff == 0 else vp(diff, p)
    weak_holds = val >= weak_exp
    strong_holds = val >= strong_exp
    strong_applies = ps.v < ps.t

    return CheckReport(
        name="corollary3",
        inputs={**ps.as_dict(), "s": s, "kk": kk, "x": x},
        holds=weak_holds and (strong_holds or not strong_applies),
        lhs=str(lhs_big % p**weak_exp),
        rhs=str(rhs_big % p**weak_exp),
        modulus=(p, weak_exp),
        margin=min(val, cap) - weak_exp,
        details={
            "weak_holds": weak_holds,
            "strong_holds": strong_holds,
            "strong_applies": strong_applies,
            "difference_valuation": val,
            "saturated": val == cap,
        },
    )


@timed_check
def lemma5_count(ps: ParameterSet, s: int) -> CheckReport:
    """Count units u <= p^(a+1) with vp(f'(u)) >= 2a+2t+s+1; expect p^(a-s)(p-1).

    Only stated for v = t and 0 <= s <= a.
    """
    if ps.v != ps.t:
        raise ValueError(f"lemma5 requires v = t, got v = {ps.v}, t = {ps.t}")
    if not 0 <= s <= ps.a:
        raise ValueError(f"s must satisfy 0 <= s <= a = {ps.a}, got {s}")

    threshold = 2 * ps.a + 2 * ps.t + s + 1
    ds = DerivativeSpec(ps, 1)
    count = 0
    for u in range(1, ps.p ** (ps.a + 1) + 1):
        if u % ps.p == 0:
            continue
        if derivative_valuation(ds, u, threshold) >= threshold:
            count += 1
    expected = ps.p ** (ps.a - s) * (ps.p - 1)
    return CheckReport(
        name="lemma5",
        inputs={**ps.as_dict(), "s": s},
        holds=count == expected,
        lhs=str(count),
        rhs=str(expected),
        modulus=(ps.p, threshold),
        details={"count": count, "expected": expected},
    )


def unit_range(ps: ParameterSet) -> list[int]:
    """The units among 1..p^(a+1), the natural n-range for f."""
    return [n for n in range(1, ps.p ** (ps.a + 1) + 1) if gcd(n, ps.p) == 1]
