"""The headline checkers.

theorem2_check: the linearity
    sum n^((k+p^a(p-1)r)p^t) ≡ r * sum n^((k+p^a(p-1))p^t)   mod p^(3a+t+v+2)
corollary2_check: the vanishing
    sum n^b (n^(p^(a+t)(p-1)) - 1)^2 ≡ 0                     mod p^(3a+t+v+2)
case1/case2/case3: the three Bernoulli reduction steps
    B_{r+p^a(p-1)} ≡ (r+p^a(p-1)) B_r/r - p^(r-1) B_r        mod p^(a+vp(r)+1)
    (k+p^a(p-1)) B_{(k+b p^a(p-1))p^t}
        ≡ (k+b p^a(p-1)) B_{(k+p^a(p-1))p^t}                 mod p^(3a+t+1)
    sum n^((k+p^a(p-1))p^t) ≡ p * sum n^((k+p^a(p-1))p^(t-1)) mod p^(3a+t+2)
kummer_check: the Euler-factor-corrected congruence
    (1-p^(r-1)) B_r/r ≡ (1-p^(s-1)) B_s/s                    mod p^(a+1)
for even r ≡ s mod p^a(p-1) with (p-1) ∤ r.

Bernoulli comparisons are exact rational arithmetic reduced at the end;
power-sum comparisons run term-by-term modularly with a margin window.
"""

from __future__ import annotations

from fractions import Fraction

from .bernoulli import bernoulli
from .padic_core import PrimePowerModulus, is_odd_prime, reduce_rational, vp
from .params import ParameterSet
from .report import (
    MARGIN_WINDOW,
    CheckReport,
    integer_margin,
    rational_margin,
    timed_check,
)


def _require_strong(ps: ParameterSet) -> None:
    base = 2 * ps.p ** (2 * ps.a + 1)
    if ps.k % base != 0:
        raise ValueError(f"k = {ps.k} is not divisible by 2p^(2a+1) = {base}")
    if ps.k % (ps.p - 1) == 0:
        raise ValueError(f"k = {ps.k} must not be divisible by p-1 = {ps.p - 1}")


def _mod_power_sum(n_max: int, e: int, modulus: int) -> int:
    return sum(pow(n, e, modulus) for n in range(1, n_max + 1)) % modulus


@timed_check
def theorem2_check(ps: ParameterSet, r: int) -> CheckReport:
    """Check the linearity of sum n^((k+p^a(p-1)r)p^t) in r, mod p^M."""
    _require_strong(ps)
    shift = ps.p**ps.a * (ps.p - 1)
    if ps.k + shift * r <= 0:
        raise ValueError(f"k + p^a(p-1)r = {ps.k + shift * r} must be positive")

    exponent = ps.M
    big = ps.p ** (exponent + MARGIN_WINDOW)
    n_max = ps.p ** (ps.a + 1)
    sum_r = _mod_power_sum(n_max, (ps.k + shift * r) * ps.p**ps.t, big)
    sum_1 = _mod_power_sum(n_max, (ps.k + shift) * ps.p**ps.t, big)
    margin = integer_margin(sum_r - r * sum_1, ps.p, exponent)
    pe = ps.p**exponent
    return CheckReport(
        name="theorem2",
        inputs={**ps.as_dict(), "r": r},
        holds=margin >= 0,
        lhs=str(sum_r % pe),
        rhs=str(r * sum_1 % pe),
        modulus=(ps.p, exponent),
        margin=margin,
    )


@timed_check
def corollary2_check(p: int, a: int, t: int, b: int, v: int | None = None) -> CheckReport:
    """Check sum_{n<=p^(a+1)} n^b (n^(p^(a+t)(p-1)) - 1)^2 ≡ 0 mod p^(3a+t+v+2).

    v may be given explicitly to map the validity region.  When omitted it
    is derived by treating c = b/p^t in the role of k: v = min(vp(c)-2a-1, t)
    if p^(2a+1) | c, else 0.  The report records the exact valuation of the
    sum.
    """
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if a < 0 or t < 0:
        raise ValueError("a and t must be nonnegative")
    if b < 1:
        raise ValueError("b must be a positive integer")
    if b % p ** (a + t) != 0:
        raise ValueError(f"b = {b} is not divisible by p^(a+t) = {p ** (a + t)}")
    if b % (p - 1) == 0:
        raise ValueError(f"(p-1) = {p - 1} must not divide b = {b}")
    if v is None:
        c = b // p**t
        vc = vp(c, p)
        v = min(vc - 2 * a - 1, t) if vc >= 2 * a + 1 else 0
    if not 0 <= v <= t:
        raise ValueError(f"v must satisfy 0 <= v <= t = {t}, got {v}")

    exponent = 3 * a + t + v + 2
    inner = p ** (a + t) * (p - 1)
    total = sum(n**b * (n**inner - 1) ** 2 for n in range(1, p ** (a + 1) + 1))
    val = vp(total, p)  # total > 0: every term is nonnegative, n=2 term positive
    return CheckReport(
        name="corollary2",
        inputs={"p": p, "a": a, "t": t, "b": b, "v": v},
        holds=val >= exponent,
        lhs=str(total % p**exponent),
        rhs="0",
        modulus=(p, exponent),
        margin=val - exponent,
        details={"sum_valuation": val},
    )


@timed_check
def case1_step_check(p: int, a: int, r: int, check_hypothesis: bool = True) -> CheckReport:
    """Check B_{r+p^a(p-1)} ≡ (r+p^a(p-1)) B_r/r - p^(r-1) B_r mod p^(a+vp(r)+1).

    The step presumes the congruences one level down; with
    check_hypothesis the mod-p^a layer is verified first and reported
    alongside.
    """
    if not (p > 3 and is_odd_prime(p)):
        raise ValueError(f"p must be a prime greater than 3, got {p}")
    if a < 1:
        raise ValueError("a must be a positive integer")
    if r < 2 or r % 2 != 0:
        raise ValueError(f"r must be even and positive, got {r}")
    if r % (p - 1) == 0:
        raise ValueError(f"(p-1) = {p - 1} must not divide r = {r}")
    if vp(r, p) >= a:
        raise ValueError(f"vp(r) = {vp(r, p)} must be smaller than a = {a}")

    exponent = a + vp(r, p) + 1
    shift = p**a * (p - 1)
    lhs_q = bernoulli(r + shift)
    rhs_q = (r + shift) * bernoulli(r) / r - p ** (r - 1) * bernoulli(r)
    for side, q in (("lhs", lhs_q), ("rhs", rhs_q)):
        if q != 0 and vp(q.denominator, p) > 0:
            raise ArithmeticError(f"{side} {q} is unexpectedly not a {p}-integer")
    margin = rational_margin(lhs_q - rhs_q, p, exponent)

    details: dict = {}
    if check_hypothesis:
        # the layer below: the corrected B_r/r is constant on the index
        # class r + i*p^(a-1)(p-1) mod p^a
        sub = []
        step = p ** (a - 1) * (p - 1)
        for i in range(1, p):
            rep = kummer_check(p, a - 1, r, r + i * step)
            sub.append({"s": r + i * step, "holds": rep.holds})
        details["hypothesis"] = sub
        details["hypothesis_holds"] = all(entry["holds"] for entry in sub)

    m = PrimePowerModulus(p, exponent)
    return CheckReport(
        name="case1",
        inputs={"p": p, "a": a, "r": r},
        holds=margin >= 0,
        lhs=str(reduce_rational(lhs_q, m)),
        rhs=str(reduce_rational(rhs_q, m)),
        modulus=(p, exponent),
        margin=margin,
        details=details,
    )


@timed_check
def case2_check(ps: ParameterSet, b: int) -> CheckReport:
    """Check (k+p^a(p-1)) B_{(k+b p^a(p-1))p^t} ≡ (k+b p^a(p-1)) B_{(k+p^a(p-1))p^t}
    mod p^(3a+t+1)."""
    _require_strong(ps)
    shift = ps.p**ps.a * (ps.p - 1)
    index_b = (ps.k + b * shift) * ps.p**ps.t
    index_1 = (ps.k + shift) * ps.p**ps.t
    for idx in (index_b, index_1):
        if idx < 2 or idx % 2 != 0:
            raise ValueError(f"Bernoulli index {idx} must be even and positive")
        if idx % (ps.p - 1) == 0:
            raise ValueError(f"(p-1) = {ps.p - 1} must not divide index {idx}")

    exponent = 3 * ps.a + ps.t + 1
    lhs_q = (ps.k + shift) * bernoulli(index_b)
    rhs_q = (ps.k + b * shift) * bernoulli(index_1)
    margin = rational_margin(lhs_q - rhs_q, ps.p, exponent)
    m = PrimePowerModulus(ps.p, exponent)
    return CheckReport(
        name="case2",
        inputs={**ps.as_dict(), "b": b},
        holds=margin >= 0,
        lhs=str(reduce_rational(lhs_q, m)),
        rhs=str(reduce_rational(rhs_q, m)),
        modulus=(ps.p, exponent),
        margin=margin,
        details={"index_lhs": index_b, "index_rhs": index_1},
    )


@timed_check
def case3_branch_check(ps: ParameterSet) -> CheckReport:
    """Check sum n^((k+p^a(p-1))p^t) ≡ p * sum n^((k+p^a(p-1))p^(t-1)) mod p^(3a+t+2)."""
    _require_strong(ps)
    if ps.t < 1:
        raise ValueError("t must be >= 1 for the branching step")

    exponent = 3 * ps.a + ps.t + 2
    big = ps.p ** (exponent + MARGIN_WINDOW)
    n_max = ps.p ** (ps.a + 1)
    base = ps.k + ps.p**ps.a * (ps.p - 1)
    sum_t = _mod_power_sum(n_max, base * ps.p**ps.t, big)
    sum_t1 = _mod_power_sum(n_max, base * ps.p ** (ps.t - 1), big)
    margin = integer_margin(sum_t - ps.p * sum_t1, ps.p, exponent)
    pe = ps.p**exponent
    return CheckReport(
        name="case3",
        inputs=ps.as_dict(),
        holds=margin >= 0,
        lhs=str(sum_t % pe),
        rhs=str(ps.p * sum_t1 % pe),
        modulus=(ps.p, exponent),
        margin=margin,
    )


@timed_check
def kummer_check(p: int, a: int, r: int, s: int) -> CheckReport:
    """Check (1-p^(r-1)) B_r/r ≡ (1-p^(s-1)) B_s/s mod p^(a+1)."""
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if a < 0:
        raise ValueError("a must be nonnegative")
    for idx in (r, s):
        if idx < 2 or idx % 2 != 0:
            raise ValueError(f"index {idx} must be even and positive")
    if r % (p - 1) == 0:
        raise ValueError(f"(p-1) = {p - 1} must not divide r = {r}")
    step = p**a * (p - 1)
    if (r - s) % step != 0:
        raise ValueError(f"r = {r} and s = {s} must be congruent mod p^a(p-1) = {step}")

    exponent = a + 1
    lhs_q = (1 - Fraction(p) ** (r - 1)) * bernoulli(r) / r
    rhs_q = (1 - Fraction(p) ** (s - 1)) * bernoulli(s) / s
    margin = rational_margin(lhs_q - rhs_q, p, exponent)
    m = PrimePowerModulus(p, exponent)
    return CheckReport(
        name="kummer",
        inputs={"p": p, "a": a, "r": r, "s": s},
        holds=margin >= 0,
        lhs=str(reduce_rational(lhs_q, m)),
        rhs=str(reduce_rational(rhs_q, m)),
        modulus=(p, exponent),
        margin=margin,
    )


__all__ = [
    "theorem2_check",
    "corollary2_check",
    "case1_step_check",
    "case2_check",
    "case3_branch_check",
    "kummer_check",
]
