"""The value multiset of f(n) = n^((k+p^a(p-1))p^t) + n^((k-p^a(p-1))p^t)
mod p^M, the multiplication action of the unit group on it, and stabilizer
classification.

build_S collects f(1..p^(a+1)) keeping invertible values only, with
multiplicity.  theorem1_check verifies that every d-th root of unity
fixes the multiset; stabilizer computes the full stabilizer subgroup
(cyclic, so it is determined by the largest stabilizing prime-power
orders); theorem3_check compares the stabilizer order against d*p^a
(v < t) or d (v = t).  j_balanced is the fiber-equidistribution
diagnostic that controls the p-part of the stabilizer.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

from .padic_core import (
    PrimePowerModulus,
    Residue,
    element_order,
    factorize,
    primitive_root,
    roots_of_unity,
)
from .params import ParameterSet, f_exponents
from .report import CheckReport, timed_check


class ResidueMultiset:
    """Map from invertible residue value to positive multiplicity."""

    __slots__ = ("modulus", "counts")

    def __init__(self, modulus: PrimePowerModulus, counts: Mapping[int, int]):
        pM = modulus.modulus
        for key, c in counts.items():
            if not 0 <= key < pM:
                raise ValueError(f"residue {key} out of range for modulus {modulus}")
            if key % modulus.p == 0:
                raise ValueError(f"residue {key} is not invertible mod {modulus}")
            if c < 1:
                raise ValueError(f"multiplicity of {key} must be positive, got {c}")
        self.modulus = modulus
        self.counts = dict(counts)

    @classmethod
    def from_values(cls, modulus: PrimePowerModulus, values: Iterable[int]) -> "ResidueMultiset":
        return cls(modulus, Counter(v % modulus.modulus for v in values))

    def total(self) -> int:
        return sum(self.counts.values())

    def support(self) -> list[int]:
        return sorted(self.counts)

    def __eq__(self, other):
        if not isinstance(other, ResidueMultiset):
            return NotImplemented
        return self.modulus == other.modulus and self.counts == other.counts

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __len__(self):
        return len(self.counts)

    def __repr__(self):
        items = ", ".join(f"{k}:{c}" for k, c in sorted(self.counts.items()))
        return f"ResidueMultiset(mod {self.modulus}, {{{items}}})"


@dataclass(frozen=True)
class SubgroupDescriptor:
    """A cyclic subgroup of the unit group: its order and a generator."""

    order: int
    generator: Residue

    def __post_init__(self):
        if element_order(self.generator) != self.order:
            raise ValueError(
                f"generator {self.generator.value} does not have order {self.order}"
            )


def eval_f(ps: ParameterSet, n: int) -> Residue:
    """f(n) mod p^M."""
    m = ps.modulus()
    e_plus, e_minus = f_exponents(ps)
    return m.residue(pow(n, e_plus, m.modulus) + pow(n, e_minus, m.modulus))


def build_S(ps: ParameterSet) -> ResidueMultiset:
    """The multiset of invertible values f(n) mod p^M for n = 1..p^(a+1).

    Values divisible by p (exactly the n with p | n) are dropped, so the
    total multiplicity is p^(a+1) - p^a.
    """
    m = ps.modulus()
    e_plus, e_minus = f_exponents(ps)
    pM = m.modulus
    counts: Counter[int] = Counter()
    for n in range(1, ps.p ** (ps.a + 1) + 1):
        val = (pow(n, e_plus, pM) + pow(n, e_minus, pM)) % pM
        if val % ps.p != 0:
            counts[val] += 1
    return ResidueMultiset(m, counts)


def build_S_x(ps: ParameterSet, x: int) -> ResidueMultiset:
    """As build_S but restricted to n ≡ x (mod p); total multiplicity p^a."""
    if x % ps.p == 0:
        raise ValueError(f"x = {x} must be invertible mod p = {ps.p}")
    m = ps.modulus()
    e_plus, e_minus = f_exponents(ps)
    pM = m.modulus
    counts: Counter[int] = Counter()
    start = x % ps.p or ps.p
    for n in range(start, ps.p ** (ps.a + 1) + 1, ps.p):
        val = (pow(n, e_plus, pM) + pow(n, e_minus, pM)) % pM
        if val % ps.p != 0:
            counts[val] += 1
    return ResidueMultiset(m, counts)


def act(g: Residue | int, s: ResidueMultiset) -> ResidueMultiset:
    """The multiset {g*x : x in s}, multiplicities carried along."""
    if isinstance(g, Residue):
        if g.modulus != s.modulus:
            raise ValueError(f"cross-modulus action: {g.modulus} vs {s.modulus}")
        gval = g.value
    else:
        gval = g % s.modulus.modulus
    if gval % s.modulus.p == 0:
        raise ValueError(f"non-invertible residue: {s.modulus.p} divides {gval}")
    pM = s.modulus.modulus
    return ResidueMultiset(s.modulus, {(gval * k) % pM: c for k, c in s.counts.items()})


def _stabilizes(gval: int, s: ResidueMultiset) -> bool:
    # g*S and S have equal totals and g acts injectively, so checking the
    # counts of all images of the support decides multiset equality
    pM = s.modulus.modulus
    counts = s.counts
    for key, c in counts.items():
        if counts.get((gval * key) % pM, 0) != c:
            return False
    return True


@timed_check
def theorem1_check(ps: ParameterSet) -> CheckReport:
    """Check that every d-th root of unity g satisfies g*S = S."""
    s = build_S(ps)
    roots = roots_of_unity(ps.d, ps.modulus())
    failing = sorted(g.value for g in roots if act(g, s) != s)
    dropped = ps.p ** (ps.a + 1) - s.total()
    return CheckReport(
        name="theorem1",
        inputs=ps.as_dict(),
        holds=not failing,
        lhs="g*S for all d-th roots g",
        rhs="S",
        modulus=(ps.p, ps.M),
        details={
            "roots_tested": len(roots),
            "failing_roots": failing,
            "support_size": len(s),
            "total_multiplicity": s.total(),
            "dropped_values": dropped,
        },
    )


@timed_check
def transport_check(ps: ParameterSet, g: int, xprime: int, n: int) -> CheckReport:
    """Check f(n') ≡ g*f(n) mod p^M for n' ≡ n*x' mod p^(a+1), x'^k' ≡ g mod p^(a+1)."""
    m = ps.modulus()
    pM = m.modulus
    p_a1 = ps.p ** (ps.a + 1)
    g %= pM
    if pow(g, ps.d, pM) != 1:
        raise ValueError(f"g = {g} is not a {ps.d}-th root of unity mod {m}")
    if pow(xprime, ps.kprime, p_a1) != g % p_a1:
        raise ValueError(
            f"x'^k' = {xprime}^{ps.kprime} is not ≡ g = {g} mod p^(a+1) = {p_a1}"
        )
    if n % ps.p == 0:
        raise ValueError(f"n = {n} must be invertible mod p = {ps.p}")

    nprime = (n * xprime - 1) % p_a1 + 1  # representative in [1, p^(a+1)]
    lhs = eval_f(ps, nprime)
    rhs = m.residue(g) * eval_f(ps, n)
    return CheckReport(
        name="transport",
        inputs={**ps.as_dict(), "g": g, "xprime": xprime, "n": n},
        holds=lhs == rhs,
        lhs=str(lhs),
        rhs=str(rhs),
        modulus=(ps.p, ps.M),
        details={"nprime": nprime},
    )


@timed_check
def corollary1_check(ps: ParameterSet, x: int, mu: int) -> CheckReport:
    """Check S_x = S_y for y = x*mu, mu a gcd(k,p-1)-th root of unity mod p."""
    gk = gcd(ps.k, ps.p - 1)
    if pow(mu, gk, ps.p) != 1:
        raise ValueError(f"mu = {mu} is not a {gk}-th root of unity mod {ps.p}")
    if x % ps.p == 0:
        raise ValueError(f"x = {x} must be invertible mod p = {ps.p}")
    y = x * mu % ps.p
    s_x = build_S_x(ps, x)
    s_y = build_S_x(ps, y)
    return CheckReport(
        name="corollary1",
        inputs={**ps.as_dict(), "x": x, "mu": mu},
        holds=s_x == s_y,
        lhs=f"S_{x % ps.p}",
        rhs=f"S_{y}",
        modulus=(ps.p, ps.M),
        details={"y": y, "total_multiplicity": s_x.total()},
    )


def stabilizer(s: ResidueMultiset) -> SubgroupDescriptor:
    """The full stabilizer of s under unit multiplication.

    The ambient group is cyclic of order p^(M-1)(p-1), so the stabilizer
    is the unique cyclic subgroup whose order is the product, over primes
    q dividing the group order, of the largest q-power q^f such that the
    canonical element of order q^f fixes s.
    """
    if not s.counts:
        raise ValueError("stabilizer of an empty multiset is undefined")
    m = s.modulus
    n0 = m.unit_group_order()
    h = primitive_root(m).value
    factors = dict(factorize(m.p - 1))
    if m.exponent > 1:
        factors[m.p] = m.exponent - 1
    order = 1
    for q, e in factors.items():
        for j in range(1, e + 1):
            if not _stabilizes(pow(h, n0 // q**j, m.modulus), s):
                break
            order *= q
    return SubgroupDescriptor(order, m.residue(pow(h, n0 // order, m.modulus)))


def stabilizer_brute_force(s: ResidueMultiset) -> SubgroupDescriptor:
    """Stabilizer by scanning every unit; the oracle for small moduli."""
    if not s.counts:
        raise ValueError("stabilizer of an empty multiset is undefined")
    m = s.modulus
    members = [u for u in range(1, m.modulus) if u % m.p != 0 and _stabilizes(u, s)]
    order = len(members)
    for u in members:
        g = m.residue(u)
        if element_order(g) == order:
            return SubgroupDescriptor(order, g)
    raise AssertionError("stabilizer scan found no generator")  # not cyclic: impossible


@timed_check
def theorem3_check(ps: ParameterSet) -> CheckReport:
    """Check Stab(S) = mu_n with n = d*p^a when v < t and n = d when v = t."""
    s = build_S(ps)
    sub = stabilizer(s)
    expected = ps.d * ps.p**ps.a if ps.v < ps.t else ps.d
    is_root_group = pow(sub.generator.value, expected, ps.modulus().modulus) == 1
    return CheckReport(
        name="theorem3",
        inputs=ps.as_dict(),
        holds=sub.order == expected and is_root_group,
        lhs=str(sub.order),
        rhs=str(expected),
        modulus=(ps.p, ps.M),
        details={
            "generator": sub.generator.value,
            "branch": "v<t" if ps.v < ps.t else "v=t",
            "generator_is_nth_root": is_root_group,
        },
    )


def j_balanced(s: ResidueMultiset, j: int) -> bool:
    """True iff every fiber of reduction mod p^(M-j) meets s with equal counts.

    For each member, all p^j lifts of its reduction mod p^(M-j) must occur
    with the same multiplicity.
    """
    m = s.modulus
    if not 1 <= j < m.exponent:
        raise ValueError(f"j must satisfy 1 <= j < M = {m.exponent}, got {j}")
    base_mod = m.p ** (m.exponent - j)
    seen: set[int] = set()
    for key in s.counts:
        base = key % base_mod
        if base in seen:
            continue
        seen.add(base)
        fiber = {s.counts.get(base + i * base_mod, 0) for i in range(m.p**j)}
        if len(fiber) != 1:
            return False
    return True
