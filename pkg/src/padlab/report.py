"""The uniform verdict record returned by every checker.

A CheckReport says whether a congruence held, shows both sides, and
carries a valuation margin: vp(lhs - rhs) minus the required modulus
exponent.  Margins are exact when the checker works on exact integers
or rationals; checkers that only compute modulo p^(E + MARGIN_WINDOW)
saturate the margin at +MARGIN_WINDOW.  A margin is None for checks
with no scalar difference (multiset equality, counts).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import wraps

from .padic_core import vp, vp_rational

# How far beyond the required exponent modular checkers look when
# measuring the margin.  Exact checkers are capped at the same value so
# that a zero difference still reports a finite number.
MARGIN_WINDOW = 8


@dataclass
class CheckReport:
    name: str
    inputs: dict
    holds: bool
    lhs: str = ""
    rhs: str = ""
    modulus: tuple[int, int] | None = None  # (p, required exponent)
    margin: int | None = None
    elapsed_ms: int = 0
    error: str | None = None
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": {k: _jsonify(v) for k, v in self.inputs.items()},
            "modulus": None
            if self.modulus is None
            else {"p": str(self.modulus[0]), "exp": self.modulus[1]},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "margin": self.margin,
            "elapsed_ms": self.elapsed_ms,
            "error": self.error,
            "details": _jsonify(self.details),
        }


def _jsonify(v):
    """Big integers render as decimal strings so no consumer loses precision."""
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict):
        return {k: _jsonify(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonify(x) for x in v]
    return v


def timed_check(fn):
    """Fill in elapsed_ms on the CheckReport a checker returns."""

    @wraps(fn)
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed_ms = int((time.perf_counter() - t0) * 1000)
        return rep

    return wrapper


def integer_margin(diff: int, p: int, required: int, *, window: int = MARGIN_WINDOW) -> int:
    """vp(diff) - required for an exact integer difference, saturated above.

    diff may be a residue computed mod p^(required + window); valuations
    at or beyond the window report as +window.
    """
    cap = required + window
    diff %= p**cap
    val = cap if diff == 0 else min(vp(diff, p), cap)
    return val - required


def rational_margin(diff: Fraction, p: int, required: int, *, window: int = MARGIN_WINDOW) -> int:
    """vp(diff) - required for an exact rational difference, saturated above."""
    if diff == 0:
        return window
    return min(vp_rational(diff, p) - required, window)
