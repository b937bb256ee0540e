"""Exact p-adic valuation of a^n - b^n via multiplicative orders and lifting.

The closed forms here never materialize a^n - b^n: for odd p the valuation
is t + v_p(n) once the order of a/b mod p divides n, and for p = 2 the
two-adic analogue works from v2(a-b) and v2(a+b).  Both forms are
validated against a big-integer oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, log2

from .arith import factorize, is_prime, v_int

__all__ = [
    "RatioOrder",
    "ValuationProfile",
    "e2_lcm",
    "power_diff_valuation",
    "ratio_order",
]


@dataclass(frozen=True)
class RatioOrder:
    """Order data for the ratio a/b at a prime p.

    ``d`` is the least h >= 1 with a^h == b^h (mod p); ``t`` is the exact
    power of p in a^d - b^d, except for p = 2 where t is the exact power
    of 2 in lcm(a - b, a + b).
    """

    p: int
    d: int
    t: int


@dataclass(frozen=True)
class ValuationProfile:
    """Per-prime record: e_p = v_p(a^n - b^n) against k_p = v_p(n)."""

    p: int
    e_p: int
    k_p: int


def _check_pair(a: int, b: int) -> None:
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) must be coprime; reduce by the gcd first")
    if a == b or a == -b:
        raise ValueError(f"a = {a}, b = {b}: order undefined for a = +/-b")


@lru_cache(maxsize=1 << 16)
def ratio_order(a: int, b: int, p: int) -> RatioOrder | None:
    """Order d of a/b modulo prime p and the lifting exponent t.

    Returns None when p divides a or b (the distinguished "p divides ab"
    outcome: no power of p beyond p^0 ever divides a^n - b^n then).
    """
    _check_pair(a, b)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        if a % 2 == 0 or b % 2 == 0:
            return None
        return RatioOrder(2, 1, v_int(a - b, 2) + v_int(a + b, 2) - 1)
    if a % p == 0 or b % p == 0:
        return None
    r = a * pow(b, -1, p) % p
    # order divides p - 1: strip prime factors of p - 1 while the power stays 1
    d = p - 1
    for q, _ in factorize(p - 1):
        while d % q == 0 and pow(r, d // q, p) == 1:
            d //= q
    # raise the modulus until a^d == b^d fails; cannot run past the size of
    # |a^d - b^d|, bounded here in logarithms without forming the number
    cap = int(d * log2(max(abs(a), abs(b)) + 1) / log2(p)) + 2
    t = 1
    modulus = p * p
    while t < cap and pow(a, d, modulus) == pow(b, d, modulus):
        t += 1
        modulus *= p
    if t >= cap:
        raise AssertionError(f"t-search hit its cap for ({a}, {b}, {p})")
    return RatioOrder(p, d, t)


def power_diff_valuation(a: int, b: int, n: int, p: int) -> int:
    """Exact v_p(a^n - b^n) for coprime a, b with a != +/-b and n >= 1."""
    _check_pair(a, b)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if p == 2:
        if (a - b) % 2:
            return 0
        if n % 2:
            return v_int(a - b, 2)
        return v_int(a - b, 2) + v_int(a + b, 2) - 1 + v_int(n, 2)
    order = ratio_order(a, b, p)
    if order is None or n % order.d:
        return 0
    return order.t + v_int(n, p) if n % p == 0 else order.t


def e2_lcm(a: int, b: int, n: int) -> int:
    """Exact power of 2 in lcm(a^n - b^n, a^n + b^n); 0 when a - b is odd.

    This is the two-adic quantity that governs doubling an n already in
    the set, and it is never 1: when a and b are both odd it is at least 2.
    """
    _check_pair(a, b)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if (a - b) % 2:
        return 0
    t = v_int(a - b, 2) + v_int(a + b, 2) - 1
    return t if n % 2 else t + v_int(n, 2)
