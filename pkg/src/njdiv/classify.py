"""Finiteness classification and primitive prime divisors.

For j = 1 the set {n : n^j | a^n - b^n} collapses to {1} exactly when
a - b = +/-1; for j = 2 it is {1} exactly for consecutive a, b and {1, 3}
exactly when ab = -2, and infinite otherwise (shown via primitive prime
divisors, which exist by Zsigmondy's theorem outside three classical
exception cases).  For j >= 3 finiteness is an open conjecture, so only
bounded enumerations are ever reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .arith import FactorEffort, FactorizationError, factorize, is_prime

__all__ = [
    "Classification",
    "Verdict",
    "classify",
    "cyclotomic_value",
    "primitive_divisor",
]


class Verdict(Enum):
    SINGLETON_ONE = "SingletonOne"
    FINITE_EXPLICIT = "FiniteExplicit"
    INFINITE = "Infinite"
    CONJECTURALLY_FINITE = "ConjecturallyFinite"


@dataclass(frozen=True)
class Classification:
    """Verdict on a whole set, with the clause that decided it.

    ``members`` is the exact set for finite verdicts (``exhaustive`` True)
    or a bounded enumeration for conjectural ones; ``prime_support`` is
    the exact set of primes dividing any member, when that set is finite.
    """

    verdict: Verdict
    reason: str
    members: tuple[int, ...] | None = None
    exhaustive: bool = False
    bound: int | None = None
    prime_support: tuple[int, ...] | None = None


def _reduced_j2_kind(a1: int, b1: int) -> str:
    if abs(a1 - b1) == 1:
        return "singleton"
    if a1 * b1 == -2:
        return "one_three"
    return "infinite"


def classify(a: int, b: int, j: int, bound: int = 10_000) -> Classification:
    """Classify {n : n^j divides a^n - b^n} as finite or infinite.

    Definitive for j in {1, 2} (after reducing by g = gcd(a, b) when
    g > 1); j >= 3 yields ConjecturallyFinite with the enumeration up to
    ``bound`` attached.  Rejects a = +/-b.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if a == b or a == -b:
        raise ValueError(f"a = {a}, b = {b}: degenerate pair has no classification")
    g = gcd(a, b)

    if j >= 3:
        from . import general  # deferred: general imports this module's types

        result = general.enumerate_general(a, b, j, bound)
        return Classification(
            Verdict.CONJECTURALLY_FINITE,
            "finiteness is conjectural for j >= 3; bounded enumeration only",
            members=result.members,
            exhaustive=False,
            bound=bound,
        )

    if j == 1:
        if abs(a - b) == 1:
            return Classification(
                Verdict.SINGLETON_ONE,
                "a - b = +/-1: no prime divides a - b",
                members=(1,),
                exhaustive=True,
                prime_support=(),
            )
        return Classification(
            Verdict.INFINITE,
            "a - b has a prime divisor p: every power of p is a member",
        )

    # j == 2
    a1, b1 = a // g, b // g
    kind = _reduced_j2_kind(a1, b1)
    if g == 1:
        if kind == "singleton":
            return Classification(
                Verdict.SINGLETON_ONE,
                "a and b are consecutive integers",
                members=(1,),
                exhaustive=True,
                prime_support=(),
            )
        if kind == "one_three":
            return Classification(
                Verdict.FINITE_EXPLICIT,
                "ab = -2",
                members=(1, 3),
                exhaustive=True,
                prime_support=(3,),
            )
        return Classification(
            Verdict.INFINITE,
            "neither consecutive nor ab = -2",
        )
    # g > 1: the set always contains every n whose primes divide g, hence
    # is infinite; the reduced pair decides whether the prime support is
    # finite (primes of g, or of 3g) or infinite.
    g_primes = tuple(p for p, _ in factorize(g))
    if kind == "singleton":
        return Classification(
            Verdict.INFINITE,
            "gcd > 1: contains all g-smooth n; reduced pair is consecutive, "
            "so the prime support is exactly the primes of g",
            prime_support=g_primes,
        )
    if kind == "one_three":
        support = tuple(sorted(set(g_primes) | {3}))
        return Classification(
            Verdict.INFINITE,
            "gcd > 1: contains all g-smooth n; reduced pair has ab = -2, "
            "so the prime support is exactly the primes of 3g",
            prime_support=support,
        )
    return Classification(
        Verdict.INFINITE,
        "gcd > 1: contains all g-smooth n, and the prime support is infinite",
    )


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, k in factorize(n):
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return sorted(divs)


def cyclotomic_value(n: int, a: int, b: int) -> int:
    """Homogeneous cyclotomic value: product of (a^d - b^d)^mu(n/d) over d | n.

    Exact arbitrary-precision arithmetic; its size is ~phi(n) log(a) bits,
    far below a^n - b^n, which is what makes primitive-divisor searches
    affordable.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return a - b
    if n == 2:
        return a + b
    if a == b or a == -b:
        raise ValueError(f"a = {a}, b = {b}: degenerate for n > 2")
    primes = [p for p, _ in factorize(n)]
    numerator = 1
    denominator = 1
    for mask in range(1 << len(primes)):
        squarefree = 1
        bits = 0
        for i, p in enumerate(primes):
            if mask >> i & 1:
                squarefree *= p
                bits += 1
        d = n // squarefree
        term = a**d - b**d
        if bits % 2 == 0:
            numerator *= term
        else:
            denominator *= term
    if denominator == 0 or numerator % denominator != 0:
        raise AssertionError(f"inexact cyclotomic division for ({n}, {a}, {b})")
    return numerator // denominator


# Effort profile for primitive-divisor searches: cyclotomic values exceed
# the default factorize size gate by design, so lift it but keep rho capped.
_PRIMITIVE_EFFORT = FactorEffort(max_bits=None, rho_iterations=1 << 20, rho_restarts=24)

# Scan primes of the form 1 + n*i up to this value before falling back to
# general factoring; primitive primes are always = 1 (mod n).
_PROGRESSION_LIMIT = 1 << 21


def _is_primitive(a: int, b: int, n: int, p: int) -> bool:
    """p divides a^n - b^n but no a^k - b^k for a proper divisor k of n
    (equivalent to primitivity over all k < n once p | a^n - b^n)."""
    if (pow(a, n, p) - pow(b, n, p)) % p != 0:
        return False
    for k in _divisors(n):
        if k < n and (pow(a, k, p) - pow(b, k, p)) % p == 0:
            return False
    return True


def primitive_divisor(
    a: int, b: int, n: int, effort: FactorEffort = _PRIMITIVE_EFFORT
) -> int | None:
    """Least prime dividing a^n - b^n but no earlier a^k - b^k, or None.

    Requires nonzero coprime a, b with a > b and a + b > 0 (normalize
    first).  None occurs exactly when no primitive prime exists; if the
    factoring effort runs out a FactorizationError escapes instead of a
    wrong None.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if a == 0 or b == 0:
        raise ValueError("a and b must be nonzero")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) must be coprime")
    if a <= b or a + b <= 0:
        raise ValueError(f"normalize first: need a > b and a + b > 0, got ({a}, {b})")

    if n == 1:
        c = a - b
        if c == 1:
            return None
        return factorize(c, effort).factors[0][0]
    if n == 2:
        for p, _ in factorize(a + b, effort):
            if (a - b) % p != 0:
                return p
        return None

    c = abs(cyclotomic_value(n, a, b))
    # strip the one possible non-primitive ("intrinsic") prime: the largest
    # prime factor of n
    q = factorize(n).largest_prime()
    while c % q == 0:
        c //= q
    # every remaining prime factor is = 1 (mod n); scan that progression in
    # ascending order so the first hit is the least
    p = n + 1
    while c > 1 and p * p <= c and p <= _PROGRESSION_LIMIT:
        if c % p == 0:
            while c % p == 0:
                c //= p
            if _is_primitive(a, b, n, p):
                return p
        p += n
    if c == 1:
        return None
    if p * p > c or is_prime(c):
        return c if _is_primitive(a, b, n, c) else None
    # large composite cofactor: general factoring under the effort cap
    for p, _ in factorize(c, effort):
        if _is_primitive(a, b, n, p):
            return p
    return None
