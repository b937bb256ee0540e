"""Arbitrary input pairs: b = 0, gcd(a, b) > 1, and the a^n + b^n sets.

Everything reduces to the coprime core: write n = G * n1 with G carrying
exactly the primes of g = gcd(a, b); then n qualifies iff n1 qualifies
for the reduced pair raised to the G-th power, up to a finite exceptional
set that is settled here by direct verification of every candidate.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .arith import factorize, v_int
from .classify import Classification, Verdict
from .divset import Enumeration, Instance, enumerate_members
from .valuation import power_diff_valuation

__all__ = [
    "GcdSplit",
    "K_constant",
    "PlusSet",
    "enumerate_a0",
    "enumerate_general",
    "gcd_split",
    "in_Fa",
    "member_general",
    "plus_set",
]


@dataclass(frozen=True)
class GcdSplit:
    """n = G * n1 where G collects exactly the primes of g = gcd(a, b)."""

    g: int
    a1: int
    b1: int
    G: int
    n1: int


def gcd_split(a: int, b: int, n: int) -> GcdSplit:
    """Split n against g = gcd(a, b); gcd(n1, g) = 1 and n = G * n1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    g = gcd(a, b)
    if g == 0:
        raise ValueError("a and b cannot both be 0")
    G, m = 1, n
    while (d := gcd(m, g)) > 1:
        G *= d
        m //= d
    return GcdSplit(g, a // g, b // g, G, m)


def in_Fa(n: int, a: int) -> bool:
    """True iff every prime factor of n divides a (n = 1 qualifies)."""
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    while n > 1:
        d = gcd(n, a)
        if d == 1:
            return False
        while n % d == 0:
            n //= d
    return True


def _smooth_numbers(primes: list[int], bound: int) -> list[int]:
    """Ascending integers <= bound whose prime factors lie in ``primes``."""
    out = []
    heap = [1]
    seen = {1}
    while heap:
        m = heapq.heappop(heap)
        out.append(m)
        for p in primes:
            child = m * p
            if child <= bound and child not in seen:
                seen.add(child)
                heapq.heappush(heap, child)
    return out


def K_constant(a: int, j: int) -> int:
    """Least K >= 1 with K / p1^K <= min(exponents of a) / j, p1 the
    smallest prime of a; beyond total exponent K the b = 0 membership
    inequalities hold automatically."""
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    if j < 3:
        raise ValueError(f"K_constant applies to j >= 3, got {j}")
    fac = factorize(a)
    p1 = fac.factors[0][0]
    a_min = min(k for _, k in fac)
    K = 1
    while K * j > a_min * p1**K:
        K += 1
    return K


def enumerate_a0(a: int, j: int, bound: int) -> list[int]:
    """Members for b = 0: the n <= bound whose primes all divide a, minus
    (for j >= 3 only) the finitely many n violating j * v_q(n) <= n * v_q(a)."""
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    if j < 1 or bound < 1:
        raise ValueError("j and bound must be >= 1")
    fac = factorize(a).as_dict()
    primes = sorted(fac)
    smooth = _smooth_numbers(primes, bound)
    if j <= 2:
        return smooth
    return [
        n for n in smooth if all(j * v_int(n, q) <= n * e for q, e in fac.items())
    ]


def _member_direct_general(a: int, b: int, j: int, n: int) -> bool:
    m = n**j
    return (pow(a, n, m) - pow(b, n, m)) % m == 0


def member_general(a: int, b: int, j: int, n: int) -> bool:
    """True iff n^j divides a^n - b^n, for any integer pair (a, b).

    Per prime power q^k of n the requirement is
    j*k <= n*v_q(g) + v_q(a1^n - b1^n) with g = gcd(a, b), a1 = a/g,
    b1 = b/g; the valuation term comes from the coprime engine.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if a == b:
        return True  # zero difference: everything divides 0
    if a == -b:
        # a^n - b^n = 0 for even n, 2a^n for odd n
        result = n % 2 == 0 or all(
            j * k <= v_int(2, q) + n * v_int(a, q) for q, k in factorize(n)
        )
        assert result == _member_direct_general(a, b, j, n)
        return result
    g = gcd(a, b)
    a1, b1 = a // g, b // g
    result = True
    for q, k in factorize(n):
        need = j * k
        have = n * v_int(g, q) if g % q == 0 else 0
        if have < need:
            have += power_diff_valuation(a1, b1, n, q)
        if have < need:
            result = False
            break
    assert result == _member_direct_general(a, b, j, n)
    return result


def enumerate_general(a: int, b: int, j: int, bound: int) -> Enumeration:
    """Exactly the members n <= bound for an arbitrary pair (a, b).

    Coprime pairs delegate to the worklist search.  Otherwise iterate G
    over the g-smooth numbers, enumerate coprime-to-g members n1 <= bound/G
    for the reduced pair raised to the G-th power, and confirm every
    candidate G * n1 directly (this settles the finite exceptional set).
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if a == b:
        raise ValueError(
            f"a = b = {a}: every n is a member; refusing the trivial enumeration"
        )
    g = gcd(a, b)
    if g == 1:
        return enumerate_members(Instance(a, b, j), bound)
    if b == 0 or a == 0:
        members = enumerate_a0(max(abs(a), abs(b)), j, bound)
        return Enumeration(tuple(members), None, True)
    if a == -b:
        members = [n for n in range(1, bound + 1) if member_general(a, b, j, n)]
        return Enumeration(
            tuple(members), None, True, "degenerate a = -b: direct scan"
        )

    a1, b1 = a // g, b // g
    g_primes = [p for p, _ in factorize(g)]
    members: list[int] = []
    complete = True
    notes: list[str] = []
    for G in _smooth_numbers(g_primes, bound):
        inner_bound = bound // G
        if inner_bound < 1:
            continue
        if inner_bound == 1:
            candidates = [1]
        else:
            inner = enumerate_members(Instance(a1**G, b1**G, j), inner_bound)
            complete = complete and inner.complete
            if inner.note:
                notes.append(f"G={G}: {inner.note}")
            candidates = [n1 for n1 in inner.members if gcd(n1, g) == 1]
        for n1 in candidates:
            n = G * n1
            if member_general(a, b, j, n):
                members.append(n)
    members.sort()
    return Enumeration(tuple(members), None, complete, "; ".join(notes))


@dataclass(frozen=True)
class PlusSet:
    """Bounded enumeration of {n : n^j divides a^n + b^n}, with the
    finite/infinite classification when j is 1 or 2."""

    members: tuple[int, ...]
    classification: Classification | None
    complete: bool


def _plus_direct(a: int, b: int, j: int, n: int) -> bool:
    m = n**j
    return (pow(a, n, m) + pow(b, n, m)) % m == 0


def _normalize_plus(a: int, b: int) -> tuple[int, int]:
    # a^n + b^n is invariant under swapping and under negating both
    for x, y in ((a, b), (b, a), (-a, -b), (-b, -a)):
        if x > 0 and x >= abs(y):
            return x, y
    raise AssertionError(f"no plus-normal form for ({a}, {b})")


def _is_one_or_power_of_two(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


def _classify_plus(A: int, B: int, j: int) -> Classification | None:
    """Finiteness of the plus-set for the normalized coprime pair (A, B)."""
    if j > 2:
        return None
    if j == 2:
        if _is_one_or_power_of_two(A + B):
            return Classification(
                Verdict.FINITE_EXPLICIT,
                "a + b is 1 or a power of 2: no odd member exceeds 1",
                members=(1,),
                exhaustive=True,
            )
        if (A, B) == (2, 1):
            return Classification(
                Verdict.FINITE_EXPLICIT,
                "ab = 2: the companion set for (a, -b) is {1, 3}",
                members=(1, 3),
                exhaustive=True,
            )
        return Classification(
            Verdict.INFINITE,
            "a + b has an odd prime factor and ab != 2",
        )
    # j == 1
    if (A, B) == (1, 1):
        return Classification(
            Verdict.FINITE_EXPLICIT,
            "a = b = 1: a^n + b^n = 2",
            members=(1, 2),
            exhaustive=True,
        )
    if (A, B) == (1, 0):
        return Classification(
            Verdict.FINITE_EXPLICIT,
            "a^n + b^n = 1",
            members=(1,),
            exhaustive=True,
        )
    if _is_one_or_power_of_two(A + B) and _is_one_or_power_of_two(A * A + B * B):
        return Classification(
            Verdict.FINITE_EXPLICIT,
            "both a + b and a^2 + b^2 are 1 or powers of 2",
            members=(1,),
            exhaustive=True,
        )
    return Classification(
        Verdict.INFINITE,
        "a + b or a^2 + b^2 has an odd prime factor",
    )


def plus_set(a: int, b: int, j: int, bound: int) -> PlusSet:
    """Members n <= bound with n^j dividing a^n + b^n.

    For coprime pairs these are the odd members for (a, -b), plus (j = 1
    only) the doubles 2*n1 of odd members for (a^2, -b^2); every output is
    re-verified by the direct modular test.  Non-coprime pairs are scanned
    directly and are always infinite.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if a == 0 and b == 0:
        raise ValueError("a and b cannot both be 0")
    g = gcd(a, b)
    if g > 1:
        members = tuple(
            n for n in range(1, bound + 1) if _plus_direct(a, b, j, n)
        )
        classification = None
        if j <= 2:
            classification = Classification(
                Verdict.INFINITE,
                "gcd > 1: contains all but finitely many g-smooth n",
            )
        return PlusSet(members, classification, True)

    A, B = _normalize_plus(a, b)
    if abs(A) == abs(B) or B == 0:
        # (1, 1), (1, -1) and (1, 0): a^n + b^n is 2, 1 +/- 1, or 1
        members = tuple(n for n in range(1, bound + 1) if _plus_direct(A, B, j, n))
        return PlusSet(members, _classify_plus(A, B, j), True)

    base = enumerate_members(Instance(A, -B, j), bound)
    members = [n for n in base.members if n % 2 and _plus_direct(A, B, j, n)]
    complete = base.complete
    if j == 1 and bound >= 2:
        doubled = enumerate_members(Instance(A * A, -B * B, 1), bound // 2)
        complete = complete and doubled.complete
        members.extend(
            2 * n1
            for n1 in doubled.members
            if n1 % 2 and _plus_direct(A, B, 1, 2 * n1)
        )
    members.sort()
    return PlusSet(tuple(members), _classify_plus(A, B, j), complete)
