"""Exact integer primitives: modular powers, primality, factorization, valuations.

Everything here is a pure function of its arguments; internal randomness
(the rho factoring method) is seeded deterministically per input, so
results are reproducible and safe under concurrent use.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from math import isqrt

__all__ = [
    "DEFAULT_EFFORT",
    "FactorEffort",
    "FactorizationError",
    "PrimeFactorization",
    "factorize",
    "get_default_effort",
    "is_prime",
    "mobius",
    "modpow_signed",
    "primes_upto",
    "set_default_effort",
    "v_int",
]


class FactorizationError(Exception):
    """Factoring gave up inside the configured effort bound.

    ``partial`` maps the prime factors found so far to their exponents;
    ``cofactor`` is the part left unfactored (composite, or refused
    outright because the input exceeded the size gate).
    """

    def __init__(self, message: str, partial: dict[int, int], cofactor: int):
        super().__init__(message)
        self.partial = dict(partial)
        self.cofactor = cofactor


@dataclass(frozen=True)
class FactorEffort:
    """Effort bounds for :func:`factorize`.

    ``max_bits`` rejects inputs outright (None disables the gate);
    ``trial_bound`` limits trial division; each rho attempt runs at most
    ``rho_iterations`` steps and there are at most ``rho_restarts``
    deterministic retries per composite.
    """

    max_bits: int | None = 72
    trial_bound: int = 10_000
    rho_iterations: int = 1 << 18
    rho_restarts: int = 24

    def scaled(self, factor: float) -> "FactorEffort":
        """A copy with the rho iteration budget scaled by ``factor``."""
        return FactorEffort(
            max_bits=self.max_bits,
            trial_bound=self.trial_bound,
            rho_iterations=max(1, int(self.rho_iterations * factor)),
            rho_restarts=self.rho_restarts,
        )


DEFAULT_EFFORT = FactorEffort()
_default_effort = DEFAULT_EFFORT


def get_default_effort() -> FactorEffort:
    return _default_effort


def set_default_effort(effort: FactorEffort) -> None:
    """Replace the process-wide default effort (a CLI startup action)."""
    global _default_effort
    _default_effort = effort


# Grow-on-demand prime sieve shared by the whole package.
_sieve_primes: list[int] = []
_sieve_limit = 0


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, from a cached sieve that grows on demand."""
    global _sieve_primes, _sieve_limit
    if limit > _sieve_limit:
        new_limit = max(limit, 2 * _sieve_limit, 1 << 16)
        sieve = bytearray([1]) * (new_limit + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, isqrt(new_limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = b"\x00" * len(range(p * p, new_limit + 1, p))
        _sieve_primes = [i for i, flag in enumerate(sieve) if flag]
        _sieve_limit = new_limit
    return _sieve_primes[: bisect_right(_sieve_primes, limit)]


def modpow_signed(base: int, exp: int, modulus: int) -> int:
    """base**exp reduced into [0, modulus), exact for any operand size.

    Negative bases follow the sign convention of the canonical residue,
    e.g. (-1)**3 mod 5 == 4.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Strong-pseudoprime witnesses: the first 12 primes decide primality for
# every n < 3_317_044_064_679_887_385_961_981 (> 2^64).  Beyond that the
# extra witnesses make a false positive astronomically unlikely.
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_EXTRA = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic for all n < ~3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    bases = _SMALL_PRIMES
    if n >= _MR_DETERMINISTIC_LIMIT:
        bases = _SMALL_PRIMES + _MR_EXTRA
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeFactorization:
    """Canonical factorization: (prime, exponent) pairs, primes ascending."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 1
        for p, k in self.factors:
            if p <= prev:
                raise ValueError(f"primes not strictly ascending at {p}")
            if k < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {k}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def value(self) -> int:
        out = 1
        for p, k in self.factors:
            out *= p**k
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def largest_prime(self) -> int | None:
        return self.factors[-1][0] if self.factors else None


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _brent_rho(n: int, seed: int, max_iterations: int) -> int | None:
    """One Brent-cycle attempt at a nontrivial factor of odd composite n."""
    from math import gcd

    rng = random.Random(seed)
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    steps = 0
    while g == 1 and steps < max_iterations:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        steps += r
        r <<= 1
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
    if 1 < g < n:
        return g
    return None


def factorize(n: int, effort: FactorEffort | None = None) -> PrimeFactorization:
    """Canonical prime factorization of n >= 1; n == 1 yields the empty list.

    Trial division by sieved primes, then deterministic-retry Brent rho.
    Raises :class:`FactorizationError` (carrying the unfactored cofactor)
    instead of running past the effort bound.
    """
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    if effort is None:
        effort = _default_effort
    if effort.max_bits is not None and n.bit_length() > effort.max_bits:
        raise FactorizationError(
            f"{n} exceeds the {effort.max_bits}-bit effort gate", {}, n
        )
    found: dict[int, int] = {}
    m = n
    for p in primes_upto(effort.trial_bound):
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    trial_ceiling = effort.trial_bound * effort.trial_bound
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m < trial_ceiling or is_prime(m):
            # survived trial division below sqrt, or passed the primality test
            found[m] = found.get(m, 0) + 1
            continue
        for k in primes_upto(m.bit_length()):
            r = _iroot(m, k)
            if r**k == m:
                stack.extend([r] * k)
                break
        else:
            divisor = None
            for attempt in range(effort.rho_restarts):
                divisor = _brent_rho(m, (n << 8) ^ attempt, effort.rho_iterations)
                if divisor is not None:
                    break
            if divisor is None:
                cofactor = m
                for left in stack:
                    cofactor *= left
                raise FactorizationError(
                    f"rho effort exhausted on {m}", found, cofactor
                )
            stack.extend([divisor, m // divisor])
    result = PrimeFactorization(tuple(sorted(found.items())))
    if result.value != n:
        raise AssertionError(f"factorization of {n} does not multiply back")
    return result


def mobius(n: int, effort: FactorEffort | None = None) -> int:
    """Moebius function: 0 on squareful n, else (-1)^(number of prime factors)."""
    fac = factorize(n, effort)
    if any(k >= 2 for _, k in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def v_int(n: int, p: int) -> int:
    """Largest e with p^e dividing n; rejects n == 0 (valuation infinite)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
