"""Core set logic for coprime pairs: membership, extensions, certificates,
and bounded enumeration of {n : n^j divides a^n - b^n}.

Enumeration is a worklist search rooted at 1.  Children of a member n are
found by scanning candidate primes p <= bound/n directly (one modular
power decides whether p divides a^n - b^n), never by factoring a^n - b^n.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd

from .arith import FactorizationError, factorize, primes_upto
from .valuation import e2_lcm, power_diff_valuation

__all__ = [
    "CertStep",
    "Certificate",
    "EnumTree",
    "Enumeration",
    "ExtensionEntry",
    "ExtensionSet",
    "Instance",
    "NonMemberWitness",
    "TreeEdge",
    "brute_enumerate",
    "certify",
    "enumerate_members",
    "extensions",
    "member",
    "parent",
]


@dataclass(frozen=True)
class Instance:
    """A query (a, b, j) for the set {n >= 1 : n^j divides a^n - b^n}.

    This layer requires gcd(a, b) = 1; reduce other pairs through the
    ``general`` module.  a = +/-b is tolerated only as a documented
    degenerate mode (see ``member`` / ``enumerate_members``).
    """

    a: int
    b: int
    j: int = 1

    def __post_init__(self):
        if self.j < 1:
            raise ValueError(f"j must be >= 1, got {self.j}")
        if self.a == 0 and self.b == 0:
            raise ValueError("a and b cannot both be 0")
        if gcd(self.a, self.b) != 1:
            raise ValueError(
                f"gcd({self.a}, {self.b}) > 1: use the general module for "
                "non-coprime pairs"
            )

    @property
    def degenerate(self) -> bool:
        return self.a == self.b or self.a == -self.b


@dataclass(frozen=True)
class ExtensionEntry:
    """A prime p by which a member n may be extended: n * p^k stays in the
    set exactly for 1 <= k <= k_max (k_max None means unbounded, j = 1)."""

    p: int
    e_p: int
    k_max: int | None


@dataclass(frozen=True)
class ExtensionSet:
    n: int
    entries: tuple[ExtensionEntry, ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(entry.p for entry in self.entries)


@dataclass(frozen=True)
class CertStep:
    """One link of a membership certificate: appending p^k to the partial
    product n_i requires p^required_exponent to divide a^{n_i} - b^{n_i}
    (for p = 2 and j >= 2: lcm(a-b, a+b)); witnessed_valuation is the
    exact exponent found."""

    p: int
    k: int
    n_i: int
    required_exponent: int
    witnessed_valuation: int

    @property
    def holds(self) -> bool:
        return self.witnessed_valuation >= self.required_exponent


@dataclass(frozen=True)
class Certificate:
    n: int
    chain: tuple[CertStep, ...]

    def verify(self, inst: Instance) -> bool:
        """Re-check every step of the chain independently."""
        if self.n < 1 or any(not step.holds for step in self.chain):
            return False
        running = 1
        for step in self.chain:
            if step.n_i != running:
                return False
            witnessed = _step_valuation(inst, step.p, running)
            if witnessed != step.witnessed_valuation:
                return False
            if witnessed < _required_exponent(inst.j, step.k):
                return False
            running *= step.p**step.k
        return running == self.n


@dataclass(frozen=True)
class NonMemberWitness:
    """First failing certificate step: p^required_exponent does not divide
    a^{n_i} - b^{n_i}, so n cannot belong to the set."""

    n: int
    p: int
    k: int
    n_i: int
    required_exponent: int
    witnessed_valuation: int


@dataclass(frozen=True)
class TreeEdge:
    src: int
    p: int
    k: int
    dst: int
    spanning: bool


@dataclass(frozen=True)
class EnumTree:
    """Element graph of an enumeration: edges n -> n * p^k labeled by p,
    with the spanning-tree edges (largest-prime rule) marked."""

    nodes: tuple[int, ...]
    edges: tuple[TreeEdge, ...]

    def spanning_parent(self, n: int) -> int | None:
        for edge in self.edges:
            if edge.dst == n and edge.spanning:
                return edge.src
        return None


@dataclass(frozen=True)
class Enumeration:
    members: tuple[int, ...]
    tree: EnumTree | None
    complete: bool
    note: str = ""


def _member_direct(a: int, b: int, j: int, n: int) -> bool:
    """Direct test: (a^n - b^n) mod n^j by modular exponentiation."""
    m = n**j
    return (pow(a, n, m) - pow(b, n, m)) % m == 0


def member(inst: Instance, n: int) -> bool:
    """True iff n^j divides a^n - b^n.

    Decided per prime of n from exact valuations; an assert cross-checks
    the direct modular test (route both ways, agree always).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if inst.degenerate:
        return _member_direct(inst.a, inst.b, inst.j, n)
    result = True
    for p, k in factorize(n):
        if inst.j * k > power_diff_valuation(inst.a, inst.b, n, p):
            result = False
            break
    assert result == _member_direct(inst.a, inst.b, inst.j, n)
    return result


def extensions(inst: Instance, n: int, prime_bound: int) -> ExtensionSet:
    """All primes p <= prime_bound extending the member n, with their k_max.

    Candidates are scanned directly (p divides a^n - b^n iff the order of
    a/b mod p divides n, decided by one modular power), so a^n - b^n is
    never factored.  n * p^k is a member exactly for the returned pairs.
    """
    if prime_bound < 2:
        raise ValueError(f"prime_bound must be >= 2, got {prime_bound}")
    if inst.degenerate:
        raise ValueError("extension sets are undefined for a = +/-b")
    if not member(inst, n):
        raise ValueError(f"{n} is not a member for (a={inst.a}, b={inst.b}, j={inst.j})")
    a, b, j = inst.a, inst.b, inst.j
    n_fac = factorize(n).as_dict()
    entries = []
    for p in primes_upto(prime_bound):
        if p == 2:
            if (a - b) % 2:
                continue
            # j >= 2 doubling is governed by the power of 2 in
            # lcm(a^n - b^n, a^n + b^n), not in a^n - b^n itself
            e_p = e2_lcm(a, b, n) if j >= 2 else power_diff_valuation(a, b, n, 2)
        else:
            if a % p == 0 or b % p == 0:
                continue
            if pow(a, n, p) != pow(b, n, p):
                continue
            e_p = power_diff_valuation(a, b, n, p)
        k_p = n_fac.get(p, 0)
        if j == 1:
            entries.append(ExtensionEntry(p, e_p, None))
        else:
            k_max = (e_p - j * k_p) // (j - 1)
            if k_max >= 1:
                entries.append(ExtensionEntry(p, e_p, k_max))
    return ExtensionSet(n, tuple(entries))


def parent(n: int) -> int | None:
    """n divided by its largest prime factor; None for the root n = 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return None
    return n // factorize(n).largest_prime()


def _required_exponent(j: int, k: int) -> int:
    return 1 if j == 1 else (j - 1) * k


def _step_valuation(inst: Instance, p: int, n_i: int) -> int:
    # the p = 2 step of a j >= 2 chain is judged against lcm(a-b, a+b)
    if p == 2 and inst.j >= 2:
        return e2_lcm(inst.a, inst.b, n_i)
    return power_diff_valuation(inst.a, inst.b, n_i, p)


def certify(inst: Instance, n: int) -> Certificate | NonMemberWitness:
    """Build the prime-chain certificate for n, or the first failing step.

    The chain follows the ascending factorization p_1^{k_1} ... p_r^{k_r}
    of n with partial products n_1 = 1, n_{i+1} = n_i * p_i^{k_i}; step i
    holds iff p_i^{required} divides a^{n_i} - b^{n_i} (p_1 = 2 with
    j >= 2 checks lcm(a-b, a+b) instead).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if inst.degenerate:
        raise ValueError("certificates are undefined for a = +/-b")
    chain = []
    running = 1
    for p, k in factorize(n):
        required = _required_exponent(inst.j, k)
        witnessed = _step_valuation(inst, p, running)
        step = CertStep(p, k, running, required, witnessed)
        if not step.holds:
            return NonMemberWitness(n, p, k, running, required, witnessed)
        chain.append(step)
        running *= p**k
    return Certificate(n, tuple(chain))


def brute_enumerate(inst: Instance, bound: int) -> list[int]:
    """Oracle enumeration: scan every n <= bound with the direct modular test."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    a, b, j = inst.a, inst.b, inst.j
    return [n for n in range(1, bound + 1) if _member_direct(a, b, j, n)]


def enumerate_members(inst: Instance, bound: int) -> Enumeration:
    """Exactly the members <= bound, with the element graph and its
    spanning tree (largest-prime rule).

    Worklist search from 1; a node n is expanded through ``extensions``
    with prime_bound = bound // n, and nodes reachable by several edges
    are expanded once.  a = b is refused (every n qualifies); a = -b is
    served by a direct scan and carries no tree.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if inst.a == inst.b:
        raise ValueError(
            f"a = b = {inst.a}: a^n - b^n = 0, so every n divides it; "
            "refusing the trivial infinite enumeration"
        )
    if inst.a == -inst.b:
        members = tuple(brute_enumerate(inst, bound))
        return Enumeration(
            members, None, True, "degenerate a = -b: direct scan, no tree"
        )

    visited = {1}
    largest = {1: 1}
    heap = [1]
    members = []
    edges = []
    complete = True
    note = ""
    while heap:
        n = heapq.heappop(heap)
        members.append(n)
        if bound // n < 2:
            continue
        try:
            ext = extensions(inst, n, bound // n)
        except FactorizationError as exc:
            complete = False
            note = f"stopped expanding {n}: {exc}"
            continue
        for entry in ext.entries:
            child = n * entry.p
            k = 1
            while child <= bound and (entry.k_max is None or k <= entry.k_max):
                spanning = k == 1 and entry.p >= largest[n]
                edges.append(TreeEdge(n, entry.p, k, child, spanning))
                if child not in visited:
                    visited.add(child)
                    largest[child] = max(largest[n], entry.p)
                    heapq.heappush(heap, child)
                k += 1
                child *= entry.p
    members.sort()
    tree = EnumTree(tuple(members), tuple(edges))
    return Enumeration(tuple(members), tree, complete, note)
