"""Sets of integers n whose j-th power divides a^n - b^n (or a^n + b^n).

The library decides membership, certifies it with verifiable prime-chain
witnesses, enumerates all members up to a bound, and classifies whole
sets as finite or infinite, working with p-adic valuations and
multiplicative orders instead of the astronomically large numbers
a^n - b^n themselves.
"""

from .arith import (
    DEFAULT_EFFORT,
    FactorEffort,
    FactorizationError,
    PrimeFactorization,
    factorize,
    is_prime,
    mobius,
    modpow_signed,
    v_int,
)
from .classify import Classification, Verdict, classify, cyclotomic_value, primitive_divisor
from .divset import (
    Certificate,
    CertStep,
    EnumTree,
    Enumeration,
    ExtensionEntry,
    ExtensionSet,
    Instance,
    NonMemberWitness,
    TreeEdge,
    brute_enumerate,
    certify,
    enumerate_members,
    extensions,
    member,
    parent,
)
from .general import (
    GcdSplit,
    K_constant,
    enumerate_a0,
    enumerate_general,
    gcd_split,
    in_Fa,
    member_general,
    plus_set,
)
from .valuation import RatioOrder, ValuationProfile, e2_lcm, power_diff_valuation, ratio_order

__all__ = [
    "Certificate",
    "CertStep",
    "Classification",
    "DEFAULT_EFFORT",
    "EnumTree",
    "Enumeration",
    "ExtensionEntry",
    "ExtensionSet",
    "FactorEffort",
    "FactorizationError",
    "GcdSplit",
    "Instance",
    "K_constant",
    "NonMemberWitness",
    "PrimeFactorization",
    "RatioOrder",
    "TreeEdge",
    "ValuationProfile",
    "Verdict",
    "brute_enumerate",
    "certify",
    "classify",
    "cyclotomic_value",
    "e2_lcm",
    "enumerate_a0",
    "enumerate_general",
    "enumerate_members",
    "extensions",
    "factorize",
    "gcd_split",
    "in_Fa",
    "is_prime",
    "member",
    "member_general",
    "mobius",
    "modpow_signed",
    "parent",
    "plus_set",
    "power_diff_valuation",
    "primitive_divisor",
    "ratio_order",
    "v_int",
]

__version__ = "0.1.0"
