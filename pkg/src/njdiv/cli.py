"""Command-line front end exposing every operation with machine-readable output.

Formats: plain text, JSON (stable field names "query", "members",
"complete", "certificate"), OEIS b-file ("k a(k)" per line, 1-indexed),
and DOT for the enumeration tree.  Exit status: 0 success, 1 usage error,
2 factoring effort exceeded (partial output flagged).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import gcd

from .arith import DEFAULT_EFFORT, FactorEffort, FactorizationError, set_default_effort
from .classify import classify
from .divset import (
    Certificate,
    Instance,
    brute_enumerate,
    certify,
    enumerate_members,
    extensions,
    member,
)
from .general import enumerate_a0, enumerate_general, member_general, plus_set
from .report import render_tree, to_dot

__all__ = ["build_parser", "main", "run"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="njdiv",
        description=(
            "Work with the sets of integers n for which n^j divides "
            "a^n - b^n (subcommand 'plus': a^n + b^n)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *, n=False, bound=False, formats=("text", "json")):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--a", type=int, required=True, help="first base (any sign)")
        cmd.add_argument("--b", type=int, required=True, help="second base (any sign)")
        cmd.add_argument("--j", type=int, default=1, help="power of n to divide by (default 1)")
        if n:
            cmd.add_argument("--n", type=int, required=True, help="candidate n")
        if bound:
            cmd.add_argument("--bound", type=int, required=True, help="enumerate n <= bound")
        cmd.add_argument(
            "--format",
            choices=formats,
            default=formats[0],
            help=f"output format (default {formats[0]})",
        )
        cmd.add_argument(
            "--effort",
            type=int,
            default=DEFAULT_EFFORT.rho_iterations,
            help="cap on rho iterations per factoring attempt "
            f"(default {DEFAULT_EFFORT.rho_iterations})",
        )
        return cmd

    add("member", "decide whether n^j divides a^n - b^n", n=True)
    add("certify", "membership certificate (prime chain) or refutation", n=True)
    ext = add("extensions", "primes p with n*p^k still a member", n=True)
    ext.add_argument(
        "--prime-bound",
        type=int,
        default=10_000,
        help="scan primes up to this bound (default 10000; the enumerate "
        "subcommand uses bound//n at every node)",
    )
    add(
        "enumerate",
        "all members up to --bound",
        bound=True,
        formats=("text", "json", "bfile"),
    )
    tree = add(
        "tree",
        "element graph up to --bound as DOT (spanning tree solid, other "
        "edges dashed)",
        bound=True,
        formats=("dot",),
    )
    tree.add_argument(
        "--render",
        metavar="FILE",
        help="also draw the tree with matplotlib into FILE (.png/.svg/.pdf)",
    )
    cls = add("classify", "finite/infinite classification of the whole set")
    cls.add_argument(
        "--bound",
        type=int,
        default=10_000,
        help="members attached to a conjectural j >= 3 verdict (default 10000)",
    )
    add(
        "plus",
        "members for a^n + b^n up to --bound",
        bound=True,
        formats=("text", "json", "bfile"),
    )
    add(
        "a0",
        "members for b = 0 (n whose primes divide a) up to --bound",
        bound=True,
        formats=("text", "json", "bfile"),
    )
    add(
        "oracle",
        "brute-force scan up to --bound (cross-check for enumerate)",
        bound=True,
        formats=("text", "json", "bfile"),
    )
    return parser


def _query(args: argparse.Namespace) -> dict:
    query = {"a": args.a, "b": args.b, "j": args.j}
    for key in ("n", "bound", "prime_bound"):
        if getattr(args, key, None) is not None:
            query[key] = getattr(args, key)
    return query


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _emit_members(args, members, complete: bool, elapsed: float, extra: dict | None = None) -> int:
    if args.format == "json":
        payload = {
            "query": _query(args),
            "members": list(members),
            "complete": complete,
            "elapsed_seconds": round(elapsed, 6),
        }
        if extra:
            payload.update(extra)
        _emit_json(payload)
    elif args.format == "bfile":
        for index, value in enumerate(members, start=1):
            print(f"{index} {value}")
    else:
        print(" ".join(str(m) for m in members))
    if not complete:
        print("warning: enumeration incomplete (effort exceeded)", file=sys.stderr)
        return 2
    return 0


def _chain_json(cert: Certificate) -> list[dict]:
    return [
        {
            "p": step.p,
            "k": step.k,
            "n_i": step.n_i,
            "required_exponent": step.required_exponent,
            "witnessed_valuation": step.witnessed_valuation,
        }
        for step in cert.chain
    ]


def _instance(args) -> Instance:
    return Instance(args.a, args.b, args.j)


def _cmd_member(args) -> int:
    t0 = time.perf_counter()
    if gcd(args.a, args.b) == 1 and not (args.a == args.b or args.a == -args.b):
        verdict = member(_instance(args), args.n)
    else:
        verdict = member_general(args.a, args.b, args.j, args.n)
    if args.format == "json":
        _emit_json(
            {
                "query": _query(args),
                "member": verdict,
                "complete": True,
                "elapsed_seconds": round(time.perf_counter() - t0, 6),
            }
        )
    else:
        print("true" if verdict else "false")
    return 0


def _cmd_certify(args) -> int:
    t0 = time.perf_counter()
    result = certify(_instance(args), args.n)
    elapsed = time.perf_counter() - t0
    if isinstance(result, Certificate):
        if args.format == "json":
            _emit_json(
                {
                    "query": _query(args),
                    "member": True,
                    "certificate": _chain_json(result),
                    "complete": True,
                    "elapsed_seconds": round(elapsed, 6),
                }
            )
        else:
            print(f"member: {args.n}")
            for step in result.chain:
                print(
                    f"  p={step.p} k={step.k} n_i={step.n_i} "
                    f"need {step.p}^{step.required_exponent} "
                    f"witnessed {step.p}^{step.witnessed_valuation}"
                )
    else:
        if args.format == "json":
            _emit_json(
                {
                    "query": _query(args),
                    "member": False,
                    "certificate": None,
                    "witness": {
                        "p": result.p,
                        "n_i": result.n_i,
                        "required_exponent": result.required_exponent,
                        "witnessed_valuation": result.witnessed_valuation,
                    },
                    "complete": True,
                    "elapsed_seconds": round(elapsed, 6),
                }
            )
        else:
            print(f"non-member: {args.n}")
            print(
                f"  fails at p={result.p}: need {result.p}^{result.required_exponent} "
                f"dividing the step at n_i={result.n_i}, "
                f"found {result.p}^{result.witnessed_valuation}"
            )
    return 0


def _cmd_extensions(args) -> int:
    t0 = time.perf_counter()
    ext = extensions(_instance(args), args.n, args.prime_bound)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        _emit_json(
            {
                "query": _query(args),
                "extensions": [
                    {"p": e.p, "e_p": e.e_p, "k_max": e.k_max} for e in ext.entries
                ],
                "complete": True,
                "elapsed_seconds": round(elapsed, 6),
            }
        )
    else:
        for e in ext.entries:
            k_max = "*" if e.k_max is None else e.k_max
            print(f"p={e.p} e={e.e_p} k_max={k_max}")
    return 0


def _cmd_enumerate(args) -> int:
    t0 = time.perf_counter()
    result = enumerate_general(args.a, args.b, args.j, args.bound)
    return _emit_members(args, result.members, result.complete, time.perf_counter() - t0)


def _cmd_tree(args) -> int:
    result = enumerate_members(_instance(args), args.bound)
    if result.tree is None:
        print("error: no tree for a degenerate pair (a = -b)", file=sys.stderr)
        return 1
    sys.stdout.write(to_dot(result.tree))
    if args.render:
        render_tree(
            result.tree,
            args.render,
            title=f"n^{args.j} | {args.a}^n - ({args.b})^n, n <= {args.bound}",
        )
        print(f"rendered tree to {args.render}", file=sys.stderr)
    return 0 if result.complete else 2


def _cmd_classify(args) -> int:
    t0 = time.perf_counter()
    result = classify(args.a, args.b, args.j, bound=args.bound)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        _emit_json(
            {
                "query": _query(args),
                "verdict": result.verdict.value,
                "reason": result.reason,
                "members": None if result.members is None else list(result.members),
                "exhaustive": result.exhaustive,
                "prime_support": None
                if result.prime_support is None
                else list(result.prime_support),
                "complete": True,
                "elapsed_seconds": round(elapsed, 6),
            }
        )
    else:
        text = result.verdict.value
        if result.members is not None and result.exhaustive:
            text += " {" + ",".join(str(m) for m in result.members) + "}"
        text += f" (Theorem: {result.reason})"
        print(text)
    return 0


def _cmd_plus(args) -> int:
    t0 = time.perf_counter()
    result = plus_set(args.a, args.b, args.j, args.bound)
    extra = {}
    if result.classification is not None:
        extra["classification"] = {
            "verdict": result.classification.verdict.value,
            "reason": result.classification.reason,
        }
    return _emit_members(
        args, result.members, result.complete, time.perf_counter() - t0, extra
    )


def _cmd_a0(args) -> int:
    t0 = time.perf_counter()
    members = enumerate_a0(args.a, args.j, args.bound)
    return _emit_members(args, members, True, time.perf_counter() - t0)


def _cmd_oracle(args) -> int:
    t0 = time.perf_counter()
    members = brute_enumerate(_instance(args), args.bound)
    return _emit_members(args, members, True, time.perf_counter() - t0)


_COMMANDS = {
    "member": _cmd_member,
    "certify": _cmd_certify,
    "extensions": _cmd_extensions,
    "enumerate": _cmd_enumerate,
    "tree": _cmd_tree,
    "classify": _cmd_classify,
    "plus": _cmd_plus,
    "a0": _cmd_a0,
    "oracle": _cmd_oracle,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv and execute; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags, 0 on --help
        return 0 if exc.code == 0 else 1
    set_default_effort(
        FactorEffort(
            max_bits=DEFAULT_EFFORT.max_bits,
            trial_bound=DEFAULT_EFFORT.trial_bound,
            rho_iterations=args.effort,
            rho_restarts=DEFAULT_EFFORT.rho_restarts,
        )
    )
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FactorizationError as exc:
        print(f"error: factoring effort exceeded: {exc}", file=sys.stderr)
        print(f"unfactored cofactor: {exc.cofactor}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
