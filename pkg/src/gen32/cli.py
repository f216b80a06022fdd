"""Command-line front end: construct groups, analyze them, and run the
claim suites.

Output is JSON under the versioned top-level key ``"schema": "gen32/1"``,
serialized with sorted keys and two-space indentation so that repeated
runs are byte-identical apart from the timing fields (``runtime_ms``,
``timing_ms``, ``total_runtime_ms``).

Exit codes (no others are used):

* 0 — success (including analyses whose d is reported indeterminate);
* 1 — at least one claim verdict failed;
* 2 — usage, parse, or input-format error;
* 3 — construction or suite precondition violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from typing import Callable, Sequence

from .constructions import (
    affine_group,
    agl1,
    s0_group,
    sl2,
    table1_group,
    table1_matrix_group,
    table2_group,
    table2_matrix_group,
    z_group,
)
from .errors import IndeterminateError, PreconditionError
from .gens import DEFAULT_BUDGET, DResult, d_affine, d_exact
from .permgroup import PermGroup, group_from_text, group_to_text, perm_to_text
from .transitivity import analyze
from .verify import ClaimVerdict, SUITE_NAMES, run_suite

SCHEMA = "gen32/1"

KINDS = ("s0", "affine", "table1", "table2", "sl2", "zgroup", "agl1")

_ALL_PARTS = ("table1", "table2", "lemma7", "corollary3", "genlemmas")


class UsageError(Exception):
    """Bad flag combination for a construction kind (exit code 2)."""


def _need(value: object, flag: str, kind: str) -> None:
    if value is None:
        raise UsageError(f"construction {kind!r} requires {flag}")


def _build(args: argparse.Namespace) -> tuple[str, PermGroup, Callable[[], DResult]]:
    """Resolve a construction kind and its flags into a name, the
    permutation group, and the d strategy appropriate for it (affine
    kinds shortcut through their linear stabilizer)."""
    kind = args.kind
    budget = args.budget
    if kind == "s0":
        _need(args.q, "--q", kind)
        action = args.action or "nonzero"
        group = s0_group(args.q).perm_group(action)
        return f"s0(q={args.q},action={action})", group, lambda: d_exact(group, budget)
    if kind == "sl2":
        _need(args.p, "--p", kind)
        action = args.action or "nonzero"
        group = sl2(args.p).perm_group(action)
        return f"sl2(p={args.p},action={action})", group, lambda: d_exact(group, budget)
    if kind == "affine":
        _need(args.q, "--q", kind)
        stab = s0_group(args.q)
        group = affine_group(stab)
        return f"affine(s0,q={args.q})", group, lambda: d_affine(stab, budget)
    if kind == "table1":
        _need(args.i, "--i", kind)
        if args.i not in (1, 2, 3, 4):
            raise PreconditionError(f"table1 index must be in 1..4, got {args.i}")
        group = table1_group(args.i)
        stab = table1_matrix_group(args.i)
        return f"table1(i={args.i})", group, lambda: d_affine(stab, budget)
    if kind == "table2":
        _need(args.i, "--i", kind)
        if args.i not in (1, 2):
            raise PreconditionError(f"table2 index must be 1 or 2, got {args.i}")
        group = table2_group(args.i)
        stab = table2_matrix_group(args.i)
        return f"table2(i={args.i})", group, lambda: d_affine(stab, budget)
    if kind == "zgroup":
        _need(args.m, "--m", kind)
        _need(args.n, "--n", kind)
        _need(args.r, "--r", kind)
        group = z_group(args.m, args.n, args.r)
        return f"zgroup(m={args.m},n={args.n},r={args.r})", group, lambda: d_exact(group, budget)
    if kind == "agl1":
        _need(args.q, "--q", kind)
        group = agl1(args.q)
        return f"agl1(q={args.q})", group, lambda: d_exact(group, budget)
    raise UsageError(f"unknown construction kind {kind!r}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# construct


def cmd_construct(args: argparse.Namespace) -> int:
    _, group, _ = _build(args)
    _emit(group_to_text(group), args.out)
    return 0


# ---------------------------------------------------------------------------
# analyze


def _d_payload(compute: Callable[[], DResult]) -> tuple[dict, int]:
    t0 = time.perf_counter()
    try:
        res = compute()
        payload = {
            "value": res.value,
            "method": res.method,
            "witness": [perm_to_text(g) for g in res.witness.elements],
            "witness_verified": res.witness.verified,
        }
    except (IndeterminateError, PreconditionError) as exc:
        payload = {"indeterminate": str(exc)}
    return payload, int((time.perf_counter() - t0) * 1000)


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.infile is not None:
        try:
            with open(args.infile, "r", encoding="utf-8") as fh:
                group = group_from_text(fh.read())
        except (OSError, ValueError) as exc:
            print(f"error: cannot read group from {args.infile}: {exc}", file=sys.stderr)
            return 2
        name = f"file:{os.path.basename(args.infile)}"
        budget = args.budget
        compute = lambda: d_exact(group, budget)  # noqa: E731
    else:
        if args.kind is None:
            print("error: analyze needs a construction kind or --in FILE", file=sys.stderr)
            return 2
        name, group, compute = _build(args)

    t0 = time.perf_counter()
    report = analyze(group)
    trans_ms = int((time.perf_counter() - t0) * 1000)
    if report.transitive:
        stab_order = group.point_stabilizer(0).order()
        if report.order != report.degree * stab_order:
            raise RuntimeError("internal error: orbit-stabilizer mismatch")
    d_payload, d_ms = _d_payload(compute)
    payload = {
        "schema": SCHEMA,
        "name": name,
        "degree": report.degree,
        "order": report.order,
        "transitivity": asdict(report),
        "d": d_payload,
        "timing_ms": {"transitivity": trans_ms, "d": d_ms},
    }
    _emit(_json(payload), args.out)
    return 0


# ---------------------------------------------------------------------------
# reproduce


def _verdict_payload(v: ClaimVerdict) -> dict:
    return {
        "claim_id": v.claim_id,
        "expected": v.expected,
        "computed": v.computed,
        "pass": v.passed,
        "runtime_ms": v.runtime_ms,
    }


def _parse_q_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"--q expects comma-separated integers, got {text!r}") from None


def cmd_reproduce(args: argparse.Namespace) -> int:
    q_list = _parse_q_list(args.q) if args.q else None
    t0 = time.perf_counter()
    if args.jobs > 1 and args.suite == "all":
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(run_suite, part, q_list) for part in _ALL_PARTS]
            verdicts = sorted(
                (v for fut in futures for v in fut.result()), key=lambda v: v.claim_id
            )
    else:
        verdicts = run_suite(args.suite, q_list)
    total_ms = int((time.perf_counter() - t0) * 1000)

    payload = {
        "schema": SCHEMA,
        "suite": args.suite,
        "verdicts": [_verdict_payload(v) for v in verdicts],
        "all_pass": all(v.passed for v in verdicts),
        "total_runtime_ms": total_ms,
    }
    _emit(_json(payload), args.out)

    # human-readable table; kept off stdout when stdout carries the JSON
    table = sys.stdout if args.out else sys.stderr
    width = max(len(v.claim_id) for v in verdicts)
    for v in verdicts:
        mark = "PASS" if v.passed else "FAIL"
        print(
            f"{mark} {v.claim_id:<{width}}  expected {v.expected!r}, computed {v.computed!r}",
            file=table,
        )
    failed = [v.claim_id for v in verdicts if not v.passed]
    print(
        f"{len(verdicts) - len(failed)}/{len(verdicts)} claims passed", file=table
    )
    if failed:
        print("failed claims: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_kind_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--q", type=int, help="field size (s0, affine, agl1)")
    sub.add_argument("--i", type=int, help="row index (table1: 1..4, table2: 1..2)")
    sub.add_argument("--p", type=int, help="prime (sl2)")
    sub.add_argument("--m", type=int, help="kernel order (zgroup)")
    sub.add_argument("--n", type=int, help="complement order (zgroup)")
    sub.add_argument("--r", type=int, help="conjugation twist (zgroup)")
    sub.add_argument(
        "--action",
        choices=("nonzero", "all"),
        help="point set for matrix kinds: nonzero vectors or all vectors",
    )
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search budget for d")
    sub.add_argument("--out", help="write output to this file instead of stdout")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gen32",
        description="Construct, analyze, and verify the bundled families of permutation groups.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    construct = subs.add_parser("construct", help="emit a group in the text format")
    construct.add_argument("kind", choices=KINDS)
    _add_kind_flags(construct)
    construct.set_defaults(func=cmd_construct)

    analyze_p = subs.add_parser("analyze", help="full transitivity and d report as JSON")
    analyze_p.add_argument("kind", nargs="?", choices=KINDS)
    _add_kind_flags(analyze_p)
    analyze_p.add_argument("--in", dest="infile", help="read a serialized group instead")
    analyze_p.set_defaults(func=cmd_analyze)

    reproduce = subs.add_parser("reproduce", help="run a claim suite and report verdicts")
    reproduce.add_argument("--suite", required=True, choices=SUITE_NAMES)
    reproduce.add_argument("--q", help="comma-separated q list for the lemma7 suite")
    reproduce.add_argument("--jobs", type=int, default=1, help="parallel suite workers")
    reproduce.add_argument("--out", help="write the JSON report to this file")
    reproduce.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
