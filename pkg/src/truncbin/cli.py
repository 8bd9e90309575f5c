"""Command-line front end.

Commands:
    identities RANGE   seeded random checks of the two binomial identities
    prove N            incompatibility pipeline for one odd prime exponent
    factor N           factor stack of U_N with expansion check
    scan --max N       pipeline over all odd primes <= N, persisted to an atlas
    residues N         admissible pairs and zero sets for one exponent

Every command accepts --format {text,json}.  JSON output is a single
object {schema_version, command, params, results}; see README for the
per-command result schemas.

Exit codes:
    0  success / all outcomes proven
    1  an outcome was inconclusive (or identity failures were found)
    2  usage error (bad arguments, violated precondition, bound exceeded)
    3  I/O error while reading or writing the atlas
"""

from __future__ import annotations

import argparse
import json
import sys

from .atlas import ScanAtlas, pairs_to_lists, proof_report_to_dict
from .errors import BoundExceededError, DomainError
from .intmath import is_odd_prime
from .poly import TRINOMIAL, build_truncated, factor_stack
from .prover import (
    OUTCOME_INCONCLUSIVE,
    identity_trials,
    prove_first_case,
    scan,
)
from .residues import DEFAULT_EXPONENT_BOUND, admissible_pairs, zero_set

SCHEMA_VERSION = 1
DEFAULT_SEED = 42
DEFAULT_TRIALS = 100
DEFAULT_ATLAS = "scan_atlas.json"

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _emit_json(command: str, params: dict, results: list) -> None:
    print(
        json.dumps(
            {
                "schema_version": SCHEMA_VERSION,
                "command": command,
                "params": params,
                "results": results,
            },
            indent=2,
        )
    )


def _fmt_pairs(pairs) -> str:
    return " ".join(f"({p.delta_a},{p.delta_b})" for p in pairs)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
    else:
        lo_text = hi_text = text
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise DomainError(f"range must look like '3..9' or '7', got {text!r}") from None
    if lo < 2:
        raise DomainError(f"identity exponents start at 2, got {lo}")
    if hi < lo:
        raise DomainError(f"empty range {text!r}")
    return lo, hi


def _require_odd_prime(n: int) -> None:
    if not is_odd_prime(n):
        raise DomainError(f"n must be an odd prime, got {n}")


def cmd_identities(args: argparse.Namespace) -> int:
    lo, hi = _parse_range(args.range)
    if args.trials < 1:
        raise DomainError(f"trials must be >= 1, got {args.trials}")
    reports = [identity_trials(n, args.trials, args.seed) for n in range(lo, hi + 1)]
    failed = any(r.failures for r in reports)
    if args.format == "json":
        _emit_json(
            "identities",
            {"range": [lo, hi], "trials": args.trials, "seed": args.seed},
            [
                {"n": r.n, "trials": r.trials, "failures": [list(f) for f in r.failures]}
                for r in reports
            ],
        )
    else:
        print(f"identities: n in [{lo}, {hi}], trials={args.trials}, seed={args.seed}")
        for r in reports:
            print(f"n={r.n}: trials={r.trials} failures={len(r.failures)}")
            for a, b, c in r.failures:
                print(f"  counterexample: A={a} B={b} C={c}")
        print("all identities hold" if not failed else "IDENTITY FAILURES FOUND")
    return EXIT_INCONCLUSIVE if failed else EXIT_OK


def cmd_prove(args: argparse.Namespace) -> int:
    _require_odd_prime(args.n)
    report = prove_first_case(args.n, bound=args.bound)
    if args.format == "json":
        _emit_json(
            "prove",
            {"n": args.n, "bound": args.bound},
            [proof_report_to_dict(report)],
        )
    else:
        print(f"n: {report.n}")
        print(f"outcome: {report.outcome}")
        print(f"pair_count: {report.pair_count}")
        print(f"trinomial_zeros: {len(report.trinomial_zeros)}: {_fmt_pairs(report.trinomial_zeros)}")
        print(f"cofactor_zeros: {len(report.cofactor_zeros)}: {_fmt_pairs(report.cofactor_zeros)}")
        witnesses = " ".join(f"({a},{b})" for a, b in report.v2_witnesses)
        print(f"v2_witnesses: {len(report.v2_witnesses)}: {witnesses}")
        print(f"caveats: {' '.join(report.caveats)}")
        print(f"elapsed_s: {report.elapsed:.4f}")
    return EXIT_INCONCLUSIVE if report.outcome == OUTCOME_INCONCLUSIVE else EXIT_OK


def cmd_factor(args: argparse.Namespace) -> int:
    _require_odd_prime(args.n)
    stack = factor_stack(args.n)
    expansion_ok = (
        stack.expansion().coefficients == build_truncated(args.n).poly.coefficients
    )
    if args.format == "json":
        _emit_json(
            "factor",
            {"n": args.n},
            [
                {
                    "n": stack.n,
                    "trinomial_exponent": stack.trinomial_exponent,
                    "cofactor_degree": stack.cofactor.degree,
                    "cofactor_coefficients": list(stack.cofactor.coefficients),
                    "expansion_ok": expansion_ok,
                }
            ],
        )
    else:
        print(f"n: {stack.n}")
        print(f"trinomial_exponent: {stack.trinomial_exponent}")
        print(f"cofactor_degree: {stack.cofactor.degree}")
        print(f"cofactor_coefficients: {' '.join(str(c) for c in stack.cofactor.coefficients)}")
        print(f"expansion_check: {'ok' if expansion_ok else 'FAILED'}")
    return EXIT_OK if expansion_ok else EXIT_INCONCLUSIVE


def cmd_scan(args: argparse.Namespace) -> int:
    if args.max < 3:
        raise DomainError(f"scan requires --max >= 3, got {args.max}")
    reports = scan(args.max, bound=args.bound)
    atlas_path = args.atlas
    try:
        atlas = ScanAtlas.load(atlas_path)
    except FileNotFoundError:
        atlas = ScanAtlas()
    atlas.upsert(reports)
    atlas.save(atlas_path)

    if args.format == "json":
        _emit_json(
            "scan",
            {"max": args.max, "bound": args.bound, "atlas": str(atlas_path)},
            [proof_report_to_dict(r, include_elapsed=False) for r in reports],
        )
    else:
        print(f"{'n':>4}  {'outcome':<18} {'pairs':>6} {'T-zeros':>8} {'H-zeros':>8}")
        for r in reports:
            print(
                f"{r.n:>4}  {r.outcome:<18} {r.pair_count:>6} "
                f"{len(r.trinomial_zeros):>8} {len(r.cofactor_zeros):>8}"
            )
        print(f"atlas: {atlas_path} ({len(atlas.entries)} entries)")
    any_inconclusive = any(r.outcome == OUTCOME_INCONCLUSIVE for r in reports)
    return EXIT_INCONCLUSIVE if any_inconclusive else EXIT_OK


def cmd_residues(args: argparse.Namespace) -> int:
    _require_odd_prime(args.n)
    enum = admissible_pairs(args.n)
    stack = factor_stack(args.n)
    trinomial_zeros = zero_set(TRINOMIAL, args.n, enum)
    cofactor_zeros = zero_set(stack.cofactor, args.n, enum)
    if args.format == "json":
        _emit_json(
            "residues",
            {"n": args.n},
            [
                {
                    "modulus": enum.modulus,
                    "count": enum.count,
                    "pairs": pairs_to_lists(enum.pairs),
                    "trinomial_zeros": pairs_to_lists(tuple(trinomial_zeros)),
                    "cofactor_zeros": pairs_to_lists(tuple(cofactor_zeros)),
                }
            ],
        )
    else:
        print(f"modulus: {enum.modulus}")
        print(f"pair_count: {enum.count}")
        print(f"pairs: {_fmt_pairs(enum.pairs)}")
        print(f"trinomial_zeros: {_fmt_pairs(trinomial_zeros)}")
        print(f"cofactor_zeros: {_fmt_pairs(cofactor_zeros)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="truncbin",
        description="Exact truncated-binomial arithmetic and first-case Fermat checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_id = sub.add_parser("identities", help="seeded random identity checks")
    p_id.add_argument("range", help="exponent range, e.g. 3..9 or a single n")
    p_id.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p_id.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_format(p_id)
    p_id.set_defaults(handler=cmd_identities)

    p_prove = sub.add_parser("prove", help="incompatibility pipeline for one exponent")
    p_prove.add_argument("n", type=int)
    p_prove.add_argument("--bound", type=int, default=DEFAULT_EXPONENT_BOUND)
    add_format(p_prove)
    p_prove.set_defaults(handler=cmd_prove)

    p_factor = sub.add_parser("factor", help="factor stack of U_n")
    p_factor.add_argument("n", type=int)
    add_format(p_factor)
    p_factor.set_defaults(handler=cmd_factor)

    p_scan = sub.add_parser("scan", help="run the pipeline over odd primes <= max")
    p_scan.add_argument("--max", type=int, required=True)
    p_scan.add_argument("--atlas", default=DEFAULT_ATLAS)
    p_scan.add_argument("--bound", type=int, default=DEFAULT_EXPONENT_BOUND)
    add_format(p_scan)
    p_scan.set_defaults(handler=cmd_scan)

    p_res = sub.add_parser("residues", help="admissible pairs and zero sets")
    p_res.add_argument("n", type=int)
    add_format(p_res)
    p_res.set_defaults(handler=cmd_residues)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles its own usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except (DomainError, BoundExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
