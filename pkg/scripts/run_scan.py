#!/usr/bin/env python3
"""Run the first-case pipeline over a range of odd prime exponents.

Prints one row per exponent (outcome, pair count, zero-set sizes, first
valuation-2 witness if any) and persists the results to an atlas file.

Usage:
    python scripts/run_scan.py --max 61
    python scripts/run_scan.py --max 101 --atlas out/atlas.json
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from truncbin.atlas import ScanAtlas
from truncbin.intmath import odd_primes_up_to
from truncbin.prover import prove_first_case
from truncbin.residues import DEFAULT_EXPONENT_BOUND


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=37)
    parser.add_argument("--bound", type=int, default=DEFAULT_EXPONENT_BOUND)
    parser.add_argument("--atlas", default="scan_atlas.json")
    args = parser.parse_args()

    print(f"{'n':>4}  {'outcome':<18} {'pairs':>6} {'T-zeros':>8} {'H-zeros':>8} "
          f"{'witness':>12} {'secs':>7}")
    reports = []
    for n in odd_primes_up_to(args.max):
        report = prove_first_case(n, bound=args.bound)
        reports.append(report)
        witness = (
            f"({report.v2_witnesses[0][0]},{report.v2_witnesses[0][1]})"
            if report.v2_witnesses
            else "-"
        )
        print(
            f"{report.n:>4}  {report.outcome:<18} {report.pair_count:>6} "
            f"{len(report.trinomial_zeros):>8} {len(report.cofactor_zeros):>8} "
            f"{witness:>12} {report.elapsed:>7.3f}"
        )

    outcomes = [r.outcome for r in reports]
    print(
        f"\n{len(reports)} exponents: "
        f"{outcomes.count('proven_k1')} proven_k1, "
        f"{outcomes.count('proven_dichotomy')} proven_dichotomy, "
        f"{outcomes.count('inconclusive')} inconclusive"
    )

    try:
        atlas = ScanAtlas.load(args.atlas)
    except FileNotFoundError:
        atlas = ScanAtlas()
    atlas.upsert(reports)
    atlas.save(args.atlas)
    print(f"atlas written: {args.atlas} ({len(atlas.entries)} entries)")
    return 0


if __name__ == "__main__":
    started = time.perf_counter()
    code = main()
    print(f"total: {time.perf_counter() - started:.2f}s")
    sys.exit(code)
