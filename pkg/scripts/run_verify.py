#!/usr/bin/env python3
"""Run the full claim registry and write JSON + CSV reports.

Usage:
    python3 scripts/run_verify.py [--out-dir reports] [--parallel]
"""

import argparse
import pathlib
import sys
import time

from qseries.claims import registry, reports_to_csv, reports_to_json, verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--parallel", action="store_true")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    start = time.perf_counter()
    if args.parallel:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor() as pool:
            reports = list(pool.map(verify, registry()))
    else:
        reports = [verify(c) for c in registry()]
    elapsed = time.perf_counter() - start
    reports.sort(key=lambda r: r.claim_id)

    (out_dir / "verification.json").write_text(reports_to_json(reports))
    (out_dir / "verification.csv").write_text(reports_to_csv(reports))

    counts = {s: sum(1 for r in reports if r.status == s) for s in ("pass", "fail", "skipped")}
    print(f"{len(reports)} claims in {elapsed:.1f}s: "
          f"{counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped")
    for r in reports:
        if r.status != "pass":
            print(f"  {r.claim_id}: {r.status} {r.first_failure or ''} {r.message}")
    print(f"reports written to {out_dir}/")
    return 1 if counts["fail"] else 0


if __name__ == "__main__":
    sys.exit(main())
