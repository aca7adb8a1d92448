"""Exhaustive bijection and rotation sweep; writes a JSON summary.

    python3 scripts/run_verification.py --max-weight 12 --out results/sweep.json
"""

import argparse
import json
import time
from dataclasses import asdict
from pathlib import Path

from sl3webs.bijection import SweepConfig, sweep


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-weight", type=int, default=12)
    ap.add_argument("--rotation-weight", type=int, default=9)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    config = SweepConfig(args.max_weight, args.rotation_weight, args.workers)

    start = time.perf_counter()
    results = sweep(config)
    elapsed = time.perf_counter() - start

    summary = {"config": asdict(config), "elapsed": round(elapsed, 2)}
    ok = True
    for check, reports in results.items():
        failed = [r.sign for r in reports if not r.success]
        ok &= not failed
        summary[check] = {
            "sign_strings": len(reports),
            "fillings": sum(r.filling_count for r in reports),
            "webs": sum(r.web_count for r in reports),
            "failed": failed,
            "per_sign": {r.sign: r.filling_count for r in reports},
        }
        print(f"{check:10s} {len(reports):4d} sign strings  {summary[check]['fillings']:6d} fillings  "
              f"{len(failed)} failed")
    print(f"elapsed {elapsed:.1f}s  {'PASS' if ok else 'FAIL'}")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(summary, indent=2) + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
