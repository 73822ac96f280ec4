"""Run every verification suite and write one JSONL report per suite.

    python scripts/run_suites.py --out results --seed 0
"""

import argparse
import json
import pathlib
import time

from slowcol.harness import SUITES, SuiteOptions, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--slow", action="store_true")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in SUITES:
        t0 = time.perf_counter()
        report = run_suite(name, SuiteOptions(seed=args.seed, slow=args.slow))
        with open(out / f"{name}.jsonl", "w") as fh:
            for r in report.records:
                fh.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")
            fh.write(json.dumps(report.summary(), sort_keys=True) + "\n")
        failed += not report.passed
        print(f"{name:24s} {len(report.records):5d} instances  {len(report.failures):3d} failures  {time.perf_counter() - t0:6.1f}s")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
