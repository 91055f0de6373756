"""Run every verification suite and write one JSON report per suite."""

import argparse
import json
import time
from pathlib import Path

from slorbits.cli import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="reports")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for suite in SUITES:
        t0 = time.perf_counter()
        rep = run_suite(suite, seed=args.seed)
        (out / f"{suite}.json").write_text(json.dumps(rep.to_dict(), indent=2) + "\n")
        fails = sum(s.status == "fail" for s in rep.steps)
        print(f"{suite:16} {rep.overall.upper():4} {len(rep.steps):3} steps, {fails} failing, "
              f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
