"""Run the invariant battery across the small parameter grid.

Each (N, K) gets the full check list up to --max-n strands; the
per-check status lines are printed as they complete and the process
exits nonzero if any parameter set fails.  Reports can be dumped as
JSON for archiving with --out.
"""

import argparse
import json
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from hsk import Params, run_verify

GRID = [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5, help="strand bound per check")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    ap.add_argument("--out", type=pathlib.Path, default=None,
                    help="directory for per-parameter JSON reports")
    args = ap.parse_args()

    overall_ok = True
    start = time.perf_counter()
    for N, K in GRID:
        p = Params(N, K)
        report = run_verify(p, max_n=args.max_n, seed=args.seed)
        print(f"== (N, K) = ({N}, {K})  [{report.overall}]")
        for c in report.checks:
            mark = {"pass": "ok  ", "skip": "SKIP", "fail": "FAIL"}[c.status]
            print(f"  {mark} {c.name:<30} {c.elapsed:7.2f}s  {c.details}")
        if args.out is not None:
            args.out.mkdir(parents=True, exist_ok=True)
            path = args.out / f"verify_{N}_{K}.json"
            path.write_text(json.dumps(report.to_json(), indent=2) + "\n")
            print(f"  report written to {path}")
        overall_ok = overall_ok and report.overall == "pass"
    print(f"total wall time {time.perf_counter() - start:.1f}s; "
          f"{'all parameter sets pass' if overall_ok else 'FAILURES present'}")
    return 0 if overall_ok else 1


if __name__ == "__main__":
    sys.exit(main())
