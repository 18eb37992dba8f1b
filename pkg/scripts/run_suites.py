#!/usr/bin/env python3
"""Run all three cospectrality suites and print their tables.

Example:
    python3 scripts/run_suites.py --seed 0 --out-dir reports/
"""

import argparse
import pathlib
import sys

from hypermatch import run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", default="2,3,4,5", help="comma-separated edge sizes")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=25)
    ap.add_argument("--m-max", type=int, default=4)
    ap.add_argument("--grid", default="6:10", help="m and n range for the swap suite, lo:hi")
    ap.add_argument("--out-dir", default=None, help="write one JSON report per suite here")
    args = ap.parse_args()

    r_list = tuple(int(x) for x in args.r.split(","))
    lo, hi = (int(x) for x in args.grid.split(":"))
    runs = {
        "coalesce": dict(r_list=r_list, trials=args.trials, seed=args.seed,
                         chain_m_max=args.m_max),
        "bridge": dict(r_list=r_list, trials=args.trials, seed=args.seed,
                       m_max=args.m_max),
        "path-w": dict(r_list=r_list, m_range=(lo, hi), n_range=(lo, hi),
                       seed=args.seed),
    }

    all_passed = True
    for name, kwargs in runs.items():
        report = run_suite(name, **kwargs)
        print(report.human_table())
        print()
        all_passed &= report.passed
        if args.out_dir:
            out = pathlib.Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{name}.json").write_text(report.to_json() + "\n")

    print("all suites:", "PASS" if all_passed else "FAIL")
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
