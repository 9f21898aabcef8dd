"""Run the certification suites and write a JSON report.

    python3 scripts/certify.py --out results/certify.json --seed 0 --threads 4
"""

import argparse
import json
import os
import sys

from twolift import verify as vf


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--suites", default=",".join(vf.ALL_SUITES), help="comma-separated suite names")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default="results/certify.json")
    args = p.parse_args(argv)

    report = vf.run_all(args.suites.split(","), seed=args.seed, workers=args.threads)
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    with open(args.out, "w") as fh:
        json.dump(report.to_json(), fh, indent=2)
    print(report.summary())
    print(f"report written to {args.out}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
