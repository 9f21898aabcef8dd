"""Scan random non-negative 3x3 models on small bipartite bases.

Exploratory: looks for a lift of a bipartite graph beating both G u G and
G x K2. Nothing found here settles the question either way.
"""

import argparse
import sys

from twolift import catalog
from twolift import verify as vf


def main(argv=None):
    p = argparse.ArgumentParser(description="random models on bipartite bases")
    p.add_argument("--models", type=int, default=20)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bases", default="C4,C6,P4")
    args = p.parse_args(argv)

    bases = {name: catalog.get_graph(name) for name in args.bases.split(",")}
    reports = vf.explore_bipartite_question(n_models=args.models, seed=args.seed, q=args.q, bases=bases)
    for r in reports:
        print(f"{r.graph:6s} {r.model:40s} {r.status:14s} margin={r.margin}")
    hits = [r for r in reports if not r.ok]
    print(f"{len(reports)} scans, {len(hits)} with a lift above the claimed maximum")
    return 0


if __name__ == "__main__":
    sys.exit(main())
