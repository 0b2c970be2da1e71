#!/usr/bin/env python3
"""Sweep random polynomials and tabulate decider-vs-root-oracle agreement.

Instances whose minimum normalized leading-minor margin falls inside the
filter band are reported separately; outside the band every decider is
expected to match the oracle exactly.
"""

import argparse
import random
import sys
from collections import Counter

from conestab import UniPoly, stability_report


def random_instance(rng, max_degree):
    kind = rng.random()
    if kind < 0.4:
        d = rng.randint(1, max_degree)
        head = rng.choice([k for k in range(-9, 10) if k])
        return UniPoly(tuple([head] + [rng.randint(-9, 9) for _ in range(d - 1)]
                             + [rng.randint(1, 9)]))
    if kind < 0.8:
        p = UniPoly((1,))
        for _ in range(rng.randint(1, max_degree // 2)):
            p = p * UniPoly((rng.randint(1, 9), rng.randint(1, 9), 1))
        return p
    d = rng.randint(1, max_degree)
    return UniPoly(tuple(rng.randint(1, 20) for _ in range(d + 1)))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=404)
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--margin-filter", type=float, default=1e-7)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    names = ["routh_hurwitz", "lc1", "lc2", "lc3", "lc4",
             "hermite_biehler", "degree_reduction"]
    disagreements = Counter()
    filtered = 0
    qualifying = 0
    oracle_counts = Counter()
    for _ in range(args.count):
        p = random_instance(rng, args.max_degree)
        if p.degree is None or p.degree < 1:
            continue
        rep = stability_report(p)
        margins = rep.minor_margins[:p.degree - 1]
        if margins and min(abs(m) for m in margins) <= args.margin_filter:
            filtered += 1
            continue
        qualifying += 1
        oracle = rep.root_oracle.status
        oracle_counts[oracle] += 1
        verdicts = dict(zip(names, [
            rep.routh_hurwitz, rep.lienard_chipart[1], rep.lienard_chipart[2],
            rep.lienard_chipart[3], rep.lienard_chipart[4],
            rep.hermite_biehler, rep.degree_reduction]))
        for name, v in verdicts.items():
            if v.status != oracle:
                disagreements[name] += 1
                print(f"DISAGREEMENT {name}: {list(p.coeffs)} "
                      f"decider={v.status} oracle={oracle}")

    print(f"instances: {args.count}  qualifying: {qualifying}  "
          f"inside-filter-band: {filtered}")
    print(f"oracle verdicts: {dict(oracle_counts)}")
    if disagreements:
        print(f"disagreements: {dict(disagreements)}")
        return 1
    print("agreement: 100% on the qualifying subset")
    return 0


if __name__ == "__main__":
    sys.exit(main())
