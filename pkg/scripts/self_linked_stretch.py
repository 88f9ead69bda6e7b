"""Homogeneity audit of the self-linked example and its P^(4) ⊆ P^3 check."""

import argparse
import json

from sympow.groebner import Budget
from sympow.manifest import example_6_4, field_from


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--char", type=int)
    ap.add_argument("--max-pairs", type=int, default=10**8)
    args = ap.parse_args()
    report = example_6_4(field_from(args.char), Budget(max_pairs=args.max_pairs))
    print(json.dumps(report.to_json(), indent=2))


if __name__ == "__main__":
    main()
