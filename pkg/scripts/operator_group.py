#!/usr/bin/env python3
"""Enumerate the group generated by signed bar operators under composition. Run from repo root."""
import argparse
import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO_ROOT))

from src.matrix_rep import BarOp, listed_operator_set, operator_group  # noqa: E402
from src.quaternion import Axis  # noqa: E402


def _sort_key(op: BarOp):
    return (op.left.value, op.right.value, -op.sign)


def main():
    parser = argparse.ArgumentParser(description="Closure of signed bar operators under composition")
    parser.add_argument(
        "--generators",
        nargs="*",
        metavar="E1|E2",
        help="Generators like i|1 or -1|j (default: the fourteen +-(1|e), +-(e|1) operators)",
    )
    parser.add_argument("--list", action="store_true", help="Print every element")
    args = parser.parse_args()

    if args.generators:
        generators = set()
        for text in args.generators:
            sign = -1 if text.startswith("-") else 1
            left, _, right = text.lstrip("+-").partition("|")
            try:
                generators.add(BarOp(Axis.from_symbol(left), Axis.from_symbol(right), sign))
            except ValueError as e:
                print(f"Bad generator {text!r}: {e}", file=sys.stderr)
                sys.exit(2)
    else:
        generators = set(listed_operator_set())

    group = operator_group(generators)
    print(f"{len(generators)} generators, closed under composition: {len(group)} elements.")
    outside = group - generators
    if outside:
        print(f"{len(outside)} elements are not among the generators, e.g. {sorted(outside, key=_sort_key)[0]}.")
    if args.list:
        for op in sorted(group, key=_sort_key):
            print(f"  {op}")


if __name__ == "__main__":
    main()
