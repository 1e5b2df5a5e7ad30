#!/usr/bin/env python3
"""Render a forest document as Graphviz DOT, one graph block per tree.

Usage: python scripts/export_dot.py -f forest.json [-o out.dot]
"""

import argparse
import sys

from rainbowtrees import forest_to_dot, parse_forest


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-f", "--forest", required=True, help="forest document")
    parser.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    args = parser.parse_args()
    with open(args.forest, "rb") as handle:
        forest = parse_forest(handle.read())
    text = forest_to_dot(forest)
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)


if __name__ == "__main__":
    main()
