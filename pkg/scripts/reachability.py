"""Distance histogram of the state graph: how many rotations separate two states."""

import argparse
from collections import Counter

from hilbertian.roadmap import build_polytope, distances_from


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=2, choices=(1, 2, 3))
    args = ap.parse_args()
    size = len(build_polytope(args.n))
    hist = Counter()
    sources = range(size) if args.n < 3 else range(0, size, 8)  # sampled sources for N=3
    for s in sources:
        hist.update(distances_from(args.n, s)[0].tolist())
    for d in sorted(hist):
        print(f"distance {d}: {hist[d]}")
    print(f"diameter over sources: {max(hist)} (bound N+1 = {args.n + 1})")


if __name__ == "__main__":
    main()
