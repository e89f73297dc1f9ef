"""Close the rotation set under multiplication and report the polytope action."""

import argparse
import time

from hilbertian.roadmap import build_polytope
from hilbertian.rotations import enumerate_rotations, group_closure


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=1, choices=(1, 2))
    args = ap.parse_args()
    t0 = time.perf_counter()
    g = group_closure(enumerate_rotations(args.n))
    rep = g.report(build_polytope(args.n).states)
    for key, val in rep.items():
        print(f"{key}: {val}")
    print(f"elapsed: {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
