"""Concurrence spectra of the visible E8 shells, exact and as floats."""

import argparse

from hilbertian import lattice


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-shell", type=int, default=4)
    args = ap.parse_args()
    for J in range(1, args.max_shell + 1):
        pts = lattice.e8_shell(J)
        vis = lattice.visible_filter(pts)
        spec = lattice.shell_concurrence_spectrum(J)
        print(f"J={J}  points={len(pts)}  visible={len(vis)}  M_J={lattice.shell_count_formula(J)}")
        print("   ", ", ".join(spec.labels()))


if __name__ == "__main__":
    main()
