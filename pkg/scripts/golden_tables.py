"""Write the pseudostabilizer and eigenvector tables as CSV."""

import argparse
from pathlib import Path

from hilbertian.pseudostabilizer import enumerate_maximal, summary_csv
from hilbertian.states import golden_table_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=2)
    ap.add_argument("--out", default="tables")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    sets = enumerate_maximal(args.n)
    (out / f"sets_n{args.n}.csv").write_text(summary_csv(sets))
    (out / f"eigenvectors_n{args.n}.csv").write_text(golden_table_csv(sets))
    print(f"wrote {len(sets)} sets to {out}/")


if __name__ == "__main__":
    main()
