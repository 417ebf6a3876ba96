"""Write the synthetic transaction tables used by the demos as CSV files."""

import argparse
from pathlib import Path

from datakit.csvio import write_csv
from datakit.synthetic import fraud_dataset, transactions


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Path("data"))
    ap.add_argument("--rows", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name, frame in (("transactions", transactions(args.rows, args.seed)),
                        ("fraud", fraud_dataset(args.rows, args.seed))):
        path = args.out_dir / f"{name}.csv"
        path.write_bytes(write_csv(frame))
        print(f"{path}  {frame.n_rows} rows x {frame.shape[1]} columns")


if __name__ == "__main__":
    main()
