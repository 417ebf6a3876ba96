"""End-to-end demo through the CLI: profile, clean, extract dates, chart, train, score.

Every step goes through ``datakit.cli.run`` so the printed commands can be
replayed in a shell.
"""

import argparse
import shlex
import sys
import time
from pathlib import Path

from datakit.cli import run
from datakit.csvio import read_csv, write_csv
from datakit.frame import drop_columns
from datakit.synthetic import transactions

TS = "TransactionStartTime"


def step(*argv) -> None:
    argv = [str(a) for a in argv]
    print(f"\n$ datakit {shlex.join(argv)}")
    t0 = time.perf_counter()
    code = run(argv)
    print(f"[exit {code}, {time.perf_counter() - t0:.2f}s]")
    if code != 0:
        sys.exit(code)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Path("runs/pipeline"))
    ap.add_argument("--rows", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--model", choices=("logistic", "tree", "forest"), default="forest")
    args = ap.parse_args()

    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)
    raw = out / "transactions.csv"
    raw.write_bytes(write_csv(transactions(args.rows, args.seed)))
    common = ["--out-dir", out, "--overwrite"]

    step("describe", raw, "--format", "json", *common)
    step("clean", raw, *common)
    clean = out / "transactions_clean.csv"
    step("dates", clean, "--cols", TS, "--keep", *common)
    step("plot", clean, "--kind", "count", "--cols", "ProviderId,ProductCategory,ChannelId", *common)
    step("plot", clean, "--kind", "catbox", "--target", "FraudResult", *common)
    step("plot", clean, "--kind", "hist", "--cols", "Amount,Value", *common)
    step("plot", clean, "--kind", "time", "--time-col", TS, "--cols", "Amount,Value", *common)

    # identifiers and the timestamp carry no signal the split can generalise on
    features = out / "features.csv"
    frame = read_csv(clean)
    frame = drop_columns(frame, {"TransactionId", "BatchId", "AccountId", "SubscriptionId",
                                 "CustomerId", "ProductId", TS})
    features.write_bytes(write_csv(frame))

    step("train", features, "--target", "FraudResult", "--model", args.model, "--seed", 2, *common)
    step("evaluate", features, "--target", "FraudResult", "--model-file", out / "model.json")
    step("importance", features, "--target", "FraudResult", "--model-file", out / "model.json", *common)
    print(f"\noutputs in {out}")


if __name__ == "__main__":
    main()
