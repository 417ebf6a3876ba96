"""Held-out AUC and F1 of the three built-in learners over several split seeds."""

import argparse
import statistics

from datakit.model import (
    FeatureEncoder,
    ForestHyper,
    classification_report,
    fit_forest,
    fit_logistic,
    fit_tree,
    split_indices,
)
from datakit.synthetic import fraud_dataset


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=2000)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--trees", type=int, default=100)
    args = ap.parse_args()

    frame = fraud_dataset(args.rows, seed=0)
    learners = {
        "logistic": lambda X, y, s: fit_logistic(X, y),
        "tree": lambda X, y, s: fit_tree(X, y),
        "forest": lambda X, y, s: fit_forest(X, y, ForestHyper(n_trees=args.trees), seed=s),
    }
    results = {name: {"auc": [], "f1": []} for name in learners}
    for seed in range(args.seeds):
        tr, te = split_indices(frame.n_rows, 0.3, seed)
        enc = FeatureEncoder.fit(frame.take(tr), "FraudResult")
        Xtr, ytr = enc.transform_features(frame.take(tr)), enc.transform_target(frame.take(tr))
        Xte, yte = enc.transform_features(frame.take(te)), enc.transform_target(frame.take(te))
        for name, fit in learners.items():
            m = fit(Xtr, ytr, seed)
            r = classification_report(yte, m.predict(Xte), m.predict_proba(Xte))
            results[name]["auc"].append(r.auc)
            results[name]["f1"].append(r.f1)

    print(f"{'model':<10}{'AUC mean':>10}{'AUC sd':>9}{'F1 mean':>10}{'F1 sd':>9}")
    for name, r in results.items():
        sd = statistics.stdev if args.seeds > 1 else (lambda xs: 0.0)
        print(f"{name:<10}{statistics.fmean(r['auc']):>10.4f}{sd(r['auc']):>9.4f}"
              f"{statistics.fmean(r['f1']):>10.4f}{sd(r['f1']):>9.4f}")


if __name__ == "__main__":
    main()
