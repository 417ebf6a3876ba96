"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 ingest error, 4 schema error
(unknown column, dtype mismatch, unusable data), 5 model-file error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import feature_engineering as fe
from .csvio import CsvOptions, read_csv, write_csv
from .errors import DataError, IngestError, ModelFileError, SchemaError, UnknownColumn
from .frame import Frame
from .model import (
    FeatureEncoder,
    ForestHyper,
    LogisticHyper,
    SplitSpec,
    TreeHyper,
    classification_report,
    fit_forest,
    fit_logistic,
    fit_tree,
    load_model,
    permutation_importance,
    save_model,
    split_indices,
)
from .structdata import classify_features, describe
from .timeseries import extract_dates, timebucket_series
from .visualization import (
    boxplot_spec,
    catbox_spec,
    countplot_spec,
    histogram_spec,
    importance_spec,
    render_svg,
    timeplot_spec,
)

EXIT_OK, EXIT_USAGE, EXIT_INGEST, EXIT_SCHEMA, EXIT_MODEL = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    input: Path
    out_dir: Path | None
    format: str
    seed: int
    overwrite: bool

    def output_path(self, name: str, default_dir: str | None = ".") -> Path | None:
        base = self.out_dir if self.out_dir is not None else (Path(default_dir) if default_dir else None)
        if base is None:
            return None
        base.mkdir(parents=True, exist_ok=True)
        return base / name

    def write(self, path: Path, data: str | bytes) -> None:
        if path.exists() and not self.overwrite:
            raise UsageError(f"refusing to overwrite {path} (pass --overwrite)")
        if isinstance(data, str):
            data = data.encode("utf-8")
        path.write_bytes(data)


def _split_list(s: str | None) -> list[str] | None:
    if s is None:
        return None
    return [x.strip() for x in s.split(",") if x.strip()]


def _fig_size(s: str) -> tuple[float, float]:
    try:
        w, h = (float(x) for x in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("fig size must look like W,H") from None
    if w <= 0 or h <= 0:
        raise argparse.ArgumentTypeError("fig size must be positive")
    return w, h


def _fraction(s: str) -> float:
    f = float(s)
    if not 0 < f < 1:
        raise argparse.ArgumentTypeError("test fraction must lie in (0, 1)")
    return f


def _u64(s: str) -> int:
    v = int(s)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("csv", type=Path, help="input CSV file")
    common.add_argument("--out-dir", type=Path, default=None, help="directory for written files")
    common.add_argument("--seed", type=_u64, default=0)
    common.add_argument("--overwrite", action="store_true", help="allow replacing existing output files")
    common.add_argument("--delimiter", default=",")
    common.add_argument("--raw-dates", action="store_true",
                        help="keep timestamp-looking text columns as categorical")

    p = argparse.ArgumentParser(prog="datakit", description="Profile, clean, plot and model CSV data.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("describe", parents=[common], help="profile a dataset")
    d.add_argument("--format", choices=("json", "md", "text"), default="md")

    c = sub.add_parser("clean", parents=[common], help="drop redundant columns, optionally fill nulls")
    c.add_argument("--fill", choices=("mean", "median"))
    c.add_argument("-o", "--output", type=Path, help="cleaned CSV path")

    t = sub.add_parser("dates", parents=[common], help="extract calendar features")
    t.add_argument("--cols", required=True, help="comma-separated date columns")
    t.add_argument("--keep", action="store_true", help="keep the source columns")
    t.add_argument("-o", "--output", type=Path)

    g = sub.add_parser("plot", parents=[common], help="write chart specs and SVGs")
    g.add_argument("--kind", required=True, choices=("count", "catbox", "hist", "box", "time"))
    g.add_argument("--target")
    g.add_argument("--bins", type=int, default=5)
    g.add_argument("--time-col")
    g.add_argument("--cols", help="comma-separated columns (default: all eligible)")
    g.add_argument("--fig-size", type=_fig_size, default=None, help="W,H in units of 100 px")

    for name, helptext in (("train", "split, fit and report"), ("evaluate", "score a saved model"),
                           ("importance", "permutation feature importance")):
        m = sub.add_parser(name, parents=[common], help=helptext)
        m.add_argument("--target", required=True)
        m.add_argument("--format", choices=("json", "text"), default="text")
        m.add_argument("--test-fraction", type=_fraction, default=None)
        if name == "train":
            m.add_argument("--model", required=True, choices=("logistic", "tree", "forest"))
            m.add_argument("--trees", type=int, default=100)
            m.add_argument("--max-depth", type=int, default=8)
            m.add_argument("--max-iter", type=int, default=1000)
            m.add_argument("--learning-rate", type=float, default=0.1)
            m.add_argument("--l2", type=float, default=0.0)
        else:
            m.add_argument("--model-file", required=True, type=Path)
            m.add_argument("--full", action="store_true", help="use every row instead of the test split")
        if name == "importance":
            m.add_argument("--repeats", type=int, default=5)
            m.add_argument("--metric", choices=("f1", "accuracy", "auc"), default="f1")
    return p


def _load(cfg: CliConfig, args) -> Frame:
    try:
        opts = CsvOptions(delimiter=args.delimiter, infer_datetime=not args.raw_dates)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        return read_csv(cfg.input, opts)
    except OSError as exc:
        raise IngestError(f"cannot read {cfg.input}: {exc.strerror or exc}") from None


def _default_output(cfg: CliConfig, args, suffix: str) -> Path:
    if args.output is not None:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        return args.output
    return cfg.output_path(f"{cfg.input.stem}_{suffix}.csv")


# -- subcommands ---------------------------------------------------------------


def cmd_describe(cfg: CliConfig, args, out) -> None:
    rep = describe(_load(cfg, args), seed=cfg.seed)
    text = rep.to_json() + "\n" if cfg.format == "json" else rep.to_markdown()
    out.write(text)
    path = cfg.output_path("describe.json" if cfg.format == "json" else "describe.md", default_dir=None)
    if path is not None:
        cfg.write(path, text)


def cmd_clean(cfg: CliConfig, args, out) -> None:
    frame, dropped = fe.drop_redundant(_load(cfg, args))
    if args.fill:
        frame = fe.fill_missing(frame, fe.FillStrategy(numeric=args.fill))
    out.write(fe.format_dropped(dropped) + "\n")
    cfg.write(_default_output(cfg, args, "clean"), write_csv(frame))


def cmd_dates(cfg: CliConfig, args, out) -> None:
    cols = _split_list(args.cols)
    if not cols:
        raise UsageError("--cols needs at least one column")
    frame = extract_dates(_load(cfg, args), cols, keep=args.keep)
    path = _default_output(cfg, args, "dates")
    cfg.write(path, write_csv(frame))
    out.write(f"wrote {path}\n")


def cmd_plot(cfg: CliConfig, args, out) -> None:
    frame = _load(cfg, args)
    cols = _split_list(args.cols)
    size = {"fig_size": args.fig_size} if args.fig_size else {}
    if args.kind == "count":
        specs = countplot_spec(frame, cols, **size)
    elif args.kind == "catbox":
        if not args.target:
            raise UsageError("--kind catbox needs --target")
        specs = catbox_spec(frame, args.target, **size)
    elif args.kind == "hist":
        if args.bins < 1:
            raise UsageError("--bins must be >= 1")
        specs = histogram_spec(frame, cols, bins=args.bins, **size)
    elif args.kind == "box":
        names = cols if cols is not None else classify_features(frame).numerical
        specs = [boxplot_spec(frame[n], **size) for n in names if cols is not None or frame[n].non_null()]
    else:
        if not args.time_col:
            raise UsageError("--kind time needs --time-col")
        names = cols if cols is not None else classify_features(frame).numerical
        series = [s for s in timebucket_series(frame, names, args.time_col) if s.buckets]
        specs = timeplot_spec(series, **size) if series else []
    for spec in specs:
        stem = f"{args.kind}_{spec.column}"
        cfg.write(cfg.output_path(stem + ".json"), spec.to_json())
        cfg.write(cfg.output_path(stem + ".svg"), render_svg(spec))
        out.write(f"wrote {stem}.svg\n")


def _emit_report(cfg: CliConfig, report, out) -> None:
    out.write(report.to_json() + "\n" if cfg.format == "json" else report.to_text())


def cmd_train(cfg: CliConfig, args, out) -> None:
    frame = _load(cfg, args)
    split = SplitSpec(args.test_fraction or 0.3, cfg.seed)
    if args.target not in frame:
        raise UnknownColumn(args.target)
    train_idx, test_idx = split_indices(frame.n_rows, split.test_fraction, split.seed)
    train, test = frame.take(train_idx), frame.take(test_idx)
    enc = FeatureEncoder.fit(train, args.target)
    X, y = enc.transform_features(train), enc.transform_target(train)
    if args.model == "logistic":
        model = fit_logistic(X, y, LogisticHyper(args.learning_rate, args.max_iter, 1e-6, args.l2), enc.features)
    elif args.model == "tree":
        model = fit_tree(X, y, TreeHyper(max_depth=args.max_depth), feature_names=enc.features)
    else:
        model = fit_forest(X, y, ForestHyper(n_trees=args.trees, max_depth=args.max_depth),
                           seed=cfg.seed, feature_names=enc.features)
    model.meta = {"encoder": enc.to_dict(),
                  "split": {"test_fraction": split.test_fraction, "seed": split.seed}}
    Xt, yt = enc.transform_features(test), enc.transform_target(test)
    report = classification_report(yt, model.predict(Xt), model.predict_proba(Xt)) if len(yt) else None
    cfg.write(cfg.output_path("model.json"), save_model(model))
    if report is not None:
        cfg.write(cfg.output_path("report.json"), report.to_json() + "\n")
        _emit_report(cfg, report, out)


def _model_and_rows(cfg: CliConfig, args):
    try:
        doc = args.model_file.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ModelFileError(f"cannot read model file {args.model_file}: {exc}") from None
    model = load_model(doc)
    try:
        enc = FeatureEncoder.from_dict(model.meta["encoder"])
        stored = model.meta.get("split", {})
    except (KeyError, TypeError, AttributeError):
        raise ModelFileError("MalformedModelFile: no feature encoding stored in model file") from None
    if enc.target != args.target:
        raise SchemaError(f"model was trained for target {enc.target!r}, not {args.target!r}")
    frame = _load(cfg, args)
    if args.target not in frame:
        raise UnknownColumn(args.target)
    if not args.full:
        f = args.test_fraction or stored.get("test_fraction", 0.3)
        seed = cfg.seed if args.seed_given else stored.get("seed", 0)
        _, test_idx = split_indices(frame.n_rows, f, seed)
        frame = frame.take(test_idx)
    return model, enc.transform_features(frame), enc.transform_target(frame), enc


def cmd_evaluate(cfg: CliConfig, args, out) -> None:
    model, X, y, _ = _model_and_rows(cfg, args)
    report = classification_report(y, model.predict(X), model.predict_proba(X))
    _emit_report(cfg, report, out)
    path = cfg.output_path("evaluation.json", default_dir=None)
    if path is not None:
        cfg.write(path, report.to_json() + "\n")


def cmd_importance(cfg: CliConfig, args, out) -> None:
    if args.repeats < 1:
        raise UsageError("--repeats must be >= 1")
    model, X, y, enc = _model_and_rows(cfg, args)
    rep = permutation_importance(model, X, y, metric=args.metric, repeats=args.repeats,
                                 seed=cfg.seed, feature_names=enc.features)
    out.write(json.dumps(rep.to_dict(), indent=2) + "\n" if cfg.format == "json" else rep.to_text())
    if cfg.out_dir is not None:
        spec = importance_spec(rep)
        cfg.write(cfg.output_path("importance.json"), json.dumps(rep.to_dict(), indent=2) + "\n")
        cfg.write(cfg.output_path("importance_bars.svg"), render_svg(spec))


COMMANDS = {
    "describe": cmd_describe,
    "clean": cmd_clean,
    "dates": cmd_dates,
    "plot": cmd_plot,
    "train": cmd_train,
    "evaluate": cmd_evaluate,
    "importance": cmd_importance,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.seed_given = "--seed" in argv or any(a.startswith("--seed=") for a in argv)
    cfg = CliConfig(args.csv, args.out_dir, getattr(args, "format", "text"), args.seed, args.overwrite)
    try:
        COMMANDS[args.command](cfg, args, stdout)
    except UsageError as exc:
        stderr.write(f"datakit: error: {exc}\n")
        return EXIT_USAGE
    except IngestError as exc:
        stderr.write(f"datakit: ingest error: {exc}\n")
        return EXIT_INGEST
    except (SchemaError, DataError) as exc:
        stderr.write(f"datakit: schema error: {exc}\n")
        return EXIT_SCHEMA
    except ModelFileError as exc:
        stderr.write(f"datakit: model file error: {exc}\n")
        return EXIT_MODEL
    return EXIT_OK


def main() -> None:
    sys.exit(run())
