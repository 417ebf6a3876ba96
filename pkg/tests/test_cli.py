import io
import json
import xml.etree.ElementTree as ET

import pytest

from datakit.cli import run
from datakit.csvio import read_csv, write_csv
from datakit.synthetic import fraud_dataset, transactions


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def txn_csv(tmp_path_factory):
    p = tmp_path_factory.mktemp("data") / "txn.csv"
    p.write_bytes(write_csv(transactions(300, seed=1)))
    return p


@pytest.fixture(scope="module")
def fraud_csv(tmp_path_factory):
    p = tmp_path_factory.mktemp("data") / "fraud.csv"
    p.write_bytes(write_csv(fraud_dataset(600, seed=3)))
    return p


def test_describe_json(txn_csv):
    code, out, _ = call("describe", txn_csv, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert list(doc)[:3] == ["head", "tail", "random"]
    assert doc["shape"] == [300, 16]


def test_describe_md_writes_file(txn_csv, tmp_path):
    code, out, _ = call("describe", txn_csv, "--out-dir", tmp_path)
    assert code == 0 and "## Summary statistics" in out
    assert (tmp_path / "describe.md").read_text() == out


def test_clean_prints_dropped(txn_csv, tmp_path):
    code, out, _ = call("clean", txn_csv, "--out-dir", tmp_path)
    assert code == 0
    assert out == "Dropped ['CurrencyCode', 'CountryCode']\n"
    cleaned = read_csv(tmp_path / "txn_clean.csv")
    assert "CurrencyCode" not in cleaned and cleaned.n_rows == 300


def test_overwrite_refused(txn_csv, tmp_path):
    assert call("clean", txn_csv, "--out-dir", tmp_path)[0] == 0
    code, _, err = call("clean", txn_csv, "--out-dir", tmp_path)
    assert code == 2 and "overwrite" in err
    assert call("clean", txn_csv, "--out-dir", tmp_path, "--overwrite")[0] == 0


def test_dates(txn_csv, tmp_path):
    code, _, _ = call("dates", txn_csv, "--cols", "TransactionStartTime", "--out-dir", tmp_path)
    assert code == 0
    f = read_csv(tmp_path / "txn_dates.csv")
    assert "TransactionStartTime_dow" in f and "TransactionStartTime" not in f
    assert call("dates", txn_csv, "--cols", "Amount", "--out-dir", tmp_path / "x")[0] == 4


@pytest.mark.parametrize("extra,stem", [
    (["--kind", "count", "--cols", "ChannelId"], "count_ChannelId"),
    (["--kind", "catbox", "--target", "FraudResult"], "catbox_ProductCategory"),
    (["--kind", "hist", "--bins", "5"], "hist_Amount"),
    (["--kind", "box", "--cols", "Value"], "box_Value"),
    (["--kind", "time", "--time-col", "TransactionStartTime"], "time_Value"),
])
def test_plot_outputs(txn_csv, tmp_path, extra, stem):
    code, _, err = call("plot", txn_csv, "--out-dir", tmp_path, *extra)
    assert code == 0, err
    assert json.loads((tmp_path / f"{stem}.json").read_text())["kind"]
    assert ET.parse(tmp_path / f"{stem}.svg").getroot().tag.endswith("svg")


def test_plot_usage_errors(txn_csv, tmp_path):
    assert call("plot", txn_csv, "--kind", "catbox", "--out-dir", tmp_path)[0] == 2
    assert call("plot", txn_csv, "--kind", "time", "--out-dir", tmp_path)[0] == 2
    assert call("plot", txn_csv, "--kind", "pie")[0] == 2


def test_train_then_evaluate_reproduces_report(fraud_csv, tmp_path):
    code, train_out, err = call("train", fraud_csv, "--target", "FraudResult", "--model", "forest",
                                "--trees", "15", "--seed", "4", "--out-dir", tmp_path)
    assert code == 0, err
    assert "Accuracy is" in train_out
    code, eval_out, _ = call("evaluate", fraud_csv, "--target", "FraudResult",
                             "--model-file", tmp_path / "model.json")
    assert code == 0 and eval_out == train_out
    code, js, _ = call("evaluate", fraud_csv, "--target", "FraudResult", "--format", "json",
                       "--model-file", tmp_path / "model.json")
    assert json.loads(js) == json.loads((tmp_path / "report.json").read_text())


def test_train_deterministic(fraud_csv, tmp_path):
    for d in ("a", "b"):
        assert call("train", fraud_csv, "--target", "FraudResult", "--model", "logistic",
                    "--out-dir", tmp_path / d)[0] == 0
    assert (tmp_path / "a" / "model.json").read_bytes() == (tmp_path / "b" / "model.json").read_bytes()


def test_importance(fraud_csv, tmp_path):
    assert call("train", fraud_csv, "--target", "FraudResult", "--model", "tree", "--out-dir", tmp_path)[0] == 0
    code, out, _ = call("importance", fraud_csv, "--target", "FraudResult", "--repeats", "2",
                        "--model-file", tmp_path / "model.json", "--format", "json",
                        "--out-dir", tmp_path, "--metric", "auc")
    assert code == 0
    assert json.loads(out)["metric"] == "auc"
    assert (tmp_path / "importance_bars.svg").exists()


def test_exit_codes(txn_csv, fraud_csv, tmp_path):
    assert call("train", txn_csv, "--target", "Missing", "--model", "tree", "--out-dir", tmp_path)[0] == 4
    assert call("describe", tmp_path / "nope.csv")[0] == 3
    ragged = tmp_path / "ragged.csv"
    ragged.write_text("a,b\n1\n")
    assert call("describe", ragged)[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert call("evaluate", fraud_csv, "--target", "FraudResult", "--model-file", bad)[0] == 5
    assert call()[0] == 2
    assert call("train", fraud_csv, "--model", "tree")[0] == 2
