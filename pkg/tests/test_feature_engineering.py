import pytest
from hypothesis import given, strategies as st

from datakit.errors import TooManyClasses, UnknownColumn, WrongDType
from datakit.feature_engineering import (
    FillStrategy,
    drop_redundant,
    encode_categorical,
    fill_missing,
    fit_classes,
    format_dropped,
    label_decode,
    to_date,
)
from datakit.frame import DType, Frame
from datakit.structdata import missing_report
from datakit.timestamps import parse_timestamp


def test_drop_redundant_transactions(txn_frame):
    out, dropped = drop_redundant(txn_frame)
    assert dropped == ["CurrencyCode", "CountryCode"]
    assert format_dropped(dropped) == "Dropped ['CurrencyCode', 'CountryCode']"
    assert out.names == [n for n in txn_frame.names if n not in dropped]


def test_drop_redundant_cases():
    f = Frame.from_dict({"a": [1, 2], "b": ["x", "y"]})
    assert drop_redundant(f) == (f, [])
    g = Frame.from_dict({"a": [1, 2], "n": [None, None], "k": ["x", None]}, {"n": DType.FLOAT})
    assert drop_redundant(g)[1] == ["n", "k"]


small_cols = st.lists(st.one_of(st.none(), st.integers(0, 2)), min_size=3, max_size=3)


@given(st.lists(small_cols, min_size=1, max_size=5))
def test_drop_redundant_idempotent(cols):
    f = Frame.from_dict({f"c{i}": v for i, v in enumerate(cols)}, {f"c{i}": DType.INT for i in range(len(cols))})
    once, _ = drop_redundant(f)
    twice, again = drop_redundant(once)
    assert twice == once and again == []


def test_fill_mean_and_mode():
    f = Frame.from_dict({"x": [1.0, None, 3.0], "c": ["a", "a", "b", None][:3]})
    out = fill_missing(f)
    assert out["x"].values == (1.0, 2.0, 3.0)
    g = Frame.from_dict({"c": ["a", "a", "b", None]})
    assert fill_missing(g)["c"].values[-1] == "a"
    tie = Frame.from_dict({"c": ["b", "a", None]})
    assert fill_missing(tie)["c"].values[-1] == "a"


def test_fill_median_int_keeps_dtype():
    f = Frame.from_dict({"i": [1, 2, None, 10]})
    out = fill_missing(f, FillStrategy(numeric="median"))
    assert out["i"].dtype is DType.INT and out["i"].values == (1, 2, 2, 10)
    out = fill_missing(f, FillStrategy(numeric="mean"))
    assert out["i"].values[2] == 4  # mean 13/3 rounds to 4


def test_fill_skips_datetime_and_all_null(caplog):
    f = Frame.from_dict({"t": [parse_timestamp("2020-01-01"), None], "n": [None, None]},
                        {"n": DType.FLOAT})
    out = fill_missing(f)
    assert out == f
    assert "cannot fill 'n'" in caplog.text


@given(st.lists(st.one_of(st.none(), st.floats(-100, 100)), min_size=1, max_size=30),
       st.lists(st.one_of(st.none(), st.sampled_from("abc")), min_size=1, max_size=30))
def test_fill_properties(xs, cs):
    n = min(len(xs), len(cs))
    f = Frame.from_dict({"x": xs[:n], "c": cs[:n]}, {"x": DType.FLOAT, "c": DType.CATEGORICAL})
    out = fill_missing(f)
    for name in ("x", "c"):
        before, after = f[name], out[name]
        assert after.dtype is before.dtype
        assert all(a == b for a, b in zip(before.values, after.values) if a is not None)
        if before.non_null():
            assert dict((k, m) for k, m, _ in missing_report(out).rows)[name] == 0


def test_to_date():
    f = Frame.from_dict({"t": ["2018-11-15T02:18:49Z"], "bad": ["not a date"], "i": [1]})
    out = to_date(f, ["t", "bad"])
    assert out["t"].dtype is DType.DATETIME and out["t"].null_count == 0
    assert out["bad"].dtype is DType.DATETIME and out["bad"].null_count == 1
    with pytest.raises(WrongDType):
        to_date(f, ["i"])
    with pytest.raises(UnknownColumn):
        to_date(f, ["zz"])


def test_label_encoding():
    f = Frame.from_dict({"c": ["b", "a", "a"]})
    assert encode_categorical(f, ["c"], "label")["c"].values == (1, 0, 0)
    g = Frame.from_dict({"c": ["b", None]})
    assert encode_categorical(g, ["c"])["c"].values == (0, None)


def test_one_hot():
    f = Frame.from_dict({"k": [1, 2], "c": ["x", "y"]})
    out = encode_categorical(f, ["c"], "one_hot")
    assert out.names == ["k", "c_x", "c_y"]
    assert out["c_x"].values == (1, 0) and out["c_y"].values == (0, 1)


def test_encoding_errors():
    f = Frame.from_dict({"c": [f"v{i}" for i in range(1001)], "i": list(range(1001))})
    with pytest.raises(TooManyClasses):
        encode_categorical(f, ["c"], "one_hot")
    with pytest.raises(WrongDType):
        encode_categorical(f, ["i"])
    with pytest.raises(UnknownColumn):
        encode_categorical(f, ["nope"])


@given(st.lists(st.one_of(st.none(), st.text(min_size=1, max_size=3)), min_size=1, max_size=40))
def test_label_bijection_and_one_hot_rows(vals):
    f = Frame.from_dict({"c": vals}, {"c": DType.CATEGORICAL})
    classes = fit_classes(f["c"])
    enc = encode_categorical(f, ["c"])["c"]
    assert sorted(set(enc.non_null())) == list(range(len(classes)))
    assert label_decode(enc, classes).values == f["c"].values
    hot = encode_categorical(f, ["c"], "one_hot")
    for i, v in enumerate(vals):
        total = sum(c.values[i] for c in hot.columns)
        assert total == (0 if v is None else 1)
