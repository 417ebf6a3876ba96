"""Seeded generators for transaction-style datasets.

``transactions`` mimics the column layout of a mobile-money fraud table:
five numeric columns, eleven categorical ones (one of them ISO timestamp
text), two constant columns, and a binary ``FraudResult`` target that depends
on ``Value`` and ``Amount`` only.
"""

from __future__ import annotations

from .frame import Column, DType, Frame
from .rng import SplitMix64, permutation
from .timestamps import Timestamp

START = Timestamp.from_civil(2018, 11, 15)
SPAN_DAYS = 120

CATEGORIES = (
    "airtime", "financial_services", "utility_bill", "data_bundles", "tv",
    "transport", "ticket", "movies", "other",
)

# class-conditional means/sds of the two informative features
VALUE_DIST = {0: (1000.0, 400.0), 1: (2200.0, 400.0)}
AMOUNT_DIST = {0: (800.0, 500.0), 1: (2000.0, 500.0)}

TRANSACTION_COLUMNS = (
    "TransactionId", "BatchId", "AccountId", "SubscriptionId", "CustomerId", "CurrencyCode",
    "CountryCode", "ProviderId", "ProductId", "ProductCategory", "ChannelId", "Amount", "Value",
    "TransactionStartTime", "PricingStrategy", "FraudResult",
)


def transactions(n: int = 2000, seed: int = 0, fraud_rate: float = 0.1, as_text_dates: bool = True) -> Frame:
    rng = SplitMix64(seed)
    ids = permutation(10 * n, rng)[:n]
    labels = [int(rng.uniform() < fraud_rate) for _ in range(n)]
    cols: dict[str, list] = {name: [] for name in TRANSACTION_COLUMNS}
    for i, y in enumerate(labels):
        acct = rng.below(max(2, n // 25))
        cust = rng.below(max(2, n // 25))
        cols["TransactionId"].append(f"TransactionId_{ids[i] + 1}")
        cols["BatchId"].append(f"BatchId_{rng.below(10 * n) + 1}")
        cols["AccountId"].append(f"AccountId_{acct + 1}")
        cols["SubscriptionId"].append(f"SubscriptionId_{acct + 1}")
        cols["CustomerId"].append(f"CustomerId_{cust + 1}")
        cols["CurrencyCode"].append("UGX")
        cols["CountryCode"].append(256)
        cols["ProviderId"].append(f"ProviderId_{rng.below(6) + 1}")
        cols["ProductId"].append(f"ProductId_{rng.below(23) + 1}")
        cols["ProductCategory"].append(CATEGORIES[rng.below(len(CATEGORIES))])
        cols["ChannelId"].append(f"ChannelId_{rng.below(4) + 1}")
        mu, sd = AMOUNT_DIST[y]
        cols["Amount"].append(round(mu + sd * rng.normal(), 2))
        mu, sd = VALUE_DIST[y]
        cols["Value"].append(max(2, int(round(mu + sd * rng.normal()))))
        ts = Timestamp(START.epoch_s + rng.below(SPAN_DAYS * 86400))
        cols["TransactionStartTime"].append(ts.isoformat() if as_text_dates else ts)
        cols["PricingStrategy"].append((0, 1, 2, 2, 2, 4)[rng.below(6)])
        cols["FraudResult"].append(y)

    dtypes = {
        "CountryCode": DType.INT, "Amount": DType.FLOAT, "Value": DType.INT,
        "PricingStrategy": DType.INT, "FraudResult": DType.INT,
        "TransactionStartTime": DType.CATEGORICAL if as_text_dates else DType.DATETIME,
    }
    return Frame(tuple(
        Column(name, dtypes.get(name, DType.CATEGORICAL), tuple(vals)) for name, vals in cols.items()
    ))


FRAUD_FEATURES = ("ProviderId", "ProductCategory", "ChannelId", "Amount", "Value", "PricingStrategy")


def fraud_dataset(n: int = 2000, seed: int = 0, fraud_rate: float = 0.1) -> Frame:
    """Model-ready subset: two informative numeric features plus four uninformative ones."""
    return transactions(n, seed, fraud_rate).select([*FRAUD_FEATURES, "FraudResult"])
