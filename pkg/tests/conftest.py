import sys

import pytest

from datakit.frame import DType, Frame
from datakit.synthetic import transactions
from datakit.timestamps import parse_timestamp


@pytest.fixture
def two_txn_frame():
    """Two sample transactions with a parsed timestamp column."""
    return Frame.from_dict(
        {
            "AccountId": ["AccountId_3957", "AccountId_4841"],
            "SubscriptionId": ["SubscriptionId_887", "SubscriptionId_3829"],
            "CustomerId": ["CustomerId_4406", "CustomerId_4406"],
            "ProviderId": ["ProviderId_6", "ProviderId_4"],
            "ProductId": ["ProductId_10", "ProductId_6"],
            "ProductCategory": ["airtime", "financial_services"],
            "ChannelId": ["ChannelId_3", "ChannelId_2"],
            "Amount": [1000.0, -20.0],
            "Value": [1000, 20],
            "TransactionStartTime": [parse_timestamp("2018-11-15T02:18:49Z"),
                                     parse_timestamp("2018-11-15T02:19:08Z")],
            "PricingStrategy": [2, 2],
            "FraudResult": [0, 0],
        },
        dtypes={"Amount": DType.FLOAT},
    )


@pytest.fixture(scope="session")
def txn_frame():
    return transactions(400, seed=7)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
