from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import UnknownColumn
from ..frame import Frame
from ..rng import SplitMix64, permutation


@dataclass(frozen=True)
class SplitSpec:
    test_fraction: float = 0.3
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 < self.test_fraction < 1:
            raise ValueError(f"test_fraction must lie in (0, 1), got {self.test_fraction}")

    def test_size(self, n: int) -> int:
        # exact rational product: 10 * 0.3 must give 3, not 4
        return math.ceil(Fraction(self.test_fraction) * n)


def split_indices(n: int, test_fraction: float, seed: int = 0) -> tuple[list[int], list[int]]:
    """(train, test) row indices, each in shuffled order."""
    k = SplitSpec(test_fraction, seed).test_size(n)
    perm = permutation(n, SplitMix64(seed))
    return perm[k:], perm[:k]


def train_test_split(frame: Frame, target: str, test_fraction: float = 0.3, seed: int = 0) -> tuple[Frame, Frame]:
    if target not in frame:
        raise UnknownColumn(target)
    train, test = split_indices(frame.n_rows, test_fraction, seed)
    return frame.take(train), frame.take(test)
