from __future__ import annotations

from dataclasses import dataclass
from random import Random

import numpy as np

_U64_MAX = 2**64


@dataclass(frozen=True)
class Seed:
    value: int
    """
    The user-supplied seed. It may be signed and have any range.
    """

    def to_u64(self) -> int:
        """
        The seed as a 64bit unsigned integer. Out-of-range values are mapped into
        range deterministically.
        """
        if 0 <= self.value < _U64_MAX:
            return self.value
        return Random(self.value).randint(0, _U64_MAX - 1)

    def stream(self, index: int) -> np.random.Generator:
        """
        The counter-based stream of sample `index`. Streams depend only on the seed and
        the index, never on which thread draws them.
        """
        return np.random.default_rng(
            np.random.SeedSequence(self.to_u64(), spawn_key=(index,))
        )

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(self.to_u64()))
