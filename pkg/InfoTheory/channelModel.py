"""
Additive noise channels over GF(q): the channel adds a symbol drawn from W to every transmitted
symbol independently.
"""
from dataclasses import dataclass

import numpy as np

PROBABILITY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ChannelModel:
    probabilities: tuple

    def __post_init__(self):
        values = np.asarray(self.probabilities, dtype=float)
        if values.ndim != 1 or values.size < 2:
            raise ValueError(f"A channel needs a probability for each of at least 2 symbols. Got {self.probabilities}")
        if np.any(values < 0) or abs(values.sum() - 1) > PROBABILITY_TOLERANCE:
            raise ValueError(f"Channel probabilities MUST be non negative and sum to 1. Got {self.probabilities}")
        object.__setattr__(self, "probabilities", tuple(float(v) for v in values))

    @property
    def q(self) -> int:
        return len(self.probabilities)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.probabilities, dtype=float)

    @staticmethod
    def symmetric(_q: int, _errorProbability: float) -> "ChannelModel":
        """Keeps the symbol with probability ``1 - p`` and adds each nonzero symbol with ``p / (q - 1)``."""
        return ChannelModel((1 - _errorProbability,) + (_errorProbability / (_q - 1),) * (_q - 1))

    def __str__(self):
        return "(" + ", ".join(f"{p:g}" for p in self.probabilities) + ")"
