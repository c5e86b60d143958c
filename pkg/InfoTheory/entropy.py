"""
Description
================

Entropy and relative entropy of distributions on q symbols, measured in base q by default (so the
entropy of anything on GF(q) lies in [0, 1]).
"""
import math

import numpy as np
from scipy.special import entr, rel_entr


def __logBase__(_q: int, base) -> float:
    return math.log(_q if base is None else base)


def entropy(_distribution, base: float = None) -> float:
    """
    ``H(P) = -sum P(a) log P(a)``, with ``0 log 0 = 0``.
    The logarithm is base ``len(P)`` unless ``base`` is given.
    """
    distribution = np.asarray(_distribution, dtype=float)
    return float(entr(distribution).sum() / __logBase__(distribution.size, base))


def divergence(_first, _second, base: float = None) -> float:
    """
    :Description:

    Relative entropy ``D(P || Q) = sum P(a) log(P(a) / Q(a))``.

    :param _first: P
    :param _second: Q, same length
    :param base: the logarithm base, defaults to the alphabet size

    :return: the divergence, ``math.inf`` when P puts mass where Q has none
    """
    first = np.asarray(_first, dtype=float)
    second = np.asarray(_second, dtype=float)
    if first.shape != second.shape:
        raise ValueError(f"Distributions MUST have the same length. Got {first.size} and {second.size}")

    value = float(rel_entr(first, second).sum())
    if math.isinf(value):
        return math.inf
    return value / __logBase__(first.size, base)


def qEntropy(_x: float, _q: int) -> float:
    """The binary entropy of x measured in base q, used in the union bound relaxation."""
    if _x <= 0 or _x >= 1:
        return 0.0
    return float((entr(_x) + entr(1 - _x)) / math.log(_q))
