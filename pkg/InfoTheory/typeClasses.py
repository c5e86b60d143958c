"""
Description
================

Types (empirical distributions) of words of length n over an alphabet of size q.

A type is stored as its count vector, so ``TypeDistribution(7, (4, 3))`` is the type of every
binary word of length 7 with three ones. The number of types is ``C(n + q - 1, q - 1)`` and the
type class of Q holds ``n! / prod(n_a!)`` words.
"""
import itertools
import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, order=True)
class TypeDistribution:
    n: int
    counts: tuple

    def __post_init__(self):
        if any(c < 0 for c in self.counts) or sum(self.counts) != self.n:
            raise ValueError(f"Counts {self.counts} are not a type of length {self.n}")

    @property
    def q(self) -> int:
        return len(self.counts)

    @property
    def probabilities(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=float) / self.n

    def __str__(self):
        return "(" + ", ".join(f"{c}/{self.n}" for c in self.counts) + ")"


def typeOf(_word, _q: int) -> TypeDistribution:
    word = np.asarray(_word, dtype=np.int64)
    counts = np.bincount(word, minlength=_q)
    if counts.size != _q:
        raise ValueError(f"Word has symbols outside 0..{_q - 1}")
    return TypeDistribution(int(word.size), tuple(int(c) for c in counts))


def typeCounts(_words, _q: int) -> np.ndarray:
    """Count vectors for a batch of words, shape ``(len(words), q)``."""
    words = np.asarray(_words, dtype=np.int64)
    return np.stack([(words == symbol).sum(axis=-1) for symbol in range(_q)], axis=-1)


def numberOfTypes(_n: int, _q: int) -> int:
    """``|P_n| = C(n + q - 1, q - 1)``."""
    return math.comb(_n + _q - 1, _q - 1)


def enumerateTypes(_n: int, _q: int) -> list[TypeDistribution]:
    """
    :Description:

    Lists every type of length n over q symbols (stars and bars). The order is lexicographic in the
    count vector, starting from ``(0, ..., 0, n)``.

    :param _n: the word length
    :param _q: the alphabet size

    :return: the ``numberOfTypes(n, q)`` types
    """
    if _n < 0 or _q < 1:
        raise ValueError(f"Need n >= 0 and q >= 1. Got n={_n}, q={_q}")

    types = []
    for bars in itertools.combinations(range(_n + _q - 1), _q - 1):
        edges = (-1,) + bars + (_n + _q - 1,)
        counts = tuple(edges[i + 1] - edges[i] - 1 for i in range(_q))
        types.append(TypeDistribution(_n, counts))
    return sorted(types)


def typeClassSize(_type: TypeDistribution) -> int:
    """Exact multinomial ``n! / prod(n_a!)``."""
    size = math.factorial(_type.n)
    for count in _type.counts:
        size //= math.factorial(count)
    return size
