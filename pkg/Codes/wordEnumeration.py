"""
Exhaustive enumeration of vectors over GF(q), checked against the configured budget.
"""
import numpy as np

import config


def allWords(_q: int, _length: int, _what: str = "Word enumeration") -> np.ndarray:
    """
    Every vector of GF(q)^length as the rows of an array, in lexicographic order with the first
    coordinate most significant. ``allWords(q, 0)`` is a single empty row.
    """
    count = _q ** _length
    config.checkBudget(count, _what)
    indices = np.arange(count, dtype=np.int64)
    places = _q ** np.arange(_length - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // places[None, :]) % _q


def wordIndex(_words, _q: int) -> np.ndarray:
    """Inverse of ``allWords``: the position of each word in the lexicographic order."""
    words = np.asarray(_words, dtype=np.int64)
    places = _q ** np.arange(words.shape[-1] - 1, -1, -1, dtype=np.int64)
    return words @ places
