"""
Description
================

Syndrome decoding through a table of coset leaders.

Every word of GF(q)^n is enumerated once, in lexicographic order, and ranked by a key. The
best ranked word in each coset of the code becomes that coset's leader. Two rankings are used:

* ``"entropy"``: smallest empirical entropy of the word, then smallest weight, then lexicographic
  order. This is minimum-entropy decoding.
* ``"weight"``: smallest Hamming weight, then lexicographic order. This is minimum distance
  decoding.
"""
import functools

import numpy as np
from scipy.special import entr

from Codes.linearCode import LinearCode, syndrome
from Codes.wordEnumeration import allWords, wordIndex
from InfoTheory.typeClasses import typeCounts

RANKINGS = ["entropy", "weight"]

# entropies are compared after rounding so that words of the same type always tie
ENTROPY_DECIMALS = 12


def wordEntropies(_words, _q: int) -> np.ndarray:
    """Empirical entropy (base q) of each word, rounded to ``ENTROPY_DECIMALS``."""
    counts = np.sort(typeCounts(_words, _q), axis=-1)
    length = counts.sum(axis=-1, keepdims=True)
    probabilities = counts / np.maximum(length, 1)
    entropy = entr(probabilities).sum(axis=-1) / np.log(_q)
    return np.round(entropy, ENTROPY_DECIMALS)


class CosetLeaderTable:
    """
    :Description:

    Leader of every coset of a code, indexed by syndrome.

    :param _code: the code, ``q^n`` must fit in the budget
    :param _ranking: one of ``RANKINGS``
    """

    def __init__(self, _code: LinearCode, _ranking: str = "entropy"):
        if _ranking not in RANKINGS:
            raise ValueError(f"Ranking MUST be one of {RANKINGS}. Got '{_ranking}'")

        q = _code.field.q
        words = allWords(q, _code.n, f"Coset leader table of {_code}")
        weights = np.count_nonzero(words, axis=1)
        order = np.arange(len(words))

        if _ranking == "entropy":
            ranked = np.lexsort((order, weights, wordEntropies(words, q)))
        else:
            ranked = np.lexsort((order, weights))

        keys = wordIndex(syndrome(_code, words), q)
        uniqueKeys, firstPosition = np.unique(keys[ranked], return_index=True)

        leaders = np.zeros((q ** (_code.n - _code.k), _code.n), dtype=np.int64)
        leaders[uniqueKeys] = words[ranked[firstPosition]]
        leaders.setflags(write=False)

        self.code: LinearCode = _code
        self.ranking: str = _ranking
        self.m_leaders = leaders

    def leader(self, _word) -> np.ndarray:
        """The leader of the coset of ``_word`` (or of each row of a batch)."""
        keys = wordIndex(syndrome(self.code, _word), self.code.field.q)
        return self.m_leaders[keys]

    def decode(self, _word) -> np.ndarray:
        """``y - leader(y)``, always a codeword."""
        return self.code.field.sub(_word, self.leader(_word))


@functools.lru_cache(maxsize=None)
def leaderTable(_code: LinearCode, _ranking: str = "entropy") -> CosetLeaderTable:
    """Builds the table once per code and ranking."""
    return CosetLeaderTable(_code, _ranking)


def boundedDistanceDecode(_code: LinearCode, _word, _radius: int) -> np.ndarray:
    """
    :Description:

    Minimum distance decoding that gives up beyond a radius.

    :param _code: the code
    :param _word: the received word
    :param _radius: the largest error weight to correct

    :return: the codeword within ``_radius`` of the word, or None
    """
    error = leaderTable(_code, "weight").leader(_word)
    if np.count_nonzero(error) > _radius:
        return None
    return _code.field.sub(_word, error)
