"""
Description
================

Decoders for the quotient codes.

Inner codes are decoded by minimum-entropy syndrome decoding: the error estimate is the word of
smallest empirical entropy in the received word's coset (ties broken by weight, then lexicographic
order). Only the coset of the subcode matters, so the decoded codeword is reduced to its coset
coordinates straight away.

The concatenated decoder runs the inner decoder block by block, maps every block back to an outer
symbol and finishes with the bounded distance decoder of the outer code.
"""
import numpy as np

from Codes.conjugatePair import ConjugatePair, QuotientCode, cosetOf, sideQuotient
from Codes.cosetLeaders import leaderTable
from Codes.linearCode import LinearCode
from Concat.concatenation import ConcatenatedPair
from Outer.outerPair import outerDecode, outerQuotient


def minEntropySyndromeDecode(_code: LinearCode, _word) -> np.ndarray:
    """The coset leader of the received word under the entropy ranking (the error estimate)."""
    return leaderTable(_code, "entropy").leader(_word)


def quotientDecode(_pair: ConjugatePair, _side: int, _word, quotient: QuotientCode = None) -> np.ndarray:
    """
    :Description:

    Decodes a word received through ``C_j / C_{other}^perp``.

    :param _pair: the conjugate pair
    :param _side: j, 1 or 2
    :param _word: the received word
    :param quotient: the quotient with the representatives the sender used. Defaults to
        ``sideQuotient(pair, side)``.

    :return: the message (coset coordinates)
    """
    code = _pair.code(_side)
    if quotient is None:
        quotient = sideQuotient(_pair, _side)
    error = minEntropySyndromeDecode(code, _word)
    return cosetOf(quotient, code.field.sub(_word, error))


def concatDecode(_cp: ConcatenatedPair, _side: int, _word) -> np.ndarray:
    """
    :Description:

    Two stage decoding of ``L_j / L_{other}^perp``.

    :param _cp: the concatenated pair
    :param _side: j, 1 or 2
    :param _word: the received word of length nN

    :return: the K outer message symbols, or None when the outer decoder fails
    """
    word = np.asarray(_word, dtype=np.int64)
    if word.shape != (_cp.length,):
        raise ValueError(f"Words for {_cp} MUST have length {_cp.length}. Got shape {word.shape}")

    blocks = word.reshape(_cp.N, _cp.n)
    symbols = np.zeros(_cp.N, dtype=np.int64)
    for i, maps in enumerate(_cp.inner):
        coordinates = quotientDecode(maps.pair, _side, blocks[i], quotient=maps.quotient(_side))
        symbols[i] = maps.symbolOf(_side, coordinates)

    outerWord = outerDecode(_cp.outer, _side, symbols)
    if outerWord is None:
        return None
    return cosetOf(outerQuotient(_cp.outer, _side), outerWord)
