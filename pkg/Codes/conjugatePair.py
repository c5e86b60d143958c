"""
Description
================

Conjugate (CSS) code pairs and the quotient codes they transmit over.

A pair ``(C1, C2)`` of codes of length n is conjugate when ``C2^perp`` lies in ``C1`` (equivalently
``C1^perp`` lies in ``C2``). It carries ``k = k1 + k2 - n`` symbols: side 1 sends cosets of
``C1 / C2^perp`` and side 2 sends cosets of ``C2 / C1^perp``.

A coset is sent by adding a uniformly random element of the subcode to a fixed representative
(``quotientEncode``). The receiver only has to find the coset (``cosetOf``), not the codeword.
"""
import functools
from dataclasses import dataclass

import numpy as np

from Algebra.gfMatrix import GFMatrix, rref, inverse
from Codes.linearCode import LinearCode, dual, contains, syndrome


@dataclass(frozen=True)
class ConjugatePair:
    c1: LinearCode
    c2: LinearCode

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def k(self) -> int:
        return self.c1.k + self.c2.k - self.c1.n

    @property
    def field(self):
        return self.c1.field

    def code(self, _side: int) -> LinearCode:
        return self.__side__(_side)[0]

    def other(self, _side: int) -> LinearCode:
        return self.__side__(_side)[1]

    def __side__(self, _side: int):
        if _side == 1:
            return self.c1, self.c2
        if _side == 2:
            return self.c2, self.c1
        raise ValueError(f"Side MUST be 1 or 2. Got {_side}")

    def __repr__(self):
        return f"Conjugate pair ([{self.n},{self.c1.k}], [{self.n},{self.c2.k}]) over {self.field}"


def makePair(_c1: LinearCode, _c2: LinearCode) -> ConjugatePair:
    """
    :Description:

    Checks the conjugacy condition and builds the pair.

    :param _c1: the first code
    :param _c2: the second code, same field and length

    :return: the pair

    :raises ValueError: when the dimensions cannot carry information or ``C2^perp`` is not in ``C1``
    """
    if _c1.field != _c2.field or _c1.n != _c2.n:
        raise ValueError(f"Cannot pair {_c1} with {_c2}")
    if _c1.k + _c2.k < _c1.n:
        raise ValueError(f"k1 + k2 MUST be at least n. Got k1={_c1.k}, k2={_c2.k}, n={_c1.n}")
    if not contains(_c1, dual(_c2)):
        raise ValueError(f"The dual of C2 is not contained in C1 for {_c1} and {_c2}")
    return ConjugatePair(_c1, _c2)


class QuotientCode:
    """
    :Description:

    The quotient ``C / B`` for a subcode B of C, with a fixed set of coset representatives.

    The representatives plus a basis of B form a basis of C. A word of C is decoded to its coset by
    reading off coordinates on a set of information columns of that basis.

    :param _code: C
    :param _subcode: B, contained in C
    :param _representatives: ``(dim C - dim B) x n`` rows of C, independent modulo B
    """

    def __init__(self, _code: LinearCode, _subcode: LinearCode, _representatives: GFMatrix):
        if not contains(_code, _subcode):
            raise ValueError(f"{_subcode} is not a subcode of {_code}")
        if _representatives.rows != _code.k - _subcode.k or _representatives.cols != _code.n:
            raise ValueError(f"Need {_code.k - _subcode.k} representatives of length {_code.n}. "
                             f"Got shape {_representatives.shape}")
        if _representatives.rows and np.any(syndrome(_code, _representatives.entries)):
            raise ValueError("Coset representatives MUST be codewords")

        basis = _representatives.stack(_subcode.generator)
        _, basisRank, pivots = rref(basis)
        if basisRank != _code.k:
            raise ValueError("Coset representatives MUST be independent modulo the subcode")

        self.code: LinearCode = _code
        self.subcode: LinearCode = _subcode
        self.representatives: GFMatrix = _representatives
        self.m_columns = np.asarray(pivots, dtype=np.int64)
        self.m_decoder = inverse(GFMatrix(_code.field, basis.entries[:, self.m_columns])).entries

    @property
    def k(self) -> int:
        return self.representatives.rows

    @property
    def field(self):
        return self.code.field

    def __repr__(self):
        return f"Quotient {self.code} / {self.subcode}"


def quotient(_code: LinearCode, _subcode: LinearCode) -> QuotientCode:
    """
    Builds ``C / B`` with deterministic representatives: the rows of C's reduced generator, in
    order, that are not in the span of B and the rows taken before them.
    """
    field = _code.field
    chosen = []
    current = _subcode.generator
    currentRank = _subcode.k
    for row in _code.generator.entries:
        candidate = current.stack(GFMatrix(field, row[None, :]))
        candidateRank = rref(candidate)[1]
        if candidateRank > currentRank:
            chosen.append(row)
            current = candidate
            currentRank = candidateRank

    representatives = GFMatrix(field, np.array(chosen, dtype=np.int64).reshape(len(chosen), _code.n))
    return QuotientCode(_code, _subcode, representatives)


@functools.lru_cache(maxsize=None)
def sideQuotient(_pair: ConjugatePair, _side: int) -> QuotientCode:
    """``C_j / C_{other}^perp`` with representatives from ``quotient``."""
    return quotient(_pair.code(_side), dual(_pair.other(_side)))


def quotientEncode(_quotient: QuotientCode, _message, _rng: np.random.Generator, scramble: bool = True) -> np.ndarray:
    """
    :Description:

    Sends a message as a random element of its coset: ``message @ reps + b`` with b uniform on the
    subcode. With ``scramble=False`` b is zero.

    :param _quotient: the quotient code
    :param _message: k symbols of GF(q)
    :param _rng: the generator the scramble is drawn from
    :param scramble: whether to add the random subcode element

    :return: the transmitted word
    """
    field = _quotient.field
    message = np.asarray(_message, dtype=np.int64)
    if message.shape != (_quotient.k,):
        raise ValueError(f"Messages for {_quotient} MUST have length {_quotient.k}. Got shape {message.shape}")

    word = field.matmul(message[None, :], _quotient.representatives.entries)[0]
    if scramble and _quotient.subcode.k:
        coefficients = _rng.integers(0, field.q, size=_quotient.subcode.k)
        word = field.add(word, _quotient.subcode.encode(coefficients))
    return word


def cosetOf(_quotient: QuotientCode, _word) -> np.ndarray:
    """
    The message whose coset contains the codeword ``_word``. Works on a batch of words (rows) too.

    :raises ValueError: if a word is not in the code
    """
    word = np.asarray(_word, dtype=np.int64)
    batch = np.atleast_2d(word)
    if np.any(syndrome(_quotient.code, batch)):
        raise ValueError(f"Word is not a codeword of {_quotient.code}")

    coordinates = _quotient.field.matmul(batch[:, _quotient.m_columns], _quotient.m_decoder)
    messages = coordinates[:, :_quotient.k]
    return messages if word.ndim > 1 else messages[0]
