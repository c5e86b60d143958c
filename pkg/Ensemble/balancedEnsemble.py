"""
Description
================

The balanced ensemble of conjugate pairs generated by a matrix T of multiplicative order ``q^n - 1``
(normally the companion matrix of a primitive polynomial).

Member i is the pair

* ``C1 = span of the first k1 rows of T^i``
* ``C2 = span of the last k2 rows of (T^{-i})^t``

and the first ``n - k2`` rows of ``T^i`` span ``C2^perp``, which is why every member is conjugate.
Every nonzero word lies in exactly ``q^{k_j} - 1`` members of family j, counted over indices.
"""
import threading

import numpy as np

import config
from Algebra.gfMatrix import GFMatrix, matPower, hasOrder, inverse
from Codes.conjugatePair import ConjugatePair, makePair
from Codes.linearCode import LinearCode, dual
from Codes.wordEnumeration import wordIndex
from exceptions import VerificationError


class BalancedEnsemble:
    """
    :Description:

    Indexed family ``B(T)`` of ``q^n - 1`` conjugate pairs. Members are built on first use and cached;
    the cache is safe to use from several threads.

    :param _T: the ``n x n`` generating matrix
    :param _k1: dimension of the C1 codes
    :param _k2: dimension of the C2 codes
    :param checkOrder: verify that T has order ``q^n - 1``
    """

    def __init__(self, _T: GFMatrix, _k1: int, _k2: int, checkOrder: bool = True):
        if not _T.isSquare():
            raise ValueError(f"T MUST be square. Got shape {_T.shape}")
        n = _T.rows
        if not 0 <= n - _k2 <= _k1 <= n:
            raise ValueError(f"Dimensions MUST satisfy 0 <= n - k2 <= k1 <= n. Got n={n}, k1={_k1}, k2={_k2}")

        self.field = _T.field
        self.T: GFMatrix = _T
        self.n: int = n
        self.k1: int = _k1
        self.k2: int = _k2
        self.size: int = self.field.q ** n - 1

        if checkOrder and not hasOrder(_T, self.size):
            raise ValueError(f"T MUST have multiplicative order {self.size}")

        self.m_inverse = inverse(_T)
        self.m_members: dict[int, ConjugatePair] = {}
        self.m_lock = threading.Lock()

    @property
    def k(self) -> int:
        return self.k1 + self.k2 - self.n

    def __repr__(self):
        return f"Balanced ensemble of {self.size} ([{self.n},{self.k1}], [{self.n},{self.k2}]) pairs over {self.field}"

    def __checkIndex__(self, _index: int):
        if not 0 <= _index < self.size:
            raise IndexError(f"Member index MUST lie in [0, {self.size - 1}]. Got {_index}")

    def forwardPower(self, _index: int) -> GFMatrix:
        """``T^i``."""
        self.__checkIndex__(_index)
        return matPower(self.T, _index)

    def dualPower(self, _index: int) -> GFMatrix:
        """``(T^{-i})^t``."""
        self.__checkIndex__(_index)
        return matPower(self.m_inverse, _index).transpose()

    def member(self, _index: int) -> ConjugatePair:
        self.__checkIndex__(_index)
        with self.m_lock:
            cached = self.m_members.get(_index)
        if cached is not None:
            return cached

        forward = self.forwardPower(_index)
        backward = self.dualPower(_index)
        c1 = LinearCode(forward.top(self.k1))
        c2 = LinearCode(backward.bottom(self.k2))
        try:
            pair = makePair(c1, c2)
        except ValueError as e:
            raise VerificationError(f"Member {_index} is not conjugate: {e}")

        # the first n - k2 rows of T^i span C2^perp
        if dual(c2) != LinearCode(forward.top(self.n - self.k2)):
            raise VerificationError(f"The first {self.n - self.k2} rows of T^{_index} do not span C2^perp")

        with self.m_lock:
            return self.m_members.setdefault(_index, pair)


def buildEnsemble(_T: GFMatrix, _k1: int, _k2: int) -> BalancedEnsemble:
    return BalancedEnsemble(_T, _k1, _k2)


def member(_ensemble: BalancedEnsemble, _index: int) -> ConjugatePair:
    return _ensemble.member(_index)


def verifyBalanced(_ensemble: BalancedEnsemble, _side: int) -> int:
    """
    :Description:

    Counts, for every nonzero word, how many members of family ``_side`` contain it. All counts must
    agree.

    :param _ensemble: the ensemble
    :param _side: 1 for the C1 family, 2 for the C2 family

    :return: the common count ``V = q^{k_j} - 1``

    :raises VerificationError: if two words are contained in different numbers of members
    """
    q = _ensemble.field.q
    dimension = _ensemble.k1 if _side == 1 else _ensemble.k2
    config.checkBudget(_ensemble.size * q ** dimension, f"Balancedness check of family {_side}")

    membership = np.zeros(q ** _ensemble.n, dtype=np.int64)
    for index in range(_ensemble.size):
        words = _ensemble.member(index).code(_side).codewords()
        membership[wordIndex(words, q)] += 1

    nonzero = membership[1:]
    if nonzero.size and np.any(nonzero != nonzero[0]):
        raise VerificationError(f"Family {_side} is not balanced: membership counts range from "
                                f"{nonzero.min()} to {nonzero.max()}")
    return int(nonzero[0]) if nonzero.size else 0


def orbitIsInjective(_ensemble: BalancedEnsemble, _word) -> bool:
    """True if ``i -> y T^i`` takes ``q^n - 1`` distinct values for the nonzero word y."""
    field = _ensemble.field
    current = np.asarray(_word, dtype=np.int64)
    if not np.any(current):
        raise ValueError("The orbit of the zero word is trivial")

    seen = set()
    for _ in range(_ensemble.size):
        seen.add(current.tobytes())
        current = field.matmul(current[None, :], _ensemble.T.entries)[0]
    return len(seen) == _ensemble.size

