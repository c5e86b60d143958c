"""
Description
================

Linear codes over GF(q) and the operations on them that the rest of the project builds on:
duals, syndromes, containment and the type spectrum.

A ``LinearCode`` always keeps its generator in reduced row echelon form with zero rows removed, so
two codes are equal exactly when their generators are equal.
"""
import functools
from fractions import Fraction
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from Algebra.finiteField import FieldSpec
from Algebra.gfMatrix import GFMatrix, rref, kernel
from Codes.wordEnumeration import allWords
from InfoTheory.typeClasses import TypeDistribution, typeCounts, typeClassSize


class LinearCode:
    """
    :Description:

    The row space of a generator matrix over GF(q).

    :param _generator: any matrix whose rows span the code. Dependent rows are fine.
    """

    def __init__(self, _generator: GFMatrix):
        reduced, codeRank, _ = rref(_generator)
        self.field: FieldSpec = _generator.field
        self.n: int = _generator.cols
        self.k: int = codeRank
        self.generator: GFMatrix = reduced.top(codeRank)

    @staticmethod
    def fromRows(_field: FieldSpec, _rows, _length: int = None) -> "LinearCode":
        rows = np.asarray(_rows, dtype=np.int64)
        if rows.size == 0:
            if _length is None:
                raise ValueError("The length of a code without generators MUST be given")
            rows = rows.reshape(0, _length)
        return LinearCode(GFMatrix(_field, rows))

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.generator == other.generator

    def __hash__(self):
        return hash(self.generator)

    def __repr__(self):
        return f"[{self.n},{self.k}] code over {self.field}"

    @functools.cached_property
    def parityCheck(self) -> GFMatrix:
        """Generator of the dual code, ``(n - k) x n``."""
        return kernel(self.generator)

    @property
    def size(self) -> int:
        return self.field.q ** self.k

    def encode(self, _message) -> np.ndarray:
        """``message @ G`` for one message or a batch of messages (rows)."""
        message = np.asarray(_message, dtype=np.int64)
        if message.shape[-1] != self.k:
            raise ValueError(f"Messages for {self} MUST have length {self.k}. Got {message.shape[-1]}")
        batch = np.atleast_2d(message)
        encoded = self.field.matmul(batch, self.generator.entries)
        return encoded if message.ndim > 1 else encoded[0]

    def codewords(self) -> np.ndarray:
        """All ``q^k`` codewords, ordered by message in lexicographic order."""
        messages = allWords(self.field.q, self.k, f"Codeword enumeration of {self}")
        return self.field.matmul(messages, self.generator.entries)


def dual(_code: LinearCode) -> LinearCode:
    return LinearCode(_code.parityCheck)


def syndrome(_code: LinearCode, _word) -> np.ndarray:
    """``H y^t`` for one word or a batch of words (rows). Zero exactly on codewords."""
    word = np.asarray(_word, dtype=np.int64)
    if word.shape[-1] != _code.n:
        raise ValueError(f"Words for {_code} MUST have length {_code.n}. Got {word.shape[-1]}")
    batch = np.atleast_2d(word)
    result = _code.field.matmul(batch, _code.parityCheck.entries.T)
    return result if word.ndim > 1 else result[0]


def contains(_outer: LinearCode, _inner: LinearCode) -> bool:
    """True if every codeword of ``_inner`` is a codeword of ``_outer``."""
    if _outer.field != _inner.field or _outer.n != _inner.n:
        raise ValueError(f"Cannot compare {_outer} and {_inner}")
    if _inner.k == 0:
        return True
    return not np.any(syndrome(_outer, _inner.generator.entries))


def containsWord(_code: LinearCode, _word) -> bool:
    return not np.any(syndrome(_code, _word))


def codeSum(_first: LinearCode, _second: LinearCode) -> LinearCode:
    if _first.field != _second.field or _first.n != _second.n:
        raise ValueError(f"Cannot add {_first} and {_second}")
    return LinearCode(_first.generator.stack(_second.generator))


def jointRank(_first: LinearCode, _second: LinearCode) -> int:
    """Dimension of ``first + second``."""
    return codeSum(_first, _second).k


def fullCode(_field: FieldSpec, _n: int) -> LinearCode:
    return LinearCode(GFMatrix.identity(_field, _n))


def zeroCode(_field: FieldSpec, _n: int) -> LinearCode:
    return LinearCode(GFMatrix.zeros(_field, 0, _n))


def repetitionCode(_field: FieldSpec, _n: int) -> LinearCode:
    return LinearCode(GFMatrix(_field, np.ones((1, _n), dtype=np.int64)))


def hammingCode(_field: FieldSpec, _redundancy: int) -> LinearCode:
    """
    :Description:

    The q-ary Hamming code of length ``(q^r - 1) / (q - 1)``: the dual of the code whose parity
    check columns are one representative (first nonzero entry 1) of every one dimensional subspace
    of GF(q)^r. For q = 2 and r = 3 this is the [7,4] Hamming code.

    :param _field: GF(q)
    :param _redundancy: r, at least 2

    :return: the Hamming code
    """
    if _redundancy < 2:
        raise ValueError(f"Hamming codes need redundancy at least 2. Got {_redundancy}")

    columns = []
    for word in allWords(_field.q, _redundancy, "Hamming parity check columns"):
        nonzero = np.nonzero(word)[0]
        if nonzero.size and word[nonzero[0]] == 1:
            columns.append(word)

    parityCheck = GFMatrix(_field, np.array(columns, dtype=np.int64).T)
    return LinearCode(kernel(parityCheck))


def minimumDistance(_code: LinearCode) -> int:
    """Minimum Hamming weight over the nonzero codewords (n + 1 for the zero code)."""
    if _code.k == 0:
        return _code.n + 1
    weights = np.count_nonzero(_code.codewords(), axis=1)
    return int(weights[weights > 0].min())


@dataclass(frozen=True)
class Spectrum:
    """
    Number of codewords of every type. Types that do not occur are absent from ``counts``.
    Includes the zero word.
    """
    n: int
    q: int
    counts: dict = field(default_factory=dict)

    def __getitem__(self, _type: TypeDistribution) -> int:
        return self.counts.get(_type, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def withoutZero(self) -> "Spectrum":
        """The spectrum of ``C \\ {0}``."""
        zeroType = TypeDistribution(self.n, (self.n,) + (0,) * (self.q - 1))
        counts = dict(self.counts)
        counts[zeroType] = counts.get(zeroType, 0) - 1
        if counts[zeroType] < 0:
            raise ValueError("Spectrum does not contain the zero word")
        if counts[zeroType] == 0:
            counts.pop(zeroType)
        return Spectrum(self.n, self.q, counts)

    def weightDistribution(self) -> list[int]:
        """Number of codewords of each Hamming weight 0..n."""
        distribution = [0] * (self.n + 1)
        for distributionType, count in self.counts.items():
            distribution[self.n - distributionType.counts[0]] += count
        return distribution

    def toFrame(self) -> pd.DataFrame:
        rows = [list(t.counts) + [count] for t, count in sorted(self.counts.items())]
        return pd.DataFrame(rows, columns=[f"n_{symbol}" for symbol in range(self.q)] + ["count"])


def spectrum(_code: LinearCode) -> Spectrum:
    """
    :Description:

    Enumerates the ``q^k`` codewords and counts them by type.

    :param _code: the code, ``q^k`` must fit in the budget

    :return: the type spectrum, zero word included
    """
    q = _code.field.q
    counts = typeCounts(_code.codewords(), q)
    uniqueCounts, multiplicity = np.unique(counts, axis=0, return_counts=True)
    return Spectrum(_code.n, q, {TypeDistribution(_code.n, tuple(int(c) for c in row)): int(mult)
                                 for row, mult in zip(uniqueCounts, multiplicity)})


def spectrumPremiseFactor(_code: LinearCode) -> Fraction:
    """
    :Description:

    The smallest ``a_n`` with ``N_Q(C \\ {0}) <= a_n q^{k-n} |T_Q|`` for every type Q, i.e. how far the
    spectrum of the code is from the scaled type class sizes. Codes with a factor close to 1 have a
    near binomial spectrum.

    :param _code: the code, ``q^k`` must fit in the budget

    :return: the exact factor (0 for the zero code)
    """
    q = _code.field.q
    factor = Fraction(0)
    for distributionType, count in spectrum(_code).withoutZero().counts.items():
        ratio = Fraction(count * q ** (_code.n - _code.k), typeClassSize(distributionType))
        factor = max(factor, ratio)
    return factor
