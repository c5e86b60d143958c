"""
Description
================

Generalized Reed-Solomon codes over GF(Q) and their bounded distance decoder.

``GRS(alpha, v, K)`` is the set of words ``(v_1 f(alpha_1), ..., v_N f(alpha_N))`` for polynomials f
of degree below K, with distinct evaluation points ``alpha_i`` and nonzero column multipliers
``v_i``. Its dual is ``GRS(alpha, v', N - K)`` with ``v'_i = 1 / (v_i prod_{j != i} (alpha_i - alpha_j))``.

Decoding is Peterson-Gorenstein-Zierler on the syndromes ``S_s = sum_i y_i v'_i alpha_i^s``.
"""
import functools

import numpy as np

from Algebra.finiteField import FieldSpec
from Algebra.gfMatrix import GFMatrix, rank, solve
from Codes.linearCode import LinearCode


class GrsCode:
    """
    :Description:

    A generalized Reed-Solomon code.

    :param _field: GF(Q)
    :param _points: N distinct nonzero evaluation points
    :param _multipliers: N nonzero column multipliers
    :param _dimension: K, with ``0 <= K <= N``
    """

    def __init__(self, _field: FieldSpec, _points, _multipliers, _dimension: int):
        points = np.asarray(_points, dtype=np.int64)
        multipliers = np.asarray(_multipliers, dtype=np.int64)
        length = points.size

        if multipliers.shape != points.shape:
            raise ValueError(f"Need one multiplier per point. Got {multipliers.size} for {length} points")
        if np.unique(points).size != length or np.any(points == 0):
            raise ValueError("Evaluation points MUST be distinct and nonzero")
        if np.any(multipliers == 0):
            raise ValueError("Column multipliers MUST be nonzero")
        if not 0 <= _dimension <= length or length > _field.q - 1:
            raise ValueError(f"Need 0 <= K <= N <= Q - 1. Got K={_dimension}, N={length}, Q={_field.q}")

        points.setflags(write=False)
        multipliers.setflags(write=False)
        self.field: FieldSpec = _field
        self.points: np.ndarray = points
        self.multipliers: np.ndarray = multipliers
        self.K: int = _dimension
        self.generator: GFMatrix = GFMatrix(_field, [_field.mul(multipliers, _field.power(points, d))
                                                     for d in range(_dimension)] or np.zeros((0, length)))

    @property
    def N(self) -> int:
        return self.points.size

    @property
    def radius(self) -> int:
        """``floor((N - K) / 2)``."""
        return (self.N - self.K) // 2

    @functools.cached_property
    def code(self) -> LinearCode:
        return LinearCode(self.generator)

    @functools.cached_property
    def checkMultipliers(self) -> np.ndarray:
        """The multipliers of the dual code."""
        return dualMultipliers(self.field, self.points, self.multipliers)

    def __repr__(self):
        return f"GRS[{self.N},{self.K}] over {self.field}"


def dualMultipliers(_field: FieldSpec, _points, _multipliers) -> np.ndarray:
    """``v'_i = 1 / (v_i prod_{j != i} (alpha_i - alpha_j))``."""
    points = np.asarray(_points, dtype=np.int64)
    differences = _field.sub(points[:, None], points[None, :])
    np.fill_diagonal(differences, 1)
    products = np.ones(points.size, dtype=np.int64)
    for column in range(points.size):
        products = _field.mul(products, differences[:, column])
    return _field.inv(_field.mul(np.asarray(_multipliers, dtype=np.int64), products))


def grsDual(_code: GrsCode) -> GrsCode:
    return GrsCode(_code.field, _code.points, _code.checkMultipliers, _code.N - _code.K)


def encode(_code: GrsCode, _message) -> np.ndarray:
    """``c_i = v_i f(alpha_i)`` where the message holds the coefficients of f, constant term first."""
    message = np.asarray(_message, dtype=np.int64)
    if message.shape != (_code.K,):
        raise ValueError(f"Messages for {_code} MUST have length {_code.K}. Got shape {message.shape}")
    return _code.field.matmul(message[None, :], _code.generator.entries)[0]


def grsSyndromes(_code: GrsCode, _word, _count: int) -> np.ndarray:
    """``S_s = sum_i y_i v'_i alpha_i^s`` for ``s < _count``."""
    field = _code.field
    weighted = field.mul(np.asarray(_word, dtype=np.int64), _code.checkMultipliers)
    powers = np.stack([field.power(_code.points, s) for s in range(_count)]) if _count else \
        np.zeros((0, _code.N), dtype=np.int64)
    return field.matmul(powers, weighted[:, None])[:, 0]


def bdDecode(_code: GrsCode, _word, radius: int = None) -> np.ndarray:
    """
    :Description:

    Bounded distance decoding up to ``radius`` errors (default ``floor((N - K) / 2)``).

    The error locator is found from the largest nonsingular Hankel system of syndromes, its roots
    are searched among the inverses of the evaluation points, and the error values come from the
    Vandermonde system on the located positions.

    :param _code: the GRS code
    :param _word: received word of length N
    :param radius: number of errors to correct, at most ``floor((N - K) / 2)``

    :return: the decoded codeword, or None when no codeword lies within the radius
    """
    field = _code.field
    if radius is None:
        radius = _code.radius
    if not 0 <= radius <= _code.radius:
        raise ValueError(f"{_code} corrects at most {_code.radius} errors. Got radius {radius}")

    word = np.asarray(_word, dtype=np.int64)
    if word.shape != (_code.N,):
        raise ValueError(f"Words for {_code} MUST have length {_code.N}. Got shape {word.shape}")

    syndromes = grsSyndromes(_code, word, _code.N - _code.K)
    if not np.any(syndromes):
        return word.copy()

    for errorCount in range(radius, 0, -1):
        hankel = GFMatrix(field, [[syndromes[row + col] for col in range(errorCount)] for row in range(errorCount)])
        if rank(hankel) < errorCount:
            continue

        # coefficients come out as (Lambda_nu, ..., Lambda_1)
        locator = solve(hankel, field.neg(syndromes[errorCount:2 * errorCount]))
        inversePoints = field.inv(_code.points)
        evaluation = np.ones(_code.N, dtype=np.int64)
        for degree in range(1, errorCount + 1):
            term = field.mul(locator[errorCount - degree], field.power(inversePoints, degree))
            evaluation = field.add(evaluation, term)

        positions = np.nonzero(evaluation == 0)[0]
        if positions.size != errorCount:
            return None

        located = _code.points[positions]
        vandermonde = GFMatrix(field, [field.power(located, s) for s in range(errorCount)])
        magnitudes = solve(vandermonde, syndromes[:errorCount])
        if magnitudes is None:
            return None

        error = np.zeros(_code.N, dtype=np.int64)
        error[positions] = field.div(magnitudes, _code.checkMultipliers[positions])

        corrected = field.sub(word, error)
        if np.any(grsSyndromes(_code, corrected, _code.N - _code.K)):
            return None
        return corrected

    return None
