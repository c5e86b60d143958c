"""
Description
================

Conjugate pairs ``(D1, D2)`` over the outer field GF(Q), ``Q = q^k``.

``rsPair`` uses Reed-Solomon codes on the points ``g^0, ..., g^{N-1}``: D1 has all multipliers 1 and
D2 uses the dual multipliers, so that ``D2^perp = GRS(alpha, 1, N - K2)`` is contained in
``D1 = GRS(alpha, 1, K1)`` whenever ``K1 + K2 >= N``. ``hammingPair`` covers outer fields too small for
a useful Reed-Solomon length (a net inner dimension of 1 over GF(2)).
"""
import functools
from dataclasses import dataclass

import numpy as np

from Algebra.finiteField import FieldSpec
from Codes.conjugatePair import ConjugatePair, QuotientCode, makePair, quotient
from Codes.cosetLeaders import boundedDistanceDecode
from Codes.linearCode import LinearCode, dual, hammingCode, minimumDistance
from exceptions import VerificationError
from Outer.reedSolomon import GrsCode, bdDecode, dualMultipliers, grsDual


@dataclass(frozen=True, eq=False)
class OuterPair:
    kind: str
    pair: ConjugatePair
    grs1: GrsCode = None
    grs2: GrsCode = None

    @property
    def field(self) -> FieldSpec:
        return self.pair.field

    @property
    def N(self) -> int:
        return self.pair.n

    @property
    def K1(self) -> int:
        return self.pair.c1.k

    @property
    def K2(self) -> int:
        return self.pair.c2.k

    @property
    def K(self) -> int:
        return self.pair.k

    def grs(self, _side: int) -> GrsCode:
        return self.grs1 if _side == 1 else self.grs2

    def radius(self, _side: int) -> int:
        """Number of errors corrected on side j: ``floor((N - K_j) / 2)`` for RS, 1 for Hamming."""
        if self.kind == "rs":
            return self.grs(_side).radius
        return (self.distances[_side - 1] - 1) // 2

    @functools.cached_property
    def distances(self) -> tuple:
        return minimumDistance(self.pair.c1), minimumDistance(self.pair.c2)

    def __repr__(self):
        return f"{self.kind.upper()} outer pair [{self.N}; {self.K1}, {self.K2}] over {self.field}"


def rsPair(_field: FieldSpec, _N: int, _K1: int, _K2: int) -> OuterPair:
    """
    :Description:

    Reed-Solomon outer pair of length N over GF(Q).

    :param _field: GF(Q)
    :param _N: length, at most ``Q - 1``
    :param _K1: dimension of D1
    :param _K2: dimension of D2, with ``K1 + K2 >= N``

    :return: the outer pair
    """
    if not 1 <= _N <= _field.q - 1:
        raise ValueError(f"Reed-Solomon length MUST lie in [1, {_field.q - 1}]. Got {_N}")
    if not 0 <= _N - _K2 <= _K1 <= _N:
        raise ValueError(f"Need 0 <= N - K2 <= K1 <= N. Got N={_N}, K1={_K1}, K2={_K2}")

    points = _field.m_exp[:_N]
    ones = np.ones(_N, dtype=np.int64)
    grs1 = GrsCode(_field, points, ones, _K1)
    grs2 = GrsCode(_field, points, dualMultipliers(_field, points, ones), _K2)

    try:
        pair = makePair(grs1.code, grs2.code)
    except ValueError as e:
        raise VerificationError(f"Reed-Solomon outer codes are not conjugate: {e}")
    return OuterPair("rs", pair, grs1, grs2)


def hammingPair(_field: FieldSpec, _redundancy: int) -> OuterPair:
    """
    ``(H, H)`` for the Hamming code H of the given redundancy. ``H^perp`` (the simplex code) lies in
    H, so the pair is conjugate with ``K = N - 2r``.
    """
    code = hammingCode(_field, _redundancy)
    try:
        pair = makePair(code, code)
    except ValueError as e:
        raise VerificationError(f"Hamming outer codes are not conjugate: {e}")
    return OuterPair("hamming", pair)


@functools.lru_cache(maxsize=None)
def outerQuotient(_outer: OuterPair, _side: int) -> QuotientCode:
    """``D_j / D_{other}^perp``."""
    return quotient(_outer.pair.code(_side), dual(_outer.pair.other(_side)))


def outerDualGenerator(_outer: OuterPair, _side: int):
    """Generator of ``D_j^perp``, read off the dual GRS code when there is one."""
    if _outer.kind == "rs":
        return grsDual(_outer.grs(_side)).generator
    return _outer.pair.code(_side).parityCheck


def outerDecode(_outer: OuterPair, _side: int, _word) -> np.ndarray:
    """Bounded distance decoding of D_j. Returns the codeword or None."""
    if _outer.kind == "rs":
        return bdDecode(_outer.grs(_side), _word)
    code: LinearCode = _outer.pair.code(_side)
    return boundedDistanceDecode(code, _word, _outer.radius(_side))
