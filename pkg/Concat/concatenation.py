"""
Description
================

Concatenation of an outer conjugate pair over GF(q^k) with N inner pairs over GF(q).

With inner maps ``pi_j`` (see ``Concat.innerMaps``) applied blockwise, the concatenated pair is

* ``L1 = pi_1(D1) + (C_2^perp)^N``
* ``L2 = pi_2(D2) + (C_1^perp)^N``

where ``(C^perp)^N`` is the direct sum of the inner duals, one per block. Its duality rests on the
two identities

* ``(pi_1(D2^perp) + (C_2^perp)^N)^perp = pi_2(D2) + (C_1^perp)^N``
* ``(pi_2(D1^perp) + (C_1^perp)^N)^perp = pi_1(D1) + (C_2^perp)^N``

which ``verifyDuality`` checks exactly. The left hand sides give a parity check matrix of L2 and a
generator of L1 without computing any kernel of the long code.
"""
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from Algebra.gfMatrix import GFMatrix
from Codes.conjugatePair import ConjugatePair, makePair, quotientEncode
from Codes.linearCode import LinearCode, dual
from Concat.innerMaps import InnerMaps
from exceptions import VerificationError
from Outer.outerPair import OuterPair, outerDualGenerator, outerQuotient


class ConcatenatedPair:
    """
    :Description:

    The pair ``(L1, L2)`` of length ``nN`` together with everything it was built from.

    :param _inner: the N inner maps, one per outer coordinate
    :param _outer: the outer pair over GF(q^k)
    :param _pair: the conjugate pair ``(L1, L2)``
    :param epsilon: the sieve slack the inner pairs were chosen with, if any
    """

    def __init__(self, _inner: tuple, _outer: OuterPair, _pair: ConjugatePair, epsilon: float = None):
        self.inner: tuple[InnerMaps, ...] = tuple(_inner)
        self.outer: OuterPair = _outer
        self.pair: ConjugatePair = _pair
        self.epsilon: float = epsilon

    @property
    def n(self) -> int:
        """Inner length."""
        return self.inner[0].n

    @property
    def N(self) -> int:
        return self.outer.N

    @property
    def length(self) -> int:
        return self.pair.n

    @property
    def bases(self):
        return self.inner[0].bases

    @property
    def L1(self) -> LinearCode:
        return self.pair.c1

    @property
    def L2(self) -> LinearCode:
        return self.pair.c2

    def __repr__(self):
        return f"[[{self.length},{self.pair.k}]] concatenated pair over {self.pair.field}"


def __piSpan__(_inner: tuple, _side: int, _outerRows: GFMatrix) -> np.ndarray:
    """GF(q)-spanning rows of ``pi_j(D)`` for the GF(Q) code D spanned by ``_outerRows``."""
    bases = _inner[0].bases
    big = bases.extension.big
    length = _inner[0].n * len(_inner)
    if _outerRows.rows == 0:
        return np.zeros((0, length), dtype=np.int64)

    basis = np.asarray(bases.basis, dtype=np.int64)
    scaled = big.mul(basis[:, None, None], _outerRows.entries[None, :, :])
    blocks = [maps.pi(_side, scaled[:, :, i]) for i, maps in enumerate(_inner)]
    return np.concatenate(blocks, axis=-1).reshape(-1, length)


def __blockDiagonal__(_inner: tuple, _side: int) -> np.ndarray:
    """Rows spanning ``(C_j^perp)^N``."""
    n = _inner[0].n
    rows = []
    for i, maps in enumerate(_inner):
        block = maps.dualRows(_side).entries
        placed = np.zeros((block.shape[0], n * len(_inner)), dtype=np.int64)
        placed[:, i * n:(i + 1) * n] = block
        rows.append(placed)
    return np.vstack(rows)


def __assemble__(_inner: tuple, _side: int, _outerRows: GFMatrix, _dualSide: int) -> GFMatrix:
    field = _inner[0].pair.field
    return GFMatrix(field, np.vstack([__piSpan__(_inner, _side, _outerRows), __blockDiagonal__(_inner, _dualSide)]))


def concatenate(_inner, _outer: OuterPair, epsilon: float = None) -> ConcatenatedPair:
    """
    :Description:

    Builds ``(L1, L2)`` and checks their dimensions and the conjugacy condition.

    :param _inner: N inner maps sharing one dual basis pair
    :param _outer: the outer pair over the extension field of that basis
    :param epsilon: recorded on the result

    :return: the concatenated pair

    :raises ValueError: when the pieces do not fit together
    :raises VerificationError: when a dimension or the conjugacy condition is off
    """
    inner = tuple(_inner)
    if len(inner) != _outer.N:
        raise ValueError(f"Need one inner pair per outer coordinate: {_outer.N}. Got {len(inner)}")
    bases = inner[0].bases
    if any(maps.bases != bases for maps in inner):
        raise ValueError("Every inner pair MUST use the same dual basis pair")
    if _outer.field != bases.extension.big:
        raise ValueError(f"Outer pair is over {_outer.field}, the inner symbols live in {bases.extension.big}")
    if len({(maps.pair.c1.k, maps.pair.c2.k, maps.n) for maps in inner}) != 1:
        raise ValueError("Every inner pair MUST have the same parameters")

    k = bases.k
    n, k1, k2 = inner[0].n, inner[0].pair.c1.k, inner[0].pair.c2.k
    N = _outer.N

    L1 = LinearCode(__assemble__(inner, 1, _outer.pair.c1.generator, 2))
    L2 = LinearCode(__assemble__(inner, 2, _outer.pair.c2.generator, 1))

    for name, code, expected in [("L1", L1, k * _outer.K1 + N * (n - k2)), ("L2", L2, k * _outer.K2 + N * (n - k1))]:
        if code.k != expected:
            raise VerificationError(f"{name} has dimension {code.k}, expected {expected}")

    try:
        pair = makePair(L1, L2)
    except ValueError as e:
        raise VerificationError(f"Concatenated codes are not conjugate: {e}")

    return ConcatenatedPair(inner, _outer, pair, epsilon)


def parityCheckOfL2(_cp: ConcatenatedPair) -> GFMatrix:
    """Rows of ``pi_1(D2^perp) + (C_2^perp)^N``: ``nN - dim L2`` independent checks of L2."""
    return __assemble__(_cp.inner, 1, outerDualGenerator(_cp.outer, 2), 2)


def generatorOfL1(_cp: ConcatenatedPair) -> GFMatrix:
    """Rows of ``pi_1(D1) + (C_2^perp)^N``: a generator of L1."""
    return __assemble__(_cp.inner, 1, _cp.outer.pair.c1.generator, 2)


def dualOfL1Generator(_cp: ConcatenatedPair) -> GFMatrix:
    """Rows of ``pi_2(D1^perp) + (C_1^perp)^N``: a generator of ``L1^perp``."""
    return __assemble__(_cp.inner, 2, outerDualGenerator(_cp.outer, 1), 1)


@dataclass
class DualityReport:
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, result in self.checks.items() if not result]


L2_IDENTITY = "(pi_1(D2^perp) + (C_2^perp)^N)^perp = pi_2(D2) + (C_1^perp)^N"
L1_IDENTITY = "(pi_2(D1^perp) + (C_1^perp)^N)^perp = pi_1(D1) + (C_2^perp)^N"
CSS_CONDITION = "L2^perp is contained in L1"


def verifyDuality(_cp: ConcatenatedPair, expectedL1: LinearCode = None, expectedL2: LinearCode = None,
                  raiseOnFailure: bool = True) -> DualityReport:
    """
    :Description:

    Checks both duality identities by comparing canonical generators, plus the conjugacy of the
    result. The right hand sides default to the pair's own L1 and L2; pass stored codes to check
    those instead.

    :param _cp: the concatenated pair
    :param expectedL1: the code the second identity must produce
    :param expectedL2: the code the first identity must produce
    :param raiseOnFailure: raise instead of returning a failing report

    :return: one entry per identity

    :raises VerificationError: on the first failing identity when ``raiseOnFailure``
    """
    L1 = expectedL1 if expectedL1 is not None else _cp.L1
    L2 = expectedL2 if expectedL2 is not None else _cp.L2

    report = DualityReport()
    report.checks[L2_IDENTITY] = dual(LinearCode(parityCheckOfL2(_cp))) == L2
    report.checks[L1_IDENTITY] = dual(LinearCode(dualOfL1Generator(_cp))) == L1
    try:
        makePair(L1, L2)
        report.checks[CSS_CONDITION] = True
    except ValueError:
        report.checks[CSS_CONDITION] = False

    if raiseOnFailure and not report.passed:
        raise VerificationError(f"Duality check failed: {report.failures()[0]}")
    return report


def overallRate(_cp: ConcatenatedPair) -> Fraction:
    """``kK / (nN)``. A pair that carries nothing is flagged with a warning."""
    rate = Fraction(_cp.pair.k, _cp.length)
    if rate == 0:
        warnings.warn(f"{_cp} carries no information")
    return rate


def concatEncode(_cp: ConcatenatedPair, _side: int, _message, _rng: np.random.Generator,
                 scramble: bool = True) -> np.ndarray:
    """
    :Description:

    Sends a message of K outer symbols through ``L_j / L_{other}^perp``: the outer quotient picks a
    random word of the message's coset in D_j, each symbol goes through ``pi_j`` and gets a random
    element of the inner ``C_{other}^perp`` added.

    :param _cp: the concatenated pair
    :param _side: 1 or 2
    :param _message: K symbols of GF(q^k)
    :param _rng: source of the scrambles
    :param scramble: set False to leave out both random parts

    :return: the word of length nN
    """
    outerWord = quotientEncode(outerQuotient(_cp.outer, _side), _message, _rng, scramble)
    blocks = []
    for symbol, maps in zip(outerWord, _cp.inner):
        if _side == 1:
            coordinates = _cp.bases.coordinates(symbol)
        else:
            coordinates = _cp.bases.dualCoordinates(symbol)
        blocks.append(quotientEncode(maps.quotient(_side), coordinates, _rng, scramble))
    return np.concatenate(blocks)
