"""
Description
================

The maps that turn outer symbols in GF(q^k) into inner words of length n.

For ensemble member i let ``m_1..m_n`` be the rows of ``T^i`` and ``w_1..w_n`` the rows of
``(T^{-i})^t``, so ``m_a . w_b = [a == b]``. Taking ``u_a = m_{n-k2+a}`` and ``v_a = w_{n-k2+a}`` for
``a = 1..k`` gives

* ``pi_1(x) = sum_a x_a u_a`` with x expanded in the basis ``beta``
* ``pi_2(y) = sum_a y'_a v_a`` with y expanded in the dual basis ``beta'``

and then ``pi_1(x) . pi_2(y) = Tr(x y)``. The u rows represent the cosets of ``C1 / C2^perp`` and the
v rows those of ``C2 / C1^perp``.
"""
from dataclasses import dataclass

import numpy as np

from Algebra.extensionField import DualBasisPair
from Algebra.gfMatrix import GFMatrix
from Codes.conjugatePair import ConjugatePair, QuotientCode
from Codes.linearCode import LinearCode
from Ensemble.balancedEnsemble import BalancedEnsemble
from exceptions import VerificationError


@dataclass(frozen=True, eq=False)
class InnerMaps:
    index: int
    pair: ConjugatePair
    u: GFMatrix
    v: GFMatrix
    bases: DualBasisPair
    c2DualRows: GFMatrix
    c1DualRows: GFMatrix
    quotient1: QuotientCode
    quotient2: QuotientCode

    @property
    def n(self) -> int:
        return self.pair.n

    def quotient(self, _side: int) -> QuotientCode:
        return self.quotient1 if _side == 1 else self.quotient2

    def dualRows(self, _side: int) -> GFMatrix:
        """Rows spanning ``C_j^perp``."""
        return self.c1DualRows if _side == 1 else self.c2DualRows

    def pi(self, _side: int, _symbols) -> np.ndarray:
        """``pi_j`` applied to outer symbols (any shape), giving words along a new last axis."""
        field = self.pair.field
        if _side == 1:
            coordinates, rows = self.bases.coordinates(_symbols), self.u
        else:
            coordinates, rows = self.bases.dualCoordinates(_symbols), self.v
        flat = coordinates.reshape(-1, self.bases.k)
        words = field.matmul(flat, rows.entries)
        return words.reshape(coordinates.shape[:-1] + (self.n,))

    def symbolOf(self, _side: int, _coordinates) -> np.ndarray:
        """Inverse of ``pi_j`` on coset coordinates: back to GF(q^k)."""
        if _side == 1:
            return self.bases.fromCoordinates(_coordinates)
        return self.bases.fromDualCoordinates(_coordinates)


def buildInnerMaps(_ensemble: BalancedEnsemble, _index: int, _bases: DualBasisPair) -> InnerMaps:
    """
    :Description:

    Builds ``pi_1`` and ``pi_2`` for one ensemble member and checks them: ``u v^t = I`` and
    ``pi_1(beta_a) . pi_2(beta'_b) = Tr(beta_a beta'_b)`` on the two bases.

    :param _ensemble: the ensemble, with ``k = k1 + k2 - n >= 1``
    :param _index: the member
    :param _bases: a basis of GF(q^k) over GF(q) with its dual

    :return: the maps

    :raises VerificationError: if a check fails
    """
    k = _ensemble.k
    if k < 1:
        raise ValueError(f"Inner pairs MUST carry at least one symbol. Got k={k}")
    if _bases.k != k:
        raise ValueError(f"Basis has {_bases.k} elements, the inner pairs carry {k} symbols")
    if _bases.extension.base != _ensemble.field:
        raise ValueError(f"Basis is over {_bases.extension.base}, the ensemble over {_ensemble.field}")

    field = _ensemble.field
    n, k1, k2 = _ensemble.n, _ensemble.k1, _ensemble.k2
    pair = _ensemble.member(_index)
    forward = _ensemble.forwardPower(_index).entries
    backward = _ensemble.dualPower(_index).entries

    u = GFMatrix(field, forward[n - k2:k1])
    v = GFMatrix(field, backward[n - k2:k1])
    c2DualRows = GFMatrix(field, forward[:n - k2])
    c1DualRows = GFMatrix(field, backward[k1:])

    if u @ v.transpose() != GFMatrix.identity(field, k):
        raise VerificationError(f"u v^t is not the identity for member {_index}")

    quotient1 = QuotientCode(pair.c1, LinearCode(c2DualRows), u)
    quotient2 = QuotientCode(pair.c2, LinearCode(c1DualRows), v)

    maps = InnerMaps(_index, pair, u, v, _bases, c2DualRows, c1DualRows, quotient1, quotient2)

    first = maps.pi(1, np.asarray(_bases.basis))
    second = maps.pi(2, np.asarray(_bases.dual))
    pairing = field.matmul(first, second.T)
    if not np.array_equal(pairing, np.eye(k, dtype=np.int64)):
        raise VerificationError(f"pi_1 and pi_2 do not respect the trace pairing for member {_index}")

    return maps
