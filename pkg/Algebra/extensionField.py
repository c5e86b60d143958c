"""
Description
================

GF(q^k) viewed as a k-dimensional vector space over GF(q).

``ExtensionField`` embeds the base field GF(q) = GF(p^m) into GF(q^k) = GF(p^{mk}) (both built by
``fieldCreate``) and provides the trace map. ``DualBasisPair`` holds a basis of GF(q^k) over GF(q)
together with its trace-dual basis, and converts between extension elements and coordinates.
"""
from dataclasses import dataclass

import numpy as np

from Algebra.finiteField import FieldSpec, fieldCreate
from Algebra.gfMatrix import GFMatrix, inverse


class ExtensionField:
    """
    :Description:

    The extension GF(q^k) of a base field GF(q).

    The base field is embedded by sending the class of ``x`` in the base modulus to the smallest
    root of that modulus in the big field. For a prime base field the embedding is the identity on
    ``0..p-1``.

    :param _base: GF(q)
    :param _k: the extension degree, at least 1
    """

    def __init__(self, _base: FieldSpec, _k: int):
        if _k < 1:
            raise ValueError(f"Extension degree MUST be at least 1. Got {_k}")

        self.base: FieldSpec = _base
        self.k: int = _k
        self.big: FieldSpec = fieldCreate(_base.p, _base.m * _k)

        self.m_embed = self.__buildEmbedding__()
        project = np.full(self.big.q, -1, dtype=np.int64)
        project[self.m_embed] = np.arange(_base.q, dtype=np.int64)
        self.m_project = project
        self.m_embed.setflags(write=False)
        self.m_project.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, ExtensionField):
            return NotImplemented
        return self.base == other.base and self.k == other.k

    def __hash__(self):
        return hash((self.base, self.k))

    def __repr__(self):
        return f"{self.big} over {self.base}"

    def __buildEmbedding__(self) -> np.ndarray:
        big = self.big
        candidates = big.elements()
        value = np.zeros_like(candidates)
        for degree, coefficient in enumerate(self.base.modulus):
            value = big.add(value, big.mul(coefficient, big.power(candidates, degree)))

        roots = np.nonzero(value == 0)[0]
        if roots.size == 0:
            raise ValueError(f"{self.base.modulus} has no root in {big}")
        root = int(roots[0])

        embed = np.zeros(self.base.q, dtype=np.int64)
        for degree in range(self.base.m):
            embed = big.add(embed, big.mul(self.base.m_digits[:, degree], big.power(root, degree)))
        return embed

    def embed(self, _a) -> np.ndarray:
        """Base field elements into the big field."""
        return self.m_embed[np.asarray(_a, dtype=np.int64)]

    def project(self, _x) -> np.ndarray:
        """Big field elements that lie in the base field back to their base encoding."""
        projected = self.m_project[np.asarray(_x, dtype=np.int64)]
        if np.any(projected < 0):
            raise ValueError(f"Element is not in the subfield {self.base}")
        return projected

    def trace(self, _x) -> np.ndarray:
        """``Tr(x) = x + x^q + ... + x^{q^{k-1}}``, returned in the base field encoding."""
        big = self.big
        x = np.asarray(_x, dtype=np.int64)
        total = np.zeros_like(x)
        for i in range(self.k):
            total = big.add(total, big.power(x, self.base.q ** i))
        return self.project(total)

    def polynomialBasis(self) -> tuple:
        """``1, g, ..., g^{k-1}`` for the generator g of the big field."""
        return tuple(int(self.big.power(self.big.generator, i)) for i in range(self.k))


@dataclass(frozen=True)
class DualBasisPair:
    """
    A basis ``beta`` of GF(q^k) over GF(q) and its dual ``beta'`` with ``Tr(beta_a beta'_b) = [a == b]``.
    """
    extension: ExtensionField
    basis: tuple
    dual: tuple

    @property
    def k(self) -> int:
        return self.extension.k

    def coordinates(self, _x) -> np.ndarray:
        """Coordinates of x in ``basis``: ``Tr(x beta'_a)``. Shape ``x.shape + (k,)``."""
        x = np.asarray(_x, dtype=np.int64)
        big = self.extension.big
        return np.stack([self.extension.trace(big.mul(x, d)) for d in self.dual], axis=-1)

    def dualCoordinates(self, _y) -> np.ndarray:
        """Coordinates of y in ``dual``: ``Tr(y beta_a)``."""
        y = np.asarray(_y, dtype=np.int64)
        big = self.extension.big
        return np.stack([self.extension.trace(big.mul(y, b)) for b in self.basis], axis=-1)

    def __combine__(self, _coordinates, _vectors) -> np.ndarray:
        big = self.extension.big
        coordinates = self.extension.embed(_coordinates)
        terms = big.mul(coordinates, np.asarray(_vectors, dtype=np.int64))
        return big.sum(terms, axis=-1)

    def fromCoordinates(self, _coordinates) -> np.ndarray:
        """``sum_a c_a beta_a`` for coordinates along the last axis."""
        return self.__combine__(_coordinates, self.basis)

    def fromDualCoordinates(self, _coordinates) -> np.ndarray:
        """``sum_a c_a beta'_a`` for coordinates along the last axis."""
        return self.__combine__(_coordinates, self.dual)


def dualBasis(_extension: ExtensionField, _basis=None) -> DualBasisPair:
    """
    :Description:

    Computes the trace-dual of a basis through the Gram matrix ``G[a][b] = Tr(beta_a beta_b)``:
    the dual basis is ``G^{-1} beta``.

    :param _extension: GF(q^k) over GF(q)
    :param _basis: k elements of the big field, defaults to ``_extension.polynomialBasis()``

    :return: the basis with its dual
    """
    if _basis is None:
        _basis = _extension.polynomialBasis()

    basis = np.asarray(_basis, dtype=np.int64)
    if basis.shape != (_extension.k,):
        raise ValueError(f"A basis of {_extension} has exactly {_extension.k} elements. Got {len(basis)}")

    big = _extension.big
    gram = GFMatrix(_extension.base, _extension.trace(big.mul(basis[:, None], basis[None, :])))
    try:
        gramInverse = inverse(gram)
    except ValueError:
        raise ValueError(f"{list(basis)} is not a basis of {_extension}")

    embedded = _extension.embed(gramInverse.entries)
    dual = big.sum(big.mul(embedded, basis[None, :]), axis=1)

    pairing = _extension.trace(big.mul(basis[:, None], dual[None, :]))
    if not np.array_equal(pairing, np.eye(_extension.k, dtype=np.int64)):
        raise ValueError(f"Dual basis computation failed for {list(basis)}")

    return DualBasisPair(_extension, tuple(int(b) for b in basis), tuple(int(d) for d in dual))
