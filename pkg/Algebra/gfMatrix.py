"""
Description
================

Dense matrices over a finite field and the linear algebra the codes need: reduced row echelon form,
kernels, inverses, powers and solving.

Companion matrices live here too, together with the search for the lowest primitive polynomial over
GF(q) and the additive closure check on the powers of such a matrix.
"""
import numpy as np

import config
from Algebra.finiteField import FieldSpec, primeFactors


class GFMatrix:
    """
    :Description:

    An immutable ``rows x cols`` matrix over ``field``. Entries are stored as a read only ``int64``
    numpy array using the integer encoding of ``Algebra.finiteField``.

    :param _field: the field the entries belong to
    :param _entries: anything ``np.array`` accepts with two dimensions
    """

    def __init__(self, _field: FieldSpec, _entries):
        entries = np.array(_entries, dtype=np.int64)
        if entries.ndim != 2:
            raise ValueError(f"Matrix entries MUST be two dimensional. Got shape {entries.shape}")
        if entries.size and (entries.min() < 0 or entries.max() >= _field.q):
            raise ValueError(f"Matrix entries MUST be elements of {_field}")

        entries.setflags(write=False)
        self.field: FieldSpec = _field
        self.entries: np.ndarray = entries

    @staticmethod
    def identity(_field: FieldSpec, _size: int) -> "GFMatrix":
        return GFMatrix(_field, np.eye(_size, dtype=np.int64))

    @staticmethod
    def zeros(_field: FieldSpec, _rows: int, _cols: int) -> "GFMatrix":
        return GFMatrix(_field, np.zeros((_rows, _cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple:
        return self.entries.shape

    def __eq__(self, other):
        if not isinstance(other, GFMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.field, self.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"GFMatrix({self.field}, {self.entries.tolist()})"

    def __checkCompatible__(self, _other: "GFMatrix"):
        if self.field != _other.field:
            raise ValueError(f"Field mismatch: {self.field} and {_other.field}")

    def __add__(self, other: "GFMatrix") -> "GFMatrix":
        self.__checkCompatible__(other)
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} and {other.shape}")
        return GFMatrix(self.field, self.field.add(self.entries, other.entries))

    def __sub__(self, other: "GFMatrix") -> "GFMatrix":
        self.__checkCompatible__(other)
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} and {other.shape}")
        return GFMatrix(self.field, self.field.sub(self.entries, other.entries))

    def __neg__(self) -> "GFMatrix":
        return GFMatrix(self.field, self.field.neg(self.entries))

    def __matmul__(self, other: "GFMatrix") -> "GFMatrix":
        self.__checkCompatible__(other)
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        return GFMatrix(self.field, self.field.matmul(self.entries, other.entries))

    def scale(self, _scalar: int) -> "GFMatrix":
        return GFMatrix(self.field, self.field.mul(_scalar, self.entries))

    def transpose(self) -> "GFMatrix":
        return GFMatrix(self.field, self.entries.T)

    def top(self, _count: int) -> "GFMatrix":
        """The first ``_count`` rows."""
        return GFMatrix(self.field, self.entries[:_count])

    def bottom(self, _count: int) -> "GFMatrix":
        """The last ``_count`` rows (an empty matrix for 0)."""
        return GFMatrix(self.field, self.entries[self.rows - _count:])

    def stack(self, _other: "GFMatrix") -> "GFMatrix":
        self.__checkCompatible__(_other)
        return GFMatrix(self.field, np.vstack([self.entries, _other.entries]))

    def isSquare(self) -> bool:
        return self.rows == self.cols

    def tolist(self) -> list:
        return self.entries.tolist()


def rref(_matrix: GFMatrix):
    """
    :Description:

    Gauss-Jordan elimination over the matrix's field.

    :param _matrix: the matrix to reduce

    :return: ``(reduced, rank, pivots)`` where ``reduced`` has the same shape (zero rows at the
        bottom) and ``pivots`` is the tuple of pivot columns
    """
    field = _matrix.field
    reduced = _matrix.entries.copy()
    rowCount, colCount = reduced.shape

    pivots = []
    pivotRow = 0
    for col in range(colCount):
        if pivotRow == rowCount:
            break
        nonzero = np.nonzero(reduced[pivotRow:, col])[0]
        if nonzero.size == 0:
            continue

        swapRow = pivotRow + nonzero[0]
        if swapRow != pivotRow:
            reduced[[pivotRow, swapRow]] = reduced[[swapRow, pivotRow]]

        reduced[pivotRow] = field.mul(reduced[pivotRow], field.inv(reduced[pivotRow, col]))

        factors = reduced[:, col].copy()
        factors[pivotRow] = 0
        reduced = field.sub(reduced, field.mul(factors[:, None], reduced[pivotRow][None, :]))

        pivots.append(col)
        pivotRow += 1

    return GFMatrix(field, reduced), pivotRow, tuple(pivots)


def rank(_matrix: GFMatrix) -> int:
    return rref(_matrix)[1]


def kernel(_matrix: GFMatrix) -> GFMatrix:
    """
    Basis of the right kernel ``{x : M x^t = 0}`` as the rows of the returned matrix.
    One row per free column, in increasing column order.
    """
    field = _matrix.field
    reduced, _, pivots = rref(_matrix)
    free = [col for col in range(_matrix.cols) if col not in pivots]

    basis = np.zeros((len(free), _matrix.cols), dtype=np.int64)
    for row, freeCol in enumerate(free):
        basis[row, freeCol] = 1
        for pivotIndex, pivotCol in enumerate(pivots):
            basis[row, pivotCol] = field.neg(reduced.entries[pivotIndex, freeCol])

    return GFMatrix(field, basis)


def inverse(_matrix: GFMatrix) -> GFMatrix:
    if not _matrix.isSquare():
        raise ValueError(f"Only square matrices have inverses. Got shape {_matrix.shape}")

    size = _matrix.rows
    augmented = GFMatrix(_matrix.field, np.hstack([_matrix.entries, np.eye(size, dtype=np.int64)]))
    reduced, _, pivots = rref(augmented)

    if pivots[:size] != tuple(range(size)):
        raise ValueError("Matrix is singular")

    return GFMatrix(_matrix.field, reduced.entries[:, size:])


def solve(_matrix: GFMatrix, _rhs) -> np.ndarray:
    """
    :Description:

    Finds one ``x`` with ``M x = b``. Free variables are set to zero.

    :param _matrix: the ``r x c`` coefficient matrix
    :param _rhs: the length ``r`` right hand side

    :return: the length ``c`` solution, or None when the system is inconsistent
    """
    rhs = np.asarray(_rhs, dtype=np.int64).reshape(-1, 1)
    if rhs.shape[0] != _matrix.rows:
        raise ValueError(f"Right hand side MUST have {_matrix.rows} entries. Got {rhs.shape[0]}")

    augmented = GFMatrix(_matrix.field, np.hstack([_matrix.entries, rhs]))
    reduced, _, pivots = rref(augmented)

    if _matrix.cols in pivots:
        return None

    solution = np.zeros(_matrix.cols, dtype=np.int64)
    for pivotIndex, pivotCol in enumerate(pivots):
        solution[pivotCol] = reduced.entries[pivotIndex, _matrix.cols]
    return solution


def matPower(_matrix: GFMatrix, _exponent: int) -> GFMatrix:
    """Square and multiply. Negative exponents use the inverse."""
    if not _matrix.isSquare():
        raise ValueError(f"Only square matrices have powers. Got shape {_matrix.shape}")

    base = _matrix
    if _exponent < 0:
        base = inverse(_matrix)
        _exponent = -_exponent

    result = GFMatrix.identity(_matrix.field, _matrix.rows)
    while _exponent:
        if _exponent & 1:
            result = result @ base
        base = base @ base
        _exponent >>= 1
    return result


def hasOrder(_matrix: GFMatrix, _order: int) -> bool:
    """True if the multiplicative order of the matrix is exactly ``_order``."""
    identity = GFMatrix.identity(_matrix.field, _matrix.rows)
    if matPower(_matrix, _order) != identity:
        return False
    return all(matPower(_matrix, _order // factor) != identity for factor in primeFactors(_order))


def __companionEntries__(_field: FieldSpec, _poly) -> np.ndarray:
    size = len(_poly) - 1
    entries = np.zeros((size, size), dtype=np.int64)
    for i in range(size - 1):
        entries[i, i + 1] = 1
    entries[size - 1, :] = _field.neg(np.asarray(_poly[:size], dtype=np.int64))
    return entries


def companionMatrix(_field: FieldSpec, _poly) -> GFMatrix:
    """
    :Description:

    Companion matrix of a monic primitive polynomial over GF(q): ones on the superdiagonal and the
    negated lower coefficients along the last row. For ``x^3 + x + 1`` over GF(2) this is
    ``[[0,1,0],[0,0,1],[1,1,0]]``.

    The matrix has multiplicative order ``q^n - 1`` exactly when the polynomial is primitive, which
    is checked here.

    :param _field: GF(q)
    :param _poly: coefficients, constant term first, leading coefficient 1

    :return: the companion matrix
    """
    poly = [int(c) for c in _poly]
    if len(poly) < 2 or poly[-1] != 1:
        raise ValueError(f"Polynomial MUST be monic with degree at least 1. Got {poly}")

    matrix = GFMatrix(_field, __companionEntries__(_field, poly))
    if not hasOrder(matrix, _field.q ** (len(poly) - 1) - 1):
        raise ValueError(f"Polynomial {poly} is not primitive over {_field}")
    return matrix


def lowestPrimitivePolynomial(_field: FieldSpec, _degree: int) -> tuple:
    """
    The first monic primitive polynomial of the given degree over GF(q), lower coefficients read as
    base-q digits (``x^{n-1}`` most significant).
    """
    if _degree < 1:
        raise ValueError(f"Degree MUST be at least 1. Got {_degree}")

    q = _field.q
    config.checkBudget(q ** _degree, f"Primitive polynomial search of degree {_degree} over {_field}")
    for value in range(q ** _degree):
        lower = [(value // q ** j) % q for j in range(_degree)]
        if lower[0] == 0:
            continue
        poly = tuple(lower + [1])
        if hasOrder(GFMatrix(_field, __companionEntries__(_field, poly)), q ** _degree - 1):
            return poly

    # a primitive polynomial exists for every degree
    raise ValueError(f"No primitive polynomial of degree {_degree} over {_field}")


def isAdditivelyClosed(_matrix: GFMatrix) -> bool:
    """
    :Description:

    Checks that the powers ``T^0 .. T^{q^n-2}`` are pairwise distinct and that ``I + T^l`` is either
    zero or again one of those powers, i.e. that together with 0 they form a field.

    :param _matrix: the ``n x n`` matrix T

    :return: True if ``{0} u {T^i}`` is closed under addition
    """
    field = _matrix.field
    groupOrder = field.q ** _matrix.rows - 1
    config.checkBudget(groupOrder, "Additive closure check")

    identity = GFMatrix.identity(field, _matrix.rows)
    powers = []
    current = identity
    for _ in range(groupOrder):
        powers.append(current)
        current = current @ _matrix

    known = {power.entries.tobytes() for power in powers}
    if len(known) != groupOrder:
        return False

    for power in powers:
        total = identity + power
        if np.any(total.entries) and total.entries.tobytes() not in known:
            return False
    return True
