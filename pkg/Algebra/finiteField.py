"""
Description
================

Arithmetic in the finite field GF(q), ``q = p^m``.

An element is stored as a plain integer whose base-p digits are the coefficients of its polynomial
representative, constant term in the least significant digit. For GF(8) built on ``x^3 + x + 1`` the
integer ``6`` is ``x^2 + x``.

Every operation here takes numpy arrays (or python ints) and works elementwise, so whole matrices
and batches of words go through a single call. Multiplication uses exp/log tables built from a
generator of the multiplicative group, addition uses XOR in characteristic 2 and digit-wise sums
otherwise.

Fields are created through ``fieldCreate`` which always picks the same modulus and generator for a
given ``(p, m)``, so two runs with the same parameters produce identical tables.
"""
import functools

import numpy as np

import config
from Algebra import polynomials
from exceptions import BudgetExceededError


def isPrime(_value: int) -> bool:
    if _value < 2:
        return False
    divisor = 2
    while divisor * divisor <= _value:
        if _value % divisor == 0:
            return False
        divisor += 1
    return True


def primeFactors(_value: int) -> list[int]:
    """The distinct prime factors of ``_value`` in increasing order."""
    factors = []
    remaining = _value
    divisor = 2
    while divisor * divisor <= remaining:
        if remaining % divisor == 0:
            factors.append(divisor)
            while remaining % divisor == 0:
                remaining //= divisor
        divisor += 1
    if remaining > 1:
        factors.append(remaining)
    return factors


class FieldSpec:
    """
    :Description:

    A finite field GF(p^m) with its lookup tables.

    Treat instances as immutable: the tables are flagged read only and equality only looks at
    ``(p, m, modulus)``.

    :param _p: the characteristic, must be prime
    :param _m: the extension degree, at least 1
    :param _modulus: monic irreducible polynomial of degree m over GF(p), constant term first
    :param _generator: element of order ``q - 1``. If omitted the smallest one is used.
    """

    def __init__(self, _p: int, _m: int, _modulus: tuple, _generator: int = None):
        if not isPrime(_p):
            raise ValueError(f"Characteristic MUST be prime. Got {_p}")
        if _m < 1:
            raise ValueError(f"Extension degree MUST be at least 1. Got {_m}")

        self.p: int = _p
        self.m: int = _m
        self.q: int = _p ** _m
        self.modulus: tuple = tuple(int(c) % _p for c in _modulus)

        if len(self.modulus) != _m + 1 or self.modulus[-1] != 1:
            raise ValueError(f"Modulus MUST be monic of degree {_m}. Got {self.modulus}")
        if not polynomials.isIrreducible(self.modulus, _p):
            raise ValueError(f"Modulus {self.modulus} is reducible over GF({_p})")

        self.m_powers = _p ** np.arange(_m, dtype=np.int64)
        self.m_digits = (np.arange(self.q, dtype=np.int64)[:, None] // self.m_powers[None, :]) % _p
        self.m_digits.setflags(write=False)

        if _generator is None:
            _generator = self.__findGenerator__()

        self.generator: int = int(_generator)
        self.m_exp, self.m_log = self.__buildTables__(self.generator)

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"

    def __toPoly__(self, _element: int) -> tuple:
        return polynomials.trim(int(d) for d in self.m_digits[_element])

    def __fromPoly__(self, _poly) -> int:
        return sum(int(c) * self.p ** j for j, c in enumerate(_poly))

    def __slowMul__(self, _a: int, _b: int) -> int:
        product = polynomials.polyMulMod(self.__toPoly__(_a), self.__toPoly__(_b), self.modulus, self.p)
        return self.__fromPoly__(product)

    def __slowPow__(self, _a: int, _exponent: int) -> int:
        result = 1
        base = _a
        while _exponent:
            if _exponent & 1:
                result = self.__slowMul__(result, base)
            base = self.__slowMul__(base, base)
            _exponent >>= 1
        return result

    def __findGenerator__(self) -> int:
        groupOrder = self.q - 1
        factors = primeFactors(groupOrder)
        for candidate in range(1, self.q):
            if all(self.__slowPow__(candidate, groupOrder // f) != 1 for f in factors):
                return candidate
        raise ValueError(f"GF({self.q}) has no generator. The modulus is not irreducible")

    def __buildTables__(self, _generator: int):
        groupOrder = self.q - 1
        expTable = np.zeros(groupOrder, dtype=np.int64)
        logTable = np.zeros(self.q, dtype=np.int64)
        seen = np.zeros(self.q, dtype=bool)

        element = 1
        for exponent in range(groupOrder):
            if seen[element] or element == 0:
                raise ValueError(f"{_generator} does not have order {groupOrder} in GF({self.q})")
            seen[element] = True
            expTable[exponent] = element
            logTable[element] = exponent
            element = self.__slowMul__(element, _generator)

        if element != 1:
            raise ValueError(f"{_generator} does not have order {groupOrder} in GF({self.q})")

        expTable.setflags(write=False)
        logTable.setflags(write=False)
        return expTable, logTable

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def add(self, _a, _b) -> np.ndarray:
        a = np.asarray(_a, dtype=np.int64)
        b = np.asarray(_b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self.m_digits[a] + self.m_digits[b]) % self.p) @ self.m_powers

    def neg(self, _a) -> np.ndarray:
        a = np.asarray(_a, dtype=np.int64)
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        return ((-self.m_digits[a]) % self.p) @ self.m_powers

    def sub(self, _a, _b) -> np.ndarray:
        return self.add(_a, self.neg(_b))

    def mul(self, _a, _b) -> np.ndarray:
        a = np.asarray(_a, dtype=np.int64)
        b = np.asarray(_b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        product = self.m_exp[(self.m_log[a] + self.m_log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, product)

    def inv(self, _a) -> np.ndarray:
        a = np.asarray(_a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError(f"Zero has no inverse in GF({self.q})")
        return self.m_exp[(-self.m_log[a]) % (self.q - 1)]

    def div(self, _a, _b) -> np.ndarray:
        return self.mul(_a, self.inv(_b))

    def power(self, _a, _exponent: int) -> np.ndarray:
        """
        Elementwise ``a^e``. ``0^0`` is 1 and a negative exponent inverts first, so zero raised to a
        negative power raises ``ZeroDivisionError``.
        """
        a = np.asarray(_a, dtype=np.int64)
        if _exponent < 0:
            return self.power(self.inv(a), -_exponent)
        if _exponent == 0:
            return np.ones_like(a)
        result = self.m_exp[(self.m_log[a] * (_exponent % (self.q - 1))) % (self.q - 1)]
        return np.where(a == 0, 0, result)

    def sum(self, _a, axis: int = 0) -> np.ndarray:
        a = np.asarray(_a, dtype=np.int64)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        digitAxis = axis if axis >= 0 else axis - 1
        return (self.m_digits[a].sum(axis=digitAxis) % self.p) @ self.m_powers

    def matmul(self, _a, _b) -> np.ndarray:
        """Matrix product over GF(q) of a ``(r, l)`` and an ``(l, c)`` array."""
        a = np.asarray(_a, dtype=np.int64)
        b = np.asarray(_b, dtype=np.int64)
        if self.m == 1:
            return (a @ b) % self.p
        return self.sum(self.mul(a[:, :, None], b[None, :, :]), axis=1)

    def toPowerIndex(self, _a) -> np.ndarray:
        """Zero maps to 0, ``g^e`` maps to ``e + 1``. Used for the serialized form."""
        a = np.asarray(_a, dtype=np.int64)
        return np.where(a == 0, 0, self.m_log[a] + 1)

    def fromPowerIndex(self, _index) -> np.ndarray:
        index = np.asarray(_index, dtype=np.int64)
        if np.any(index < 0) or np.any(index > self.q - 1):
            raise ValueError(f"Power index out of range for GF({self.q})")
        return np.where(index == 0, 0, self.m_exp[np.maximum(index - 1, 0)])


@functools.lru_cache(maxsize=None)
def fieldCreate(_p: int, _m: int) -> FieldSpec:
    """
    :Description:

    Builds GF(p^m) on the lowest monic irreducible modulus (see ``polynomials.lowestIrreducible``)
    with the smallest element of full order as the generator.
    Repeated calls with the same parameters return the same instance.

    :param _p: the characteristic
    :param _m: the extension degree

    :return: the field
    """
    if not isPrime(_p):
        raise ValueError(f"Characteristic MUST be prime. Got {_p}")
    if _m < 1:
        raise ValueError(f"Extension degree MUST be at least 1. Got {_m}")
    if _p ** _m > config.FIELD_SIZE_LIMIT:
        raise BudgetExceededError(f"GF({_p}^{_m}) is larger than the supported limit of {config.FIELD_SIZE_LIMIT}")

    return FieldSpec(_p, _m, polynomials.lowestIrreducible(_p, _m))
