"""
Description
================

Small helpers for polynomials over the prime field GF(p).

Polynomials are tuples of coefficients with the **constant term first**, so ``x^3 + x + 1`` over GF(2)
is ``(1, 1, 0, 1)``. These are only used while a field is being set up (finding the modulus and a
generator); everything after that goes through the lookup tables in ``Algebra.finiteField``.
"""


def trim(_poly) -> tuple:
    """Drops trailing zero coefficients. The zero polynomial is ``()``."""
    coefficients = list(_poly)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


def degree(_poly) -> int:
    trimmed = trim(_poly)
    return len(trimmed) - 1


def polyMul(_a, _b, _p: int) -> tuple:
    if not trim(_a) or not trim(_b):
        return ()
    result = [0] * (len(_a) + len(_b) - 1)
    for i, a in enumerate(_a):
        if a == 0:
            continue
        for j, b in enumerate(_b):
            result[i + j] = (result[i + j] + a * b) % _p
    return trim(result)


def polyMod(_a, _modulus, _p: int) -> tuple:
    """
    :Description:

    Remainder of ``_a`` divided by ``_modulus`` over GF(p).

    :param _a: the dividend
    :param _modulus: the divisor. Its leading coefficient must be nonzero.
    :param _p: the characteristic

    :return: the remainder, trimmed
    """
    modulus = trim(_modulus)
    if not modulus:
        raise ZeroDivisionError("Polynomial modulus MUST be nonzero")

    remainder = [c % _p for c in trim(_a)]
    leadInverse = pow(modulus[-1], -1, _p)
    modDegree = len(modulus) - 1

    while len(remainder) - 1 >= modDegree and remainder:
        factor = (remainder[-1] * leadInverse) % _p
        shift = len(remainder) - 1 - modDegree
        for i, c in enumerate(modulus):
            remainder[shift + i] = (remainder[shift + i] - factor * c) % _p
        remainder = list(trim(remainder))

    return tuple(remainder)


def polyMulMod(_a, _b, _modulus, _p: int) -> tuple:
    return polyMod(polyMul(_a, _b, _p), _modulus, _p)


def monicPolynomials(_p: int, _degree: int):
    """
    Yields every monic polynomial of the given degree, ordered by the integer whose base-p digits are
    the lower coefficients (``x^{m-1}`` is the most significant digit).
    """
    for value in range(_p ** _degree):
        lower = [(value // _p ** j) % _p for j in range(_degree)]
        yield tuple(lower + [1])


def isIrreducible(_poly, _p: int) -> bool:
    """
    :Description:

    Exhaustive irreducibility test: tries every monic factor of degree 1 up to half the degree.
    Fine for the field sizes this project works with (``p^m <= 2^16``).

    :param _poly: the polynomial to test, constant term first
    :param _p: the characteristic

    :return: True if the polynomial has no nontrivial factor over GF(p)
    """
    poly = trim(_poly)
    polyDegree = len(poly) - 1
    if polyDegree < 1:
        return False
    if polyDegree == 1:
        return True

    for factorDegree in range(1, polyDegree // 2 + 1):
        for factor in monicPolynomials(_p, factorDegree):
            if not polyMod(poly, factor, _p):
                return False
    return True


def lowestIrreducible(_p: int, _degree: int) -> tuple:
    """
    Returns the first monic irreducible polynomial of the given degree in the enumeration order of
    ``monicPolynomials``. For ``(2, 3)`` this is ``x^3 + x + 1``.
    """
    for candidate in monicPolynomials(_p, _degree):
        if isIrreducible(candidate, _p):
            return candidate
    # every degree has an irreducible polynomial, so this is unreachable
    raise ValueError(f"No irreducible polynomial of degree {_degree} over GF({_p})")
