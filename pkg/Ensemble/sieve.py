"""
Description
================

Spectrum based classification of ensemble members.

A code C of dimension k in GF(q)^n is called **A-good** when

``N_Q(C \\ {0}) <= (|P_n| - 1) q^{k-n} |T_Q| A``   for every type Q,

where ``N_Q`` counts codewords of type Q, ``|P_n|`` is the number of types and ``|T_Q|`` the size of
the type class. Averaged over a balanced ensemble ``N_Q`` is at most ``q^{k-n} |T_Q|``, so Markov's
inequality leaves at most ``z = floor(N q^{-epsilon n})`` members of each family that are not
``q^{epsilon n}``-good. ``sieveGood`` checks that count.

``findSpectrumBoundedPair`` looks for the first member whose two codes both satisfy the bound with
``A = 2``, which the same counting argument guarantees to exist.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import config
from Codes.conjugatePair import ConjugatePair
from Codes.linearCode import LinearCode, spectrum
from Ensemble.balancedEnsemble import BalancedEnsemble
from exceptions import VerificationError
from InfoTheory.typeClasses import numberOfTypes, typeClassSize


@dataclass(frozen=True)
class SieveReport:
    n: int
    k1: int
    k2: int
    epsilon: float
    z: int
    goodIndices: tuple
    goodIndicesJ1: tuple
    goodIndicesJ2: tuple
    badCountJ1: int
    badCountJ2: int

    @property
    def size(self) -> int:
        return self.badCountJ1 + len(self.goodIndicesJ1)

    def toJSON(self) -> dict:
        return {
            "n": self.n,
            "k1": self.k1,
            "k2": self.k2,
            "epsilon": self.epsilon,
            "z": self.z,
            "good_indices": list(self.goodIndices),
            "bad_count_j1": self.badCountJ1,
            "bad_count_j2": self.badCountJ2,
        }


def codeIsAGood(_code: LinearCode, _A: float) -> bool:
    """
    :Description:

    The A-good test for a single code. The right side carries the type class size ``|T_Q|``: the
    ensemble average of ``N_Q`` is ``q^{k-n} |T_Q|``, and without the factor no binary [7,5] code
    passes for small epsilon. The zero code has no nonzero words and always passes.

    :param _code: the code to test
    :param _A: the slack, ``q^{epsilon n}`` in the sieve

    :return: True if every type satisfies the bound
    """
    q = _code.field.q
    types = numberOfTypes(_code.n, q)
    excess = q ** (_code.n - _code.k)
    for distributionType, count in spectrum(_code).withoutZero().counts.items():
        # both sides multiplied by q^{n-k} to keep the left side an integer
        if count * excess > (types - 1) * typeClassSize(distributionType) * _A:
            return False
    return True


def isAGood(_pair: ConjugatePair, _side: int, _A: float) -> bool:
    return codeIsAGood(_pair.code(_side), _A)


def badBound(_size: int, _q: int, _n: int, _epsilon: float) -> int:
    """``z = floor(N q^{-epsilon n})``."""
    return math.floor(_size * _q ** (-_epsilon * _n))


def sieveGood(_ensemble: BalancedEnsemble, _epsilon: float, workers: int = 1) -> SieveReport:
    """
    :Description:

    Classifies every member of the ensemble with ``A = q^{epsilon n}``, separately for the C1 and C2
    families. The good set is the intersection, so it loses at most ``2z`` indices.

    :param _ensemble: the ensemble
    :param _epsilon: the rate slack, positive
    :param workers: threads used to classify members

    :return: the report

    :raises VerificationError: if a family has more than z bad members
    """
    if not _epsilon > 0:
        raise ValueError(f"epsilon MUST be positive. Got {_epsilon}")

    q = _ensemble.field.q
    config.checkBudget(_ensemble.size * q ** max(_ensemble.k1, _ensemble.k2), "Ensemble sieve")
    A = q ** (_epsilon * _ensemble.n)
    z = badBound(_ensemble.size, q, _ensemble.n, _epsilon)

    def classify(_index: int):
        pair = _ensemble.member(_index)
        return codeIsAGood(pair.c1, A), codeIsAGood(pair.c2, A)

    indices = range(_ensemble.size)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            verdicts = list(executor.map(classify, indices))
    else:
        verdicts = [classify(index) for index in indices]

    goodJ1 = tuple(i for i, (first, _) in zip(indices, verdicts) if first)
    goodJ2 = tuple(i for i, (_, second) in zip(indices, verdicts) if second)
    badJ1 = _ensemble.size - len(goodJ1)
    badJ2 = _ensemble.size - len(goodJ2)

    for side, badCount in [(1, badJ1), (2, badJ2)]:
        if badCount > z:
            raise VerificationError(f"Family {side} has {badCount} bad members, more than the bound z={z}")

    good = tuple(i for i, (first, second) in zip(indices, verdicts) if first and second)
    return SieveReport(_ensemble.n, _ensemble.k1, _ensemble.k2, _epsilon, z, good, goodJ1, goodJ2, badJ1, badJ2)


def isSpectrumBounded(_code: LinearCode) -> bool:
    """``N_Q(C \\ {0}) <= 2 (|P_n| - 1) q^{k-n} |T_Q|`` for every type, checked in integers."""
    q = _code.field.q
    types = numberOfTypes(_code.n, q)
    excess = q ** (_code.n - _code.k)
    return all(count * excess <= 2 * (types - 1) * typeClassSize(distributionType)
               for distributionType, count in spectrum(_code).withoutZero().counts.items())


def findSpectrumBoundedPair(_ensemble: BalancedEnsemble) -> tuple[int, ConjugatePair]:
    """
    :Description:

    Scans the ensemble in index order for a member whose codes both satisfy the spectrum bound of
    ``isSpectrumBounded``.

    :param _ensemble: the ensemble

    :return: ``(index, pair)`` of the first such member

    :raises VerificationError: if no member qualifies
    """
    for index in range(_ensemble.size):
        pair = _ensemble.member(index)
        if isSpectrumBounded(pair.c1) and isSpectrumBounded(pair.c2):
            return index, pair
    raise VerificationError(f"No member of {_ensemble} satisfies the spectrum bound")
