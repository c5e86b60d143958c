"""
Description
================

The build pipeline shared by every command plus the report printing helpers.

``buildFromConfig`` runs the whole construction for a ``RunConfig``: base field, primitive
companion matrix, balanced ensemble, sieve, dual bases, outer pair, inner maps and finally the
concatenated pair. Every step is deterministic so building twice from one config gives identical
objects.
"""
from dataclasses import dataclass

import inflect

from Algebra.extensionField import DualBasisPair, ExtensionField, dualBasis
from Algebra.finiteField import FieldSpec, fieldCreate
from Algebra.gfMatrix import GFMatrix, companionMatrix, lowestPrimitivePolynomial
from Concat.concatenation import ConcatenatedPair, concatenate
from Concat.innerMaps import buildInnerMaps
from config import RunConfig
from Ensemble.balancedEnsemble import BalancedEnsemble, buildEnsemble
from Ensemble.sieve import SieveReport, sieveGood
from exceptions import VerificationError
from InfoTheory.channelModel import ChannelModel
from Outer.outerPair import OuterPair, hammingPair, rsPair

__ENGINE__ = inflect.engine()


@dataclass(frozen=True, eq=False)
class Build:
    cfg: RunConfig
    field: FieldSpec
    polynomial: tuple
    T: GFMatrix
    ensemble: BalancedEnsemble
    sieve: SieveReport
    innerIndices: tuple
    bases: DualBasisPair
    outer: OuterPair
    concatenated: ConcatenatedPair


def channelsFromConfig(_cfg: RunConfig) -> tuple[ChannelModel, ChannelModel]:
    return ChannelModel(_cfg.W1), ChannelModel(_cfg.W2)


def selectInnerIndices(_report: SieveReport, _count: int) -> tuple:
    """The first ``_count`` indices that are good on both sides, in index order."""
    if len(_report.goodIndices) < _count:
        raise VerificationError(f"Only {count(len(_report.goodIndices), 'good index')} left after sieving, "
                                f"{_count} inner blocks are needed")
    return tuple(_report.goodIndices[:_count])


def buildFromConfig(_cfg: RunConfig) -> Build:
    """
    :Description:

    Runs the construction described by the config, printing progress along the way.

    :param _cfg: a validated run config

    :return: every intermediate object of the construction

    :raises VerificationError: if a checked identity fails on the way
    :raises BudgetExceededError: if an enumeration is larger than the budget
    """
    print(f"Building GF({_cfg.q}) and a primitive polynomial of degree {_cfg.n}...", end="")
    field = fieldCreate(_cfg.p, _cfg.m)
    polynomial = lowestPrimitivePolynomial(field, _cfg.n)
    T = companionMatrix(field, polynomial)
    print("Done.")

    print(f"Building ensemble with k1={_cfg.k1}, k2={_cfg.k2}...", end="")
    ensemble = buildEnsemble(T, _cfg.k1, _cfg.k2)
    print("Done.")

    print(f"Sieving {ensemble.size} ensemble members with epsilon={_cfg.epsilon}...")
    report = sieveGood(ensemble, _cfg.epsilon, workers=_cfg.workers)
    print(f"\t{count(report.badCountJ1, 'bad index')} in family 1, "
          f"{count(report.badCountJ2, 'bad index')} in family 2, bound z={report.z}")
    print("\t...Done")

    print(f"Building dual bases of GF({_cfg.q ** _cfg.k}) over GF({_cfg.q})...", end="")
    bases = dualBasis(ExtensionField(field, _cfg.k))
    print("Done.")

    outerField = bases.extension.big
    print(f"Building {_cfg.outer_kind.upper()} outer pair over {outerField}...", end="")
    if _cfg.outer_kind == "rs":
        outer = rsPair(outerField, _cfg.N, _cfg.K1, _cfg.K2)
    else:
        outer = hammingPair(outerField, _cfg.hamming_redundancy)
    print("Done.")

    innerIndices = selectInnerIndices(report, outer.N)
    print(f"Concatenating {count(outer.N, 'inner block')}...", end="")
    inner = [buildInnerMaps(ensemble, index, bases) for index in innerIndices]
    concatenated = concatenate(inner, outer, epsilon=_cfg.epsilon)
    print("Done.")
    print(f"\tBuilt {concatenated}")

    return Build(_cfg, field, polynomial, T, ensemble, report, innerIndices, bases, outer, concatenated)


def count(_number: int, _noun: str) -> str:
    """``count(3, 'identity') == '3 identities'``"""
    return f"{_number} {__ENGINE__.plural(_noun, _number)}"


def printChecks(_checks: dict) -> bool:
    """Prints one PASS/FAIL line per named check and a summary. Returns True if everything passed."""
    for name, result in _checks.items():
        print(f"\t{'PASS' if result else 'FAIL'}\t{name}")

    failed = [name for name, result in _checks.items() if not result]
    passed = len(_checks) - len(failed)
    print(f"{count(passed, 'check')} passed, {count(len(failed), 'check')} failed")
    return not failed
