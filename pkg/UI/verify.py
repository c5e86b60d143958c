"""
Description
================

Re-checks a bundle written by the construct command.

The construction is rebuilt from the config stored in the bundle and the stored matrices are
checked against it: the conjugacy condition and both duality identities are evaluated on the
STORED codes, so an edited bundle fails on the identity it breaks.
"""
from fractions import Fraction

from Algebra.gfMatrix import hasOrder
from Codes.conjugatePair import makePair
from Codes.linearCode import LinearCode, dual, jointRank
from Concat.concatenation import CSS_CONDITION, overallRate, verifyDuality
from config import RunConfig, configHash, createRunConfig
from Ensemble.balancedEnsemble import verifyBalanced
from Ensemble.sieve import isAGood
from exceptions import VerificationError
from FileHelpers.jsonLoaders import fieldFromJSON, loadBundle, matrixFromJSON
from UI import uiHelpers


def __balanced__(_ensemble, _side: int) -> bool:
    dimension = _ensemble.k1 if _side == 1 else _ensemble.k2
    try:
        return verifyBalanced(_ensemble, _side) == _ensemble.field.q ** dimension - 1
    except VerificationError as e:
        print(f"\t{e}")
        return False


def __sieveConsistent__(_build: uiHelpers.Build, _storedSieve: dict, _storedIndices: list) -> bool:
    report = _build.sieve
    if report.toJSON() != _storedSieve:
        print("\tStored sieve report differs from the recomputed one")
        return False
    if report.badCountJ1 > report.z or report.badCountJ2 > report.z:
        return False
    A = _build.field.q ** (report.epsilon * report.n)
    for index in _storedIndices:
        pair = _build.ensemble.member(index)
        if not (isAGood(pair, 1, A) and isAGood(pair, 2, A)):
            print(f"\tInner index {index} is not good")
            return False
    return True


def cmdVerify(_cfg: RunConfig) -> bool:
    """
    :Description:

    Runs the verification suite on ``cfg.bundle``: config hash, companion matrix order, balancedness
    of both families, sieve consistency, conjugacy of the stored L1 and L2, both duality identities
    against the stored codes, the stored parity check of L2 and the rate.

    :param _cfg: the run config, only ``bundle`` is read

    :return: True if every check passed

    :raises VerificationError: naming the first failed check
    """
    if not _cfg.bundle:
        raise VerificationError("No bundle given to verify")
    bundle = loadBundle(_cfg.bundle)

    storedConfig = createRunConfig(bundle["config"], {"command": "construct", "workers": _cfg.workers})
    if configHash(storedConfig) != bundle["config_hash"]:
        raise VerificationError("Config hash does not match the stored config")

    build = uiHelpers.buildFromConfig(storedConfig)
    cp = build.concatenated

    field = fieldFromJSON(bundle["base_field"])
    if field != build.field or field.generator != build.field.generator:
        raise VerificationError(f"Stored base field {field} does not match the rebuilt one")
    storedT = matrixFromJSON(field, bundle["T"])
    storedL1 = LinearCode(matrixFromJSON(field, bundle["L1"]["generator"]))
    storedL2 = LinearCode(matrixFromJSON(field, bundle["L2"]["generator"]))
    storedCheck = matrixFromJSON(field, bundle["L2_parity_check"])

    checks = {}
    print("Checking the ensemble...")
    checks["T is the companion matrix of the stored polynomial and has order q^n - 1"] = \
        storedT == build.T and tuple(bundle["polynomial"]) == build.polynomial \
        and hasOrder(storedT, build.ensemble.size)
    checks["Family 1 is balanced with V = q^k1 - 1"] = __balanced__(build.ensemble, 1)
    checks["Family 2 is balanced with V = q^k2 - 1"] = __balanced__(build.ensemble, 2)
    checks["Sieve report and inner indices are consistent"] = \
        __sieveConsistent__(build, bundle["sieve"], bundle["inner_indices"]) \
        and list(build.innerIndices) == bundle["inner_indices"]

    print("Checking the concatenated pair...")
    checks["Stored dimensions match the stored generators"] = \
        storedL1.k == bundle["L1"]["k"] and storedL2.k == bundle["L2"]["k"]
    try:
        makePair(storedL1, storedL2)
        checks[CSS_CONDITION] = True
    except ValueError:
        checks[CSS_CONDITION] = False

    duality = verifyDuality(cp, expectedL1=storedL1, expectedL2=storedL2, raiseOnFailure=False)
    for name, result in duality.checks.items():
        if name != CSS_CONDITION:
            checks[name] = result

    # the rows lie in the dual of L2 exactly when adding them does not grow it
    checkCode = LinearCode(storedCheck)
    checks["Stored parity check spans the dual of L2 with nN - dim L2 independent rows"] = \
        checkCode.k == storedCheck.rows == cp.length - storedL2.k \
        and jointRank(checkCode, dual(storedL2)) == cp.length - storedL2.k
    checks["Stored rate equals kK / nN"] = Fraction(bundle["rate"]) == overallRate(cp)

    if not uiHelpers.printChecks(checks):
        failed = [name for name, result in checks.items() if not result]
        raise VerificationError(f"Verification failed: {failed[0]}")
    return True
