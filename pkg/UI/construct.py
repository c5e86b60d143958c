from fractions import Fraction

import pandas as pd

from Codes.linearCode import spectrum
from Concat.concatenation import generatorOfL1, overallRate, parityCheckOfL2, verifyDuality
from config import RunConfig, UNHASHED_KEYS, configHash
from Ensemble.sieve import findSpectrumBoundedPair
from exceptions import VerificationError
from FileHelpers.csvWriter import csvWriter
from FileHelpers.fileHelper import ensureDirectory
from FileHelpers.jsonWriter import codeToJSON, fieldToJSON, matrixToJSON, writeJSON, writeMatrixRows
from UI import uiHelpers

BUNDLE_FILE = "bundle.json"
SIEVE_FILE = "sieve_report.json"
L1_FILE = "L1_generator.txt"
L2_CHECK_FILE = "L2_parity_check.txt"
SPECTRA_FILE = "inner_spectra"


def bundleFromBuild(_build: uiHelpers.Build, _hash: str, _spectrumBoundedIndex: int) -> dict:
    cfg = _build.cfg
    cp = _build.concatenated
    big = _build.bases.extension.big

    return {
        "config_hash": _hash,
        "config": {key: value for key, value in cfg.toDict().items() if key not in UNHASHED_KEYS},
        "base_field": fieldToJSON(_build.field),
        "outer_field": fieldToJSON(big),
        "polynomial": list(_build.polynomial),
        "T": matrixToJSON(_build.T),
        "ensemble": {"n": cfg.n, "k1": cfg.k1, "k2": cfg.k2, "size": _build.ensemble.size},
        "sieve": _build.sieve.toJSON(),
        "spectrum_bounded_index": _spectrumBoundedIndex,
        "inner_indices": list(_build.innerIndices),
        "bases": {"basis": big.toPowerIndex(list(_build.bases.basis)).tolist(),
                  "dual": big.toPowerIndex(list(_build.bases.dual)).tolist()},
        "outer": {"kind": _build.outer.kind, "N": _build.outer.N, "K1": _build.outer.K1, "K2": _build.outer.K2,
                  "D1": codeToJSON(_build.outer.pair.c1), "D2": codeToJSON(_build.outer.pair.c2)},
        "L1": codeToJSON(cp.L1),
        "L2": codeToJSON(cp.L2),
        "L2_parity_check": matrixToJSON(parityCheckOfL2(cp)),
        "rate": str(overallRate(cp)),
    }


def innerSpectra(_build: uiHelpers.Build) -> pd.DataFrame:
    """Type spectra of both codes of the first inner pair, one row per type with a ``j`` column."""
    pair = _build.ensemble.member(_build.innerIndices[0])
    frames = []
    for side in [1, 2]:
        frame = spectrum(pair.code(side)).toFrame()
        frame.insert(0, "j", side)
        frames.append(frame)
    spectra = pd.concat(frames, ignore_index=True)
    spectra.insert(0, "index", _build.innerIndices[0])
    return spectra


def cmdConstruct(_cfg: RunConfig) -> bool:
    """
    :Description:

    Builds the concatenated pair for the config, checks both duality identities and writes the
    bundle, the sieve report and the plain text matrices to ``cfg.out``.
    Running it twice with the same config writes the same bytes.

    :param _cfg: the run config

    :return: True if everything was built, verified and written

    :raises VerificationError: when an identity fails or the rate is not kK / nN
    """
    configDigest = configHash(_cfg)
    build = uiHelpers.buildFromConfig(_cfg)
    cp = build.concatenated

    print("Verifying duality identities...")
    report = verifyDuality(cp)
    uiHelpers.printChecks(report.checks)
    print(f"\t{uiHelpers.count(len(report.checks), 'identity')} verified")

    print("Searching for a spectrum bounded inner pair...", end="")
    spectrumBoundedIndex, _ = findSpectrumBoundedPair(build.ensemble)
    print(f"Found index {spectrumBoundedIndex}.")

    rate = overallRate(cp)
    expectedRate = Fraction(_cfg.k * cp.outer.K, _cfg.n * cp.N)
    print(f"Overall rate {rate} (k K / n N = {expectedRate})")
    if rate != expectedRate:
        raise VerificationError(f"Overall rate {rate} MUST equal k K / n N = {expectedRate}")

    outDirectory = ensureDirectory(_cfg.out)
    print(f"Writing bundle to {outDirectory}...", end="")
    sieveReport = dict(build.sieve.toJSON(), config_hash=configDigest)
    success = writeJSON(outDirectory + BUNDLE_FILE, bundleFromBuild(build, configDigest, spectrumBoundedIndex)) \
        and writeJSON(outDirectory + SIEVE_FILE, sieveReport) \
        and writeMatrixRows(outDirectory + L1_FILE, generatorOfL1(cp)) \
        and writeMatrixRows(outDirectory + L2_CHECK_FILE, parityCheckOfL2(cp)) \
        and csvWriter(outDirectory + SPECTRA_FILE, innerSpectra(build), configHash=configDigest)

    print("Done." if success else "Failed.")
    return success
