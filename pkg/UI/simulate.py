import pandas as pd

from config import RunConfig, configHash, createRunConfig
from FileHelpers.csvLoaders import RESULT_COLUMNS
from FileHelpers.csvWriter import csvWriter
from FileHelpers.fileHelper import ensureDirectory
from FileHelpers.jsonLoaders import loadBundle
from exceptions import VerificationError
from Simulate.monteCarlo import TrialConfig, exponentReport, runTrials
from UI import uiHelpers

RESULTS_FILE = "simulation"

# keys a simulation may change on top of a stored build
SIMULATION_KEYS = ["W1", "W2", "trials", "seed", "trial_offset", "fix_scramble", "out", "workers"]


def __resolveConfig__(_cfg: RunConfig) -> RunConfig:
    """With a bundle the stored build is simulated, otherwise the config's own build."""
    if not _cfg.bundle:
        return _cfg

    bundle = loadBundle(_cfg.bundle)
    stored = createRunConfig(bundle["config"], {"command": "construct"})
    if configHash(stored) != bundle["config_hash"]:
        raise VerificationError("Config hash does not match the stored config")

    overrides = {key: value for key, value in _cfg.toDict().items() if key in SIMULATION_KEYS}
    overrides["command"] = "simulate"
    return createRunConfig(bundle["config"], overrides)


def simulationTable(_cfg: RunConfig, _build: uiHelpers.Build) -> pd.DataFrame:
    """
    :Description:

    Runs the Monte Carlo campaign on both sides of the concatenated pair. The ``exponent_target``
    column comes from the exponent report of the build.

    :param _cfg: the run config, supplies channels, trials, seed, offset and workers
    :param _build: the built pair

    :return: one row per side with the ``RESULT_COLUMNS``
    """
    cp = _build.concatenated
    channels = uiHelpers.channelsFromConfig(_cfg)
    configDigest = configHash(_cfg)

    estimates = []
    for side, channel in zip([1, 2], channels):
        print(f"\tSide {side}: {uiHelpers.count(_cfg.trials, 'trial')} over W{side} = {channel}...", end="")
        estimate = runTrials(TrialConfig(cp, side, channel, _cfg.trials, seed=_cfg.seed,
                                         trialOffset=_cfg.trial_offset, fixScramble=_cfg.fix_scramble),
                             workers=_cfg.workers)
        print(f"{uiHelpers.count(estimate.failures, 'failure')}.")
        estimates.append(estimate)

    report = exponentReport([(cp, estimates)], *channels)
    for row in report.itertuples():
        print(f"\tSide {row.j}: empirical exponent {row.empirical_exponent:.4g}, target {row.exponent_target:.4g}")

    table = report.drop(columns=["empirical_exponent", "zero_failures"])
    table["wilson_lo"] = [estimate.wilsonLow for estimate in estimates]
    table["wilson_hi"] = [estimate.wilsonHigh for estimate in estimates]
    table["union_bound"] = [estimate.bound for estimate in estimates]
    table["config_hash"] = configDigest
    table["seed"] = _cfg.seed
    table["trial_offset"] = _cfg.trial_offset
    return table[RESULT_COLUMNS]


def cmdSimulate(_cfg: RunConfig) -> bool:
    """
    :Description:

    Builds the pair (or rebuilds the one in ``cfg.bundle``), estimates the error probability on both
    sides and writes the results CSV. Runs with different ``trial_offset`` cover disjoint trials and
    can be summed.

    :param _cfg: the run config

    :return: True if the CSV was written
    """
    cfg = __resolveConfig__(_cfg)
    build = uiHelpers.buildFromConfig(cfg)

    print("Running Monte Carlo trials...")
    table = simulationTable(cfg, build)
    print("\t...Done")

    filename = ensureDirectory(cfg.out) + RESULTS_FILE
    if cfg.trial_offset:
        filename += f"_offset_{cfg.trial_offset}"
    print(f"Writing {filename}.csv...", end="")
    success = csvWriter(filename, table)
    print("Done." if success else "Failed.")
    return success
