import numpy as np
import pandas as pd

from config import RunConfig, configHash
from FileHelpers.csvWriter import csvWriter
from FileHelpers.fileHelper import ensureDirectory
from InfoTheory.exponent import achievableRate, capacity, concatenatedExponent, exponentSweep, \
    symmetricAchievableRate
from UI import uiHelpers

EXPONENT_FILE = "exponent"


def rateGrid(_cfg: RunConfig) -> np.ndarray:
    """``start, start + step, ...`` up to and including ``stop``, rounded to 12 decimals."""
    start, stop, step = _cfg.r_grid
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(count), 12)


def exponentTable(_cfg: RunConfig) -> pd.DataFrame:
    """
    :Description:

    ``E_r(W_j, r)`` for both channels over the configured rate grid, one row per ``(j, r)``, with the
    capacity ``1 - H(W_j)`` and the pair rates ``R_CSS = 1 - H(W1) - H(W2)`` and
    ``1 - 2 max H(W_j)`` repeated on every row.

    :param _cfg: the run config

    :return: columns ``j, W, r, E_r, capacity, R_CSS, R_symmetric, config_hash``
    """
    first, second = uiHelpers.channelsFromConfig(_cfg)
    rates = rateGrid(_cfg)
    pairRate = achievableRate(first, second)
    symmetricRate = symmetricAchievableRate(first, second)
    configDigest = configHash(_cfg)

    frames = []
    for side, channel in [(1, first), (2, second)]:
        print(f"\tSweeping {len(rates)} rates for W{side} = {channel}...", end="")
        frame = exponentSweep(channel, rates, bits=_cfg.bits)
        frame.insert(0, "W", str(channel))
        frame.insert(0, "j", side)
        frame["capacity"] = capacity(channel)
        frame["R_CSS"] = pairRate
        frame["R_symmetric"] = symmetricRate
        frame["config_hash"] = configDigest
        frames.append(frame)
        print("Done.")

    return pd.concat(frames, ignore_index=True)


def cmdExponent(_cfg: RunConfig) -> bool:
    """
    :Description:

    Writes the exponent sweep CSV and prints the best concatenated exponent at half the pair rate.

    :param _cfg: the run config

    :return: True if the CSV was written
    """
    print("Computing random coding exponents...")
    table = exponentTable(_cfg)
    print("\t...Done")

    first, second = uiHelpers.channelsFromConfig(_cfg)
    pairRate = achievableRate(first, second)
    print(f"R_CSS = {pairRate:.6f}")
    if pairRate > 0:
        best = concatenatedExponent(first, second, pairRate / 2)
        print(f"Best concatenated exponent at overall rate {pairRate / 2:.6f}: {best['exponent']:.6f} "
              f"(r1={best['r1']:.3f}, r2={best['r2']:.3f}, R1={best['R1']:.3f}, R2={best['R2']:.3f})")
    else:
        print("...Warning: the channels leave no positive rate")

    filename = ensureDirectory(_cfg.out) + EXPONENT_FILE
    print(f"Writing {filename}.csv...", end="")
    success = csvWriter(filename, table)
    print("Done." if success else "Failed.")
    return success
