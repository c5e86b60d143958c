"""
Description
================

Monte Carlo estimates of the decoding error probability and the analytic values they are compared
with.

Every trial draws a random message, sends it with a random scramble over the additive channel,
decodes and compares. Trial t uses its own counter based stream (``Simulate.channel.trialGenerator``)
so a campaign can be split into pieces with ``trialOffset`` and the pieces add up to the same result.
"""
import dataclasses
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.stats import binom, norm

from Codes.conjugatePair import ConjugatePair, quotientEncode, sideQuotient
from Codes.linearCode import spectrumPremiseFactor
from Concat.concatenation import ConcatenatedPair, concatEncode, overallRate
from InfoTheory.channelModel import ChannelModel
from InfoTheory.entropy import qEntropy
from InfoTheory.exponent import equalParameterExponent, innerErrorBound, minimumEntropyDecodingBound
from Simulate.channel import transmit, trialGenerator
from Simulate.decoders import quotientDecode, concatDecode

CONFIDENCE = 0.95

REPORT_COLUMNS = ["N_o", "rate", "j", "W", "trials", "failures", "estimate", "empirical_exponent",
                  "exponent_target", "zero_failures"]


@dataclass(frozen=True)
class TrialConfig:
    code: object
    side: int
    channel: ChannelModel
    trials: int
    seed: int = 0
    trialOffset: int = 0
    fixScramble: bool = False

    def __post_init__(self):
        if not isinstance(self.code, (ConjugatePair, ConcatenatedPair)):
            raise TypeError("Trials run on a ConjugatePair or a ConcatenatedPair")
        if self.side not in [1, 2]:
            raise ValueError(f"Side MUST be 1 or 2. Got {self.side}")
        if self.trials < 1:
            raise ValueError(f"Need at least one trial. Got {self.trials}")


@dataclass(frozen=True)
class ErrorEstimate:
    failures: int
    trials: int
    wilsonLow: float
    wilsonHigh: float
    bound: float = None
    boundName: str = ""

    @property
    def estimate(self) -> float:
        return self.failures / self.trials


def wilsonInterval(_failures: int, _trials: int, confidence: float = CONFIDENCE) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    z = norm.ppf(0.5 + confidence / 2)
    proportion = _failures / _trials
    denominator = 1 + z ** 2 / _trials
    centre = (proportion + z ** 2 / (2 * _trials)) / denominator
    halfWidth = z * math.sqrt(proportion * (1 - proportion) / _trials + z ** 2 / (4 * _trials ** 2)) / denominator
    return max(0.0, centre - halfWidth), min(1.0, centre + halfWidth)


def sideRates(_cp: ConcatenatedPair, _side: int) -> tuple[float, float]:
    """``(r_j, R_j) = (k_j / n, K_j / N)``."""
    return _cp.inner[0].pair.code(_side).k / _cp.n, _cp.outer.pair.code(_side).k / _cp.N


def __runPairTrial__(_cfg: TrialConfig, _rng: np.random.Generator) -> bool:
    pair: ConjugatePair = _cfg.code
    quotient = sideQuotient(pair, _cfg.side)
    field = pair.field
    message = _rng.integers(0, field.q, size=quotient.k)
    sent = quotientEncode(quotient, message, _rng, scramble=not _cfg.fixScramble)
    received = transmit(field, sent, _cfg.channel, _rng)
    return not np.array_equal(quotientDecode(pair, _cfg.side, received, quotient=quotient), message)


def __runConcatenatedTrial__(_cfg: TrialConfig, _rng: np.random.Generator) -> bool:
    cp: ConcatenatedPair = _cfg.code
    message = _rng.integers(0, cp.outer.field.q, size=cp.outer.K)
    sent = concatEncode(cp, _cfg.side, message, _rng, scramble=not _cfg.fixScramble)
    received = transmit(cp.pair.field, sent, _cfg.channel, _rng)
    decoded = concatDecode(cp, _cfg.side, received)
    return decoded is None or not np.array_equal(decoded, message)


def __analyticBound__(_cfg: TrialConfig):
    if isinstance(_cfg.code, ConjugatePair):
        code = _cfg.code.code(_cfg.side)
        factor = max(1, float(spectrumPremiseFactor(code)))
        return minimumEntropyDecodingBound(code.n, code.k, factor, _cfg.channel), "minimum entropy decoding bound"

    cp: ConcatenatedPair = _cfg.code
    if cp.epsilon is None:
        return None, ""
    innerRate, _ = sideRates(cp, _cfg.side)
    inner = min(1.0, innerErrorBound(cp.n, innerRate, cp.epsilon, _cfg.channel))
    return unionBound(cp.N, 0, cp.outer.pair.code(_cfg.side).k, inner)["exact"], "union bound"


def monteCarlo(_cfg: TrialConfig) -> ErrorEstimate:
    """
    :Description:

    Runs trials ``trialOffset .. trialOffset + trials - 1``.

    :param _cfg: what to simulate

    :return: failures with the Wilson interval and the analytic bound for the code
    """
    runTrial = __runPairTrial__ if isinstance(_cfg.code, ConjugatePair) else __runConcatenatedTrial__

    failures = 0
    for trial in range(_cfg.trialOffset, _cfg.trialOffset + _cfg.trials):
        if runTrial(_cfg, trialGenerator(_cfg.seed, trial)):
            failures += 1

    low, high = wilsonInterval(failures, _cfg.trials)
    bound, boundName = __analyticBound__(_cfg)
    return ErrorEstimate(failures, _cfg.trials, low, high, bound, boundName)


def combineEstimates(_estimates) -> ErrorEstimate:
    """Merges estimates of disjoint trial ranges of the same campaign."""
    estimates = list(_estimates)
    failures = sum(e.failures for e in estimates)
    trials = sum(e.trials for e in estimates)
    low, high = wilsonInterval(failures, trials)
    return ErrorEstimate(failures, trials, low, high, estimates[0].bound, estimates[0].boundName)


def runTrials(_cfg: TrialConfig, workers: int = 1) -> ErrorEstimate:
    """
    :Description:

    Splits the trial range into ``workers`` consecutive pieces, runs them on a thread pool and merges
    the pieces with ``combineEstimates``. Every trial keeps its own stream, so the result equals
    ``monteCarlo(_cfg)`` for any number of workers.

    :param _cfg: what to simulate
    :param workers: threads to use

    :return: the merged estimate
    """
    pieces = min(workers, _cfg.trials)
    if pieces <= 1:
        return monteCarlo(_cfg)

    configs = [dataclasses.replace(_cfg, trials=len(chunk), trialOffset=_cfg.trialOffset + int(chunk[0]))
               for chunk in np.array_split(np.arange(_cfg.trials), pieces)]
    with ThreadPoolExecutor(max_workers=pieces) as executor:
        estimates = list(executor.map(monteCarlo, configs))
    return combineEstimates(estimates)


def unionBound(_N: int, _z: int, _K: int, _innerError: float, q: int = 2) -> dict:
    """
    :Description:

    Probability that more than ``floor((N - K) / 2)`` of the N inner blocks fail when z blocks are
    bad and every other block fails independently with probability at most P:

    ``sum_{i = theta - z}^{N - z} C(N - z, i) P^i (1 - P)^{N - z - i}``, ``theta = floor((N - K) / 2) + 1``.

    The exponential relaxation ``q^{(theta - z) log_q P + (N - theta) log_q (1 - P) + (N - z) h((theta - z) / (N - z))}``
    is reported next to it.

    :param _N: outer length
    :param _z: number of bad inner blocks
    :param _K: outer dimension on this side
    :param _innerError: P, in [0, 1]
    :param q: base of the relaxation

    :return: ``{"exact", "relaxed", "theta"}``
    """
    if not 0 <= _innerError <= 1:
        raise ValueError(f"Inner error probability MUST lie in [0, 1]. Got {_innerError}")
    if not 0 <= _z <= _N:
        raise ValueError(f"Need 0 <= z <= N. Got z={_z}, N={_N}")

    theta = (_N - _K) // 2 + 1
    needed = theta - _z
    trials = _N - _z
    if needed <= 0:
        return {"exact": 1.0, "relaxed": 1.0, "theta": theta}
    if needed > trials:
        return {"exact": 0.0, "relaxed": 0.0, "theta": theta}

    exact = float(binom.sf(needed - 1, trials, _innerError))

    if _innerError == 0:
        relaxed = 0.0
    elif _innerError == 1:
        relaxed = 1.0
    else:
        logQ = math.log(q)
        exponent = (needed * math.log(_innerError) + (_N - theta) * math.log(1 - _innerError)) / logQ \
            + trials * qEntropy(needed / trials, q)
        relaxed = min(1.0, q ** exponent)

    return {"exact": exact, "relaxed": relaxed, "theta": theta}


def __trend__(_exponents) -> str:
    exponents = list(_exponents)
    if len(exponents) < 2:
        return "single length"
    # inf >= inf holds, so runs without failures keep the trend
    if all(later >= earlier for earlier, later in zip(exponents, exponents[1:])):
        return "non-decreasing"
    return "mixed"


def exponentReport(_runs, _first: ChannelModel, _second: ChannelModel) -> pd.DataFrame:
    """
    :Description:

    Lines up the empirical exponent ``-(1/N_o) log_q P_e`` of every build with the target
    ``(1/2)(1 - R_j) E_r(W_j, r_j)``. The length N_o = nN, the overall rate and the side rates
    ``r_j = k_j / n``, ``R_j = K_j / N`` are read off each build.

    The claim is asymptotic, so nothing passes or fails here. ``attrs["trend"]`` maps each side to
    "non-decreasing" when the empirical exponent does not fall as the length grows, "mixed" when it
    does and "single length" for a single build. A run without failures has an infinite empirical
    exponent and is flagged in ``zero_failures``.

    :param _runs: pairs ``(cp, (estimate on side 1, estimate on side 2))``
    :param _first: W1
    :param _second: W2

    :return: one row per build and side, ordered by side then length
    """
    rows = []
    for cp, estimates in _runs:
        rate = float(overallRate(cp))
        q = cp.pair.field.q
        for side, channel, estimate in zip([1, 2], [_first, _second], estimates):
            innerRate, outerRate = sideRates(cp, side)
            if estimate.failures:
                empirical = -math.log(estimate.estimate) / (cp.length * math.log(q))
            else:
                empirical = math.inf
            rows.append({"N_o": cp.length, "rate": rate, "j": side, "W": str(channel), "trials": estimate.trials,
                         "failures": estimate.failures, "estimate": estimate.estimate,
                         "empirical_exponent": empirical,
                         "exponent_target": equalParameterExponent(channel, innerRate, outerRate),
                         "zero_failures": estimate.failures == 0})

    if not rows:
        raise ValueError("Need at least one build to report on")

    frame = pd.DataFrame(rows, columns=REPORT_COLUMNS).sort_values(["j", "N_o"], kind="stable")
    frame = frame.reset_index(drop=True)
    frame.attrs["trend"] = {side: __trend__(group["empirical_exponent"]) for side, group in frame.groupby("j")}
    return frame
