"""
Description
================

The random coding exponent of an additive channel and the error bounds built from it.

``E_r(W, r) = min_Q [ D(Q || W) + max(0, 1 - r - H(Q)) ]`` with the minimum over distributions Q on
GF(q), entropies and divergences in base q. The objective is convex, so it is minimized by projected
gradient descent with an exact simplex projection from several starting points, and the best
result is then polished with an SLSQP solve of the epigraph form (which handles the kink at
``H(Q) = 1 - r``). ``exponentGrid`` is an independent dense-grid oracle for q <= 3.
"""
import math

import numpy as np
import pandas as pd
from scipy.optimize import minimize
from scipy.special import rel_entr, entr

from InfoTheory.channelModel import ChannelModel
from InfoTheory.entropy import entropy
from InfoTheory.typeClasses import numberOfTypes

# gradients are evaluated with probabilities clipped to this
GRADIENT_FLOOR = 1e-15
DEFAULT_ITERATIONS = 500
DEFAULT_TOLERANCE = 1e-12


def projectToSimplex(_point) -> np.ndarray:
    """Euclidean projection onto ``{x : x >= 0, sum x = 1}`` (sort and threshold)."""
    point = np.asarray(_point, dtype=float)
    ordered = -np.sort(-point)
    thresholds = (np.cumsum(ordered) - 1) / np.arange(1, point.size + 1)
    for k in range(point.size - 1, -1, -1):
        if ordered[k] > thresholds[k]:
            return np.maximum(point - thresholds[k], 0)
    # only reachable through NaN input
    raise ValueError(f"Cannot project {point} onto the simplex")


def __objective__(_distribution, _channel: np.ndarray, _rate: float, _logQ: float) -> np.ndarray:
    """Works on the last axis so a whole grid of distributions is evaluated at once."""
    divergence = rel_entr(_distribution, _channel).sum(axis=-1) / _logQ
    excess = 1 - _rate - entr(_distribution).sum(axis=-1) / _logQ
    return divergence + np.maximum(excess, 0)


def __gradient__(_distribution, _channel: np.ndarray, _rate: float, _logQ: float) -> np.ndarray:
    clipped = np.maximum(_distribution, GRADIENT_FLOOR)
    gradient = (np.log(clipped / _channel) + 1) / _logQ
    excess = 1 - _rate - entr(_distribution).sum() / _logQ
    if excess > 0:
        gradient = gradient + (np.log(clipped) + 1) / _logQ
    return gradient


def __projectedGradient__(_start, _channel, _rate, _logQ, _iterations, _tolerance) -> np.ndarray:
    current = projectToSimplex(_start)
    value = __objective__(current, _channel, _rate, _logQ)
    step = 1.0
    for _ in range(_iterations):
        gradient = __gradient__(current, _channel, _rate, _logQ)
        improved = False
        while step > 1e-14:
            candidate = projectToSimplex(current - step * gradient)
            candidateValue = __objective__(candidate, _channel, _rate, _logQ)
            if candidateValue < value - 1e-4 * np.dot(gradient, current - candidate) or \
                    candidateValue < value - _tolerance:
                improved = True
                break
            step /= 2
        if not improved:
            break
        change = value - candidateValue
        current, value = candidate, candidateValue
        step = min(1.0, step * 2)
        if change < _tolerance:
            break
    return current


def __epigraphPolish__(_start, _channel, _rate, _logQ) -> np.ndarray:
    """min D(Q||W) + t  subject to  t >= 0, t >= 1 - r - H(Q), Q on the simplex."""
    size = _channel.size
    start = np.append(_start, max(0.0, 1 - _rate - entr(_start).sum() / _logQ))

    def value(z):
        return rel_entr(z[:size], _channel).sum() / _logQ + z[size]

    def valueGradient(z):
        clipped = np.maximum(z[:size], GRADIENT_FLOOR)
        return np.append((np.log(clipped / _channel) + 1) / _logQ, 1.0)

    def excessConstraint(z):
        return z[size] - (1 - _rate - entr(z[:size]).sum() / _logQ)

    def excessGradient(z):
        clipped = np.maximum(z[:size], GRADIENT_FLOOR)
        return np.append(-(np.log(clipped) + 1) / _logQ, 1.0)

    constraints = [
        {"type": "eq", "fun": lambda z: z[:size].sum() - 1, "jac": lambda z: np.append(np.ones(size), 0.0)},
        {"type": "ineq", "fun": excessConstraint, "jac": excessGradient},
    ]
    bounds = [(0.0, 1.0)] * size + [(0.0, None)]
    result = minimize(value, start, jac=valueGradient, bounds=bounds, constraints=constraints,
                      method="SLSQP", options={"ftol": 1e-14, "maxiter": 500})
    return projectToSimplex(np.clip(result.x[:size], 0, None))


def randomCodingExponent(_channel: ChannelModel, _rate: float, iterations: int = DEFAULT_ITERATIONS,
                         tolerance: float = DEFAULT_TOLERANCE) -> float:
    """
    :Description:

    Computes ``E_r(W, r)`` in base q.

    Distributions that put mass outside the support of W have infinite divergence, so the search
    runs over distributions on the support only. The entropy is still measured in base q.

    :param _channel: the additive channel W
    :param _rate: r in [0, 1]
    :param iterations: projected gradient iterations per start
    :param tolerance: stop once an iteration improves less than this

    :return: the exponent, 0 at or above the rate ``1 - H(W)``
    """
    if not 0 <= _rate <= 1:
        raise ValueError(f"Rate MUST lie in [0, 1]. Got {_rate}")

    logQ = math.log(_channel.q)
    probabilities = _channel.array
    support = probabilities > 0
    channel = probabilities[support]
    size = channel.size

    if size == 1:
        return 1.0 - _rate

    starts = [channel, np.full(size, 1 / size)] + [np.eye(size)[i] for i in range(size)]
    candidates = [__projectedGradient__(start, channel, _rate, logQ, iterations, tolerance) for start in starts]
    best = min(candidates, key=lambda c: __objective__(c, channel, _rate, logQ))

    try:
        candidates.append(__epigraphPolish__(best, channel, _rate, logQ))
    except ValueError:
        pass

    values = [float(__objective__(c, channel, _rate, logQ)) for c in candidates]
    return max(0.0, min(v for v in values if math.isfinite(v)))


def __simplexGrid__(_q: int, _centre, _radius: float, _step: float) -> np.ndarray:
    """Distributions on q <= 3 symbols whose free coordinates lie on a grid around ``_centre``."""
    axes = [np.arange(max(0.0, c - _radius), min(1.0, c + _radius) + _step / 2, _step) for c in _centre]
    mesh = np.meshgrid(*axes, indexing="ij")
    free = np.stack([m.ravel() for m in mesh], axis=-1)
    free = free[free.sum(axis=1) <= 1 + 1e-12]
    first = np.clip(1 - free.sum(axis=1), 0, None)
    return np.column_stack([first, free])


def exponentGrid(_channel: ChannelModel, _rate: float, step: float = 1e-3, refinements: int = 2) -> float:
    """
    :Description:

    Brute force ``E_r`` for q = 2 or 3: evaluates the objective on a grid over the whole simplex,
    then on finer grids (step divided by 10 each time) around the best point so far.

    :param _channel: the channel, q <= 3
    :param _rate: r in [0, 1]
    :param step: spacing of the first grid
    :param refinements: number of zoomed grids

    :return: the smallest objective value found
    """
    if _channel.q > 3:
        raise ValueError(f"The grid oracle only supports q <= 3. Got q={_channel.q}")

    logQ = math.log(_channel.q)
    channel = _channel.array
    centre = np.full(_channel.q - 1, 0.5)
    radius = 0.5

    best = math.inf
    for _ in range(refinements + 1):
        grid = __simplexGrid__(_channel.q, centre, radius, step)
        values = __objective__(grid, channel, _rate, logQ)
        position = int(np.argmin(values))
        if values[position] < best:
            best = float(values[position])
            centre = grid[position, 1:]
        radius = 2 * step
        step /= 10

    return max(0.0, best)


def capacity(_channel: ChannelModel) -> float:
    """``1 - H(W)``: the rate where the exponent reaches zero."""
    return 1.0 - entropy(_channel.array)


def minimumEntropyDecodingBound(_n: int, _dimension: int, _premiseFactor: float, _channel: ChannelModel) -> float:
    """
    :Description:

    Upper bound ``a_n |P_n|^2 q^{-n E_r(W, k/n)}`` on the block error probability of minimum-entropy
    syndrome decoding for a code whose spectrum satisfies the premise with factor ``a_n``.

    :param _n: the length
    :param _dimension: the code dimension (kappa)
    :param _premiseFactor: a_n, at least 1
    :param _channel: the channel

    :return: the bound (may exceed 1)
    """
    if _premiseFactor < 1:
        raise ValueError(f"The premise factor MUST be at least 1. Got {_premiseFactor}")
    if not 0 <= _dimension <= _n:
        raise ValueError(f"Dimension MUST lie in [0, n]. Got {_dimension} for n={_n}")

    types = numberOfTypes(_n, _channel.q)
    exponent = randomCodingExponent(_channel, _dimension / _n)
    return _premiseFactor * types ** 2 * _channel.q ** (-_n * exponent)


def innerErrorBound(_n: int, _rate: float, _epsilon: float, _channel: ChannelModel) -> float:
    """``|P_n|^3 q^{-n (E_r(W, r) - epsilon)}``: decoding error bound for a good inner code."""
    types = numberOfTypes(_n, _channel.q)
    exponent = randomCodingExponent(_channel, _rate)
    return types ** 3 * _channel.q ** (-_n * (exponent - _epsilon))


def achievableRate(_first: ChannelModel, _second: ChannelModel) -> float:
    """``max(0, 1 - H(W1) - H(W2))``."""
    return max(0.0, 1 - entropy(_first.array) - entropy(_second.array))


def symmetricAchievableRate(_first: ChannelModel, _second: ChannelModel) -> float:
    """``max(0, 1 - 2 max(H(W1), H(W2)))``, the rate when both inner rates are taken equal."""
    return max(0.0, 1 - 2 * max(entropy(_first.array), entropy(_second.array)))


def equalParameterExponent(_channel: ChannelModel, _innerRate: float, _outerRate: float) -> float:
    """``(1/2)(1 - R) E_r(W, r)``, the exponent target for one side."""
    return 0.5 * (1 - _outerRate) * randomCodingExponent(_channel, _innerRate)


def exponentSweep(_channel: ChannelModel, _rates, bits: bool = False) -> pd.DataFrame:
    """
    ``E_r`` over a list of rates as a DataFrame with columns ``r`` and ``E_r``.
    With ``bits`` the exponent is converted from base q to base 2.
    """
    scale = math.log2(_channel.q) if bits else 1.0
    rates = [float(r) for r in _rates]
    exponents = [randomCodingExponent(_channel, r) * scale for r in rates]
    return pd.DataFrame({"r": rates, "E_r": exponents})


def concatenatedExponent(_first: ChannelModel, _second: ChannelModel, _overallRate: float,
                         gridPoints: int = 41) -> dict:
    """
    :Description:

    Maximizes ``(1/2) min_l (1 - R_l) E_r(W_l, r_l)`` over inner rates ``r_1, r_2`` and outer rates
    ``R_1, R_2`` in (0, 1] with ``(r_1 + r_2 - 1)(R_1 + R_2 - 1)`` equal to the overall rate.

    The feasible set is parametrized by ``s = r_1 + r_2 - 1`` in ``[R_o, 1]``, ``r_1`` in ``[s, 1]``
    and ``R_1`` in ``[R_o / s, 1]``. ``E_r`` is tabulated once per channel and interpolated.

    :param _first: W1
    :param _second: W2
    :param _overallRate: R_o in (0, 1]
    :param gridPoints: grid points per parameter

    :return: ``{"exponent", "r1", "r2", "R1", "R2"}`` at the best grid point
    """
    if not 0 < _overallRate <= 1:
        raise ValueError(f"Overall rate MUST lie in (0, 1]. Got {_overallRate}")

    rateGrid = np.linspace(0, 1, 4 * gridPoints + 1)
    firstTable = np.array([randomCodingExponent(_first, r) for r in rateGrid])
    secondTable = np.array([randomCodingExponent(_second, r) for r in rateGrid])

    unit = np.linspace(0, 1, gridPoints)
    sumRate, firstShare, outerShare = np.meshgrid(unit, unit, unit, indexing="ij")

    innerSum = _overallRate + (1 - _overallRate) * sumRate
    r1 = innerSum + (1 - innerSum) * firstShare
    r2 = innerSum + 1 - r1
    outerSum = _overallRate / innerSum
    R1 = outerSum + (1 - outerSum) * outerShare
    R2 = outerSum + 1 - R1

    values = 0.5 * np.minimum((1 - R1) * np.interp(r1, rateGrid, firstTable),
                              (1 - R2) * np.interp(r2, rateGrid, secondTable))
    best = np.unravel_index(int(np.argmax(values)), values.shape)
    return {"exponent": float(values[best]), "r1": float(r1[best]), "r2": float(r2[best]),
            "R1": float(R1[best]), "R2": float(R2[best])}
