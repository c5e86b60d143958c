"""
Transmission over additive channels and the per-trial random streams.
"""
import numpy as np

from Algebra.finiteField import FieldSpec
from InfoTheory.channelModel import ChannelModel


def trialGenerator(_seed: int, _trial: int) -> np.random.Generator:
    """
    The generator for one trial: a Philox stream keyed by ``SeedSequence(seed, spawn_key=(trial,))``.
    Trial t draws the same numbers whatever order trials run in, which makes runs resumable.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(_seed, spawn_key=(_trial,))))


def transmit(_field: FieldSpec, _word, _channel: ChannelModel, _rng: np.random.Generator) -> np.ndarray:
    """
    :Description:

    Adds independent noise symbols drawn from the channel distribution to every coordinate.

    :param _field: GF(q), must match the channel's alphabet
    :param _word: the transmitted word
    :param _channel: the additive channel W
    :param _rng: source of the noise

    :return: the received word
    """
    if _channel.q != _field.q:
        raise ValueError(f"Channel is over {_channel.q} symbols, the word over {_field}")
    word = np.asarray(_word, dtype=np.int64)
    noise = _rng.choice(_field.q, size=word.shape, p=_channel.array)
    return _field.add(word, noise)
