from Factories import Factories
import unittest

import numpy as np

from InfoTheory.channelModel import ChannelModel
from Simulate.channel import transmit, trialGenerator

SYMBOLS = 10 ** 5


class TestChannel(unittest.TestCase):
    def test_trialStreams(self):
        """
        Trial streams depend only on seed and trial index
        """
        first = trialGenerator(5, 17).integers(0, 1000, size=10)
        again = trialGenerator(5, 17).integers(0, 1000, size=10)
        other = trialGenerator(5, 18).integers(0, 1000, size=10)
        np.testing.assert_array_equal(first, again)
        self.assertFalse(np.array_equal(first, other))

    def test_transmit(self):
        """
        Additive noise
        """
        field = Factories.field(2, 2)
        word = np.array([1, 2, 3, 0])
        np.testing.assert_array_equal(word, transmit(field, word, ChannelModel((1.0, 0.0, 0.0, 0.0)),
                                                     np.random.default_rng(0)))
        np.testing.assert_array_equal(field.add(word, 2), transmit(field, word, ChannelModel((0.0, 0.0, 1.0, 0.0)),
                                                                   np.random.default_rng(0)))
        with self.assertRaises(ValueError):
            transmit(field, word, ChannelModel((0.5, 0.5)), np.random.default_rng(0))

    def test_transitionFrequencies(self):
        """
        Over 10^5 symbols the added noise follows W within 3 sigma
        """
        cases = [(Factories.field(2), ChannelModel((0.99, 0.01))),
                 (Factories.field(2), ChannelModel((0.9, 0.1))),
                 (Factories.field(2, 2), ChannelModel((0.7, 0.1, 0.15, 0.05))),
                 (Factories.field(3), ChannelModel((0.8, 0.15, 0.05)))]
        for seed, (field, channel) in enumerate(cases):
            with self.subTest(field=str(field), channel=str(channel)):
                rng = np.random.default_rng(seed)
                sent = rng.integers(0, field.q, size=SYMBOLS)
                noise = field.sub(transmit(field, sent, channel, rng), sent)
                frequencies = np.bincount(noise, minlength=field.q) / SYMBOLS
                sigma = np.sqrt(channel.array * (1 - channel.array) / SYMBOLS)
                self.assertTrue(np.all(np.abs(frequencies - channel.array) <= 3 * sigma),
                                f"{frequencies} against {channel}")


if __name__ == '__main__':
    unittest.main()
