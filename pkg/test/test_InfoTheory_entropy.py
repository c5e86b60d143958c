import math
import unittest

from InfoTheory.channelModel import ChannelModel
from InfoTheory.entropy import divergence, entropy, qEntropy
from InfoTheory.typeClasses import TypeDistribution, enumerateTypes, numberOfTypes, typeClassSize, typeOf


class TestEntropy(unittest.TestCase):
    def test_entropy(self):
        """
        Entropy in base q
        """
        self.assertAlmostEqual(1.0, entropy([0.5, 0.5]))
        self.assertAlmostEqual(0.0, entropy([1.0, 0.0]))
        self.assertAlmostEqual(1.0, entropy([1 / 3] * 3))
        self.assertAlmostEqual(math.log2(3), entropy([1 / 3] * 3, base=2))

    def test_divergence(self):
        """
        Relative entropy
        """
        self.assertAlmostEqual(1.0, divergence([1.0, 0.0], [0.5, 0.5]))
        self.assertEqual(math.inf, divergence([0.5, 0.5], [1.0, 0.0]))
        self.assertAlmostEqual(0.0, divergence([0.3, 0.7], [0.3, 0.7]))
        with self.assertRaises(ValueError):
            divergence([0.5, 0.5], [1 / 3] * 3)

    def test_qEntropy(self):
        """
        Binary entropy in base q
        """
        self.assertAlmostEqual(1.0, qEntropy(0.5, 2))
        self.assertEqual(0.0, qEntropy(0.0, 2))
        self.assertAlmostEqual(1 / math.log2(3), qEntropy(0.5, 3))


class TestChannelModel(unittest.TestCase):
    def test_symmetric(self):
        """
        q-ary symmetric channel
        """
        channel = ChannelModel.symmetric(3, 0.3)
        self.assertEqual(3, channel.q)
        self.assertAlmostEqual(0.15, channel.probabilities[2])
        self.assertEqual("(0.7, 0.15, 0.15)", str(channel))

    def test_invalid(self):
        """
        Channels that are not distributions
        """
        with self.assertRaises(ValueError):
            ChannelModel((0.5, 0.6))
        with self.assertRaises(ValueError):
            ChannelModel((1.0,))
        with self.assertRaises(ValueError):
            ChannelModel((1.2, -0.2))


class TestTypeClasses(unittest.TestCase):
    def test_counts(self):
        """
        Number of types and type class sizes
        """
        self.assertEqual(8, numberOfTypes(7, 2))
        self.assertEqual(10, numberOfTypes(3, 3))
        self.assertEqual(35, typeClassSize(TypeDistribution(7, (4, 3))))
        self.assertEqual(6, typeClassSize(TypeDistribution(3, (1, 1, 1))))

    def test_enumerate(self):
        """
        Types enumerate in count order and their classes partition the space
        """
        types = enumerateTypes(3, 3)
        self.assertEqual(10, len(types))
        self.assertEqual(TypeDistribution(3, (0, 0, 3)), types[0])
        self.assertEqual(27, sum(typeClassSize(t) for t in types))

    def test_typeOf(self):
        """
        Type of a word
        """
        self.assertEqual(TypeDistribution(5, (2, 2, 1)), typeOf([0, 1, 2, 1, 0], 3))
        self.assertEqual("(2/5, 2/5, 1/5)", str(typeOf([0, 1, 2, 1, 0], 3)))
        with self.assertRaises(ValueError):
            typeOf([0, 3], 3)
        with self.assertRaises(ValueError):
            TypeDistribution(4, (1, 1))


if __name__ == '__main__':
    unittest.main()
