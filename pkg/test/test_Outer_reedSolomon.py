from Factories import Factories
import unittest

import numpy as np

from Codes.conjugatePair import cosetOf
from Codes.linearCode import LinearCode, contains, containsWord, dual, minimumDistance
from Outer.outerPair import hammingPair, outerDecode, outerDualGenerator, outerQuotient, rsPair
from Outer.reedSolomon import GrsCode, bdDecode, dualMultipliers, encode, grsDual, grsSyndromes


class TestReedSolomon(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.gf8 = Factories.field(2, 3)
        cls.gf16 = Factories.field(2, 4)
        cls.points = cls.gf8.m_exp[:7]
        cls.rs73 = GrsCode(cls.gf8, cls.points, np.ones(7, dtype=np.int64), 3)
        cls.rng = np.random.default_rng(99)

    def test_parameters(self):
        """
        RS[7,3] is MDS
        """
        self.assertEqual(7, self.rs73.N)
        self.assertEqual(2, self.rs73.radius)
        self.assertEqual(3, self.rs73.code.k)
        self.assertEqual(5, minimumDistance(self.rs73.code))

    def test_dualCode(self):
        """
        The dual multipliers give the dual code
        """
        for code in [self.rs73, GrsCode(self.gf16, self.gf16.m_exp[:12], self.gf16.m_exp[3:15], 5)]:
            self.assertEqual(dual(code.code), grsDual(code).code)

    def test_syndromesOfCodewords(self):
        """
        Codewords have zero syndromes
        """
        codeword = encode(self.rs73, [3, 0, 5])
        self.assertFalse(np.any(grsSyndromes(self.rs73, codeword, 4)))
        self.assertTrue(containsWord(self.rs73.code, codeword))

    def test_correctsUpToRadius(self):
        """
        Up to floor((N - K) / 2) errors are corrected
        """
        for _ in range(100):
            codeword = encode(self.rs73, self.rng.integers(0, 8, size=3))
            errorCount = int(self.rng.integers(0, 3))
            positions = self.rng.choice(7, size=errorCount, replace=False)
            received = codeword.copy()
            received[positions] = self.gf8.add(received[positions], self.rng.integers(1, 8, size=errorCount))
            np.testing.assert_array_equal(codeword, bdDecode(self.rs73, received))

    def test_beyondRadius(self):
        """
        Three errors never decode to the sent codeword
        """
        for _ in range(50):
            codeword = encode(self.rs73, self.rng.integers(0, 8, size=3))
            positions = self.rng.choice(7, size=3, replace=False)
            received = codeword.copy()
            received[positions] = self.gf8.add(received[positions], self.rng.integers(1, 8, size=3))
            decoded = bdDecode(self.rs73, received)
            if decoded is not None:
                self.assertFalse(np.array_equal(codeword, decoded))
                self.assertTrue(containsWord(self.rs73.code, decoded))
                self.assertLessEqual(np.count_nonzero(decoded != received), 2)

    def test_invalidCodes(self):
        """
        Invalid GRS parameters
        """
        ones = np.ones(7, dtype=np.int64)
        with self.assertRaises(ValueError):
            GrsCode(self.gf8, np.zeros(7, dtype=np.int64), ones, 3)
        with self.assertRaises(ValueError):
            GrsCode(self.gf8, self.points, np.zeros(7, dtype=np.int64), 3)
        with self.assertRaises(ValueError):
            GrsCode(self.gf8, self.points, ones, 8)
        with self.assertRaises(ValueError):
            bdDecode(self.rs73, np.zeros(7, dtype=np.int64), radius=3)

    def test_dualMultipliersNonzero(self):
        """
        Dual multipliers of the all ones code
        """
        multipliers = dualMultipliers(self.gf8, self.points, np.ones(7, dtype=np.int64))
        self.assertTrue(np.all(multipliers != 0))


class TestOuterPair(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.gf8 = Factories.field(2, 3)
        cls.rsOuter = rsPair(cls.gf8, 7, 5, 5)
        cls.hammingOuter = hammingPair(Factories.field(2), 3)

    def test_rsPair(self):
        """
        RS[7,5] pair over GF(8)
        """
        self.assertEqual((7, 5, 5, 3), (self.rsOuter.N, self.rsOuter.K1, self.rsOuter.K2, self.rsOuter.K))
        self.assertEqual((3, 3), self.rsOuter.distances)
        self.assertEqual(1, self.rsOuter.radius(2))
        self.assertTrue(contains(self.rsOuter.pair.c1, dual(self.rsOuter.pair.c2)))
        self.assertEqual(dual(self.rsOuter.pair.c1), LinearCode(outerDualGenerator(self.rsOuter, 1)))
        self.assertEqual(dual(self.hammingOuter.pair.c2), LinearCode(outerDualGenerator(self.hammingOuter, 2)))

    def test_rsPairInvalid(self):
        """
        Invalid RS pair dimensions
        """
        with self.assertRaises(ValueError):
            rsPair(self.gf8, 8, 5, 5)
        with self.assertRaises(ValueError):
            rsPair(self.gf8, 7, 2, 4)

    def test_hammingPair(self):
        """
        Hamming outer pair
        """
        self.assertEqual((7, 4, 4, 1), (self.hammingOuter.N, self.hammingOuter.K1, self.hammingOuter.K2,
                                        self.hammingOuter.K))
        self.assertEqual(1, self.hammingOuter.radius(1))

    def test_outerDecode(self):
        """
        One symbol error is corrected on both kinds of outer pair
        """
        for outer in [self.rsOuter, self.hammingOuter]:
            for side in [1, 2]:
                outerQuotientCode = outerQuotient(outer, side)
                message = np.ones(outerQuotientCode.k, dtype=np.int64)
                codeword = outer.field.matmul(message[None, :], outerQuotientCode.representatives.entries)[0]
                received = codeword.copy()
                received[4] = outer.field.add(received[4], 1)
                decoded = outerDecode(outer, side, received)
                np.testing.assert_array_equal(codeword, decoded)
                np.testing.assert_array_equal(message, cosetOf(outerQuotientCode, decoded))


if __name__ == '__main__':
    unittest.main()
