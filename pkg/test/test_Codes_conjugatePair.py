from Factories import Factories
import unittest

import numpy as np

from Algebra.gfMatrix import GFMatrix
from Codes.conjugatePair import QuotientCode, cosetOf, makePair, quotient, quotientEncode, sideQuotient
from Codes.linearCode import LinearCode, dual, fullCode, repetitionCode
from Codes.wordEnumeration import allWords
from Simulate.decoders import quotientDecode


class TestConjugatePair(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.gf2 = Factories.field(2)
        cls.hamming = Factories.hamming74()
        cls.pair = makePair(cls.hamming, cls.hamming)
        cls.rng = np.random.default_rng(2024)

    def test_makePair(self):
        """
        Hamming code paired with itself
        """
        self.assertEqual(7, self.pair.n)
        self.assertEqual(1, self.pair.k)
        self.assertIs(self.hamming, self.pair.code(2))
        self.assertIs(self.hamming, self.pair.other(1))
        with self.assertRaises(ValueError):
            self.pair.code(3)

    def test_notConjugate(self):
        """
        Pairs violating the conjugacy condition
        """
        repetition = repetitionCode(self.gf2, 7)
        with self.assertRaises(ValueError):
            makePair(self.hamming, repetition)
        with self.assertRaises(ValueError):
            makePair(dual(self.hamming), dual(self.hamming))
        with self.assertRaises(ValueError):
            makePair(self.hamming, fullCode(self.gf2, 6))

    def test_quotientDimension(self):
        """
        Hamming modulo simplex carries one symbol
        """
        hammingQuotient = sideQuotient(self.pair, 1)
        self.assertEqual(1, hammingQuotient.k)
        self.assertEqual(dual(self.hamming), hammingQuotient.subcode)

    def test_noiselessRoundTrip(self):
        """
        Every message and every scramble decodes to the message
        """
        hammingQuotient = sideQuotient(self.pair, 1)
        simplexWords = hammingQuotient.subcode.codewords()
        for message in allWords(2, hammingQuotient.k):
            base = self.gf2.matmul(message[None, :], hammingQuotient.representatives.entries)[0]
            for scramble in simplexWords:
                word = self.gf2.add(base, scramble)
                np.testing.assert_array_equal(message, cosetOf(hammingQuotient, word))

    def test_encodeWithoutScramble(self):
        """
        scramble=False sends the representative combination
        """
        hammingQuotient = sideQuotient(self.pair, 1)
        sent = quotientEncode(hammingQuotient, [1], self.rng, scramble=False)
        np.testing.assert_array_equal(hammingQuotient.representatives.entries[0], sent)
        with self.assertRaises(ValueError):
            quotientEncode(hammingQuotient, [1, 0], self.rng)

    def test_singleErrorsCorrected(self):
        """
        Single errors are corrected for every message and scramble
        """
        hammingQuotient = sideQuotient(self.pair, 2)
        simplexWords = hammingQuotient.subcode.codewords()
        for message in allWords(2, 1):
            base = self.gf2.matmul(message[None, :], hammingQuotient.representatives.entries)[0]
            for scramble in simplexWords:
                for position in range(7):
                    received = self.gf2.add(base, scramble)
                    received[position] ^= 1
                    np.testing.assert_array_equal(message, quotientDecode(self.pair, 2, received))

    def test_scrambleIndependence(self):
        """
        Decoding depends on the error only, never on the scramble
        """
        hammingQuotient = sideQuotient(self.pair, 1)
        error = np.array([1, 1, 0, 0, 0, 0, 0])
        base = hammingQuotient.representatives.entries[0]
        decoded = {tuple(quotientDecode(self.pair, 1, self.gf2.add(self.gf2.add(base, scramble), error)))
                   for scramble in hammingQuotient.subcode.codewords()}
        self.assertEqual(1, len(decoded))

    def test_cosetOfRejectsNonCodewords(self):
        """
        Coset coordinates of a non codeword
        """
        with self.assertRaises(ValueError):
            cosetOf(sideQuotient(self.pair, 1), [1, 0, 0, 0, 0, 0, 0])

    def test_explicitRepresentatives(self):
        """
        Quotient with hand picked representatives
        """
        full = fullCode(self.gf2, 3)
        repetition = repetitionCode(self.gf2, 3)
        representatives = GFMatrix(self.gf2, [[1, 0, 0], [0, 1, 0]])
        fullQuotient = QuotientCode(full, repetition, representatives)
        np.testing.assert_array_equal([1, 1], cosetOf(fullQuotient, [0, 0, 1]))
        np.testing.assert_array_equal([[0, 0], [1, 0]], cosetOf(fullQuotient, [[1, 1, 1], [0, 1, 1]]))

        with self.assertRaises(ValueError):
            QuotientCode(full, repetition, GFMatrix(self.gf2, [[1, 1, 1], [0, 1, 0]]))
        with self.assertRaises(ValueError):
            QuotientCode(repetition, full, GFMatrix(self.gf2, [[1, 0, 0], [0, 1, 0]]))

    def test_deterministicRepresentatives(self):
        """
        quotient() picks the same representatives every time
        """
        first = quotient(self.hamming, dual(self.hamming))
        second = quotient(LinearCode(self.hamming.generator), dual(self.hamming))
        self.assertEqual(first.representatives, second.representatives)


if __name__ == '__main__':
    unittest.main()
