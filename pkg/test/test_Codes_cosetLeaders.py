from Factories import Factories
import math
import unittest

import numpy as np

from Codes.cosetLeaders import CosetLeaderTable, boundedDistanceDecode, leaderTable, wordEntropies
from Codes.linearCode import LinearCode, containsWord, hammingCode
from Codes.wordEnumeration import allWords, wordIndex
from Simulate.decoders import minEntropySyndromeDecode


def bruteForceLeader(_code: LinearCode, _word) -> np.ndarray:
    """Searches the whole coset for the word of smallest entropy, then weight, then index."""
    field = _code.field
    coset = field.sub(np.asarray(_word)[None, :], _code.codewords())

    def key(_candidate):
        counts = sorted(np.bincount(_candidate, minlength=field.q))
        entropy = -sum(c / _code.n * math.log(c / _code.n) for c in counts if c) / math.log(field.q)
        return round(entropy, 12), int(np.count_nonzero(_candidate)), int(wordIndex(_candidate, field.q))

    return min(coset, key=key)


class TestCosetLeaders(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.gf2 = Factories.field(2)
        cls.hamming = Factories.hamming74()
        cls.table = leaderTable(cls.hamming)

    def test_matchesBruteForce(self):
        """
        Minimum entropy leaders agree with a coset search on every word
        """
        for word in allWords(2, 7):
            np.testing.assert_array_equal(bruteForceLeader(self.hamming, word), self.table.leader(word))

    def test_matchesBruteForceTernary(self):
        """
        Ternary code with repeated entropy ties
        """
        code = hammingCode(Factories.field(3), 2)
        table = CosetLeaderTable(code)
        for word in Factories.randomWords(Factories.field(3), 40, 4):
            np.testing.assert_array_equal(bruteForceLeader(code, word), table.leader(word))

    def test_decodeIsCodeword(self):
        """
        Decoding always lands on a codeword
        """
        words = Factories.randomWords(self.gf2, 50, 7)
        decoded = self.table.decode(words)
        self.assertTrue(all(containsWord(self.hamming, word) for word in decoded))
        np.testing.assert_array_equal(self.table.leader(words), minEntropySyndromeDecode(self.hamming, words))

    def test_singleErrorLeaders(self):
        """
        Weight one leaders win the tie with their weight six complements
        """
        for position in range(7):
            error = np.zeros(7, dtype=np.int64)
            error[position] = 1
            np.testing.assert_array_equal(error, self.table.leader(error))

    def test_weightRanking(self):
        """
        Bounded distance decoding
        """
        codeword = self.hamming.codewords()[9]
        received = codeword.copy()
        received[2] ^= 1
        np.testing.assert_array_equal(codeword, boundedDistanceDecode(self.hamming, received, 1))
        self.assertIsNone(boundedDistanceDecode(self.hamming, received, 0))

    def test_entropies(self):
        """
        Empirical entropies in base q
        """
        entropies = wordEntropies([[0, 0, 0, 0], [0, 1, 0, 1], [1, 1, 1, 0]], 2)
        self.assertAlmostEqual(0.0, entropies[0])
        self.assertAlmostEqual(1.0, entropies[1])
        self.assertAlmostEqual(-(0.25 * math.log2(0.25) + 0.75 * math.log2(0.75)), entropies[2], places=12)

    def test_unknownRanking(self):
        """
        Unknown ranking
        """
        with self.assertRaises(ValueError):
            CosetLeaderTable(self.hamming, "hamming")


if __name__ == '__main__':
    unittest.main()
