from Factories import Factories
import unittest

from Codes.linearCode import fullCode, repetitionCode, spectrum, zeroCode
from Ensemble.sieve import badBound, codeIsAGood, findSpectrumBoundedPair, isSpectrumBounded, sieveGood
from InfoTheory.typeClasses import numberOfTypes


class TestSieve(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.gf2 = Factories.field(2)
        cls.ensemble = Factories.ensemble(7, 5, 5)

    def test_badBound(self):
        """
        z = floor(N q^(-epsilon n))
        """
        self.assertEqual(78, badBound(127, 2, 7, 0.1))
        self.assertEqual(99, badBound(127, 2, 7, 0.05))
        self.assertEqual(0, badBound(7, 2, 3, 2.0))

    def test_smallBuildsAllGood(self):
        """
        Every [7,5] member is good for epsilon = 0.1
        """
        report = sieveGood(self.ensemble, 0.1)
        self.assertEqual(78, report.z)
        self.assertEqual(0, report.badCountJ1)
        self.assertEqual(0, report.badCountJ2)
        self.assertEqual(tuple(range(127)), report.goodIndices)
        self.assertEqual(127, report.size)

    def test_parallelSieve(self):
        """
        Threads give the same report
        """
        self.assertEqual(sieveGood(self.ensemble, 0.05), sieveGood(self.ensemble, 0.05, workers=4))

    def test_reportJSON(self):
        """
        Sieve report serialization
        """
        report = sieveGood(Factories.ensemble(3, 2, 2), 0.05)
        self.assertEqual({"n": 3, "k1": 2, "k2": 2, "epsilon": 0.05, "z": 6, "good_indices": list(range(7)),
                          "bad_count_j1": 0, "bad_count_j2": 0}, report.toJSON())

    def test_aGoodEdgeCases(self):
        """
        The zero code always passes and the full code passes with A >= 1
        """
        self.assertTrue(codeIsAGood(zeroCode(self.gf2, 5), 1.0))
        self.assertTrue(codeIsAGood(fullCode(self.gf2, 5), 1.0))

    def test_repetitionNotGood(self):
        """
        The repetition code fails for a small A
        """
        # the all ones word needs 2^4 <= (6 - 1) A
        self.assertFalse(codeIsAGood(repetitionCode(self.gf2, 5), 3.0))
        self.assertTrue(codeIsAGood(repetitionCode(self.gf2, 5), 3.3))

    def test_typeClassFactor(self):
        """
        A [7,5] member is good for epsilon = 0.05 only through the type class factor
        """
        A = 2 ** (0.05 * 7)
        code = self.ensemble.member(0).code(1)
        self.assertTrue(codeIsAGood(code, A))
        # 31 nonzero words over 7 weights, so some weight holds more than 7 * 2^-2 * A
        counts = spectrum(code).withoutZero().counts.values()
        self.assertGreater(max(counts), (numberOfTypes(7, 2) - 1) * 2 ** (5 - 7) * A)

    def test_invalidEpsilon(self):
        """
        Non positive epsilon
        """
        with self.assertRaises(ValueError):
            sieveGood(self.ensemble, 0.0)

    def test_spectrumBounded(self):
        """
        Spectrum bounded members exist
        """
        index, pair = findSpectrumBoundedPair(self.ensemble)
        self.assertTrue(0 <= index < 127)
        self.assertTrue(isSpectrumBounded(pair.c1))
        self.assertTrue(isSpectrumBounded(pair.c2))
        self.assertEqual(0, findSpectrumBoundedPair(Factories.ensemble(3, 3, 3))[0])


if __name__ == '__main__':
    unittest.main()
