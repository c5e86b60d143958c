from Factories import Factories
import math
import unittest

from Codes.conjugatePair import makePair
from InfoTheory.channelModel import ChannelModel
from InfoTheory.exponent import randomCodingExponent
from Simulate.monteCarlo import REPORT_COLUMNS, ErrorEstimate, TrialConfig, combineEstimates, exponentReport, \
    monteCarlo, runTrials, unionBound, wilsonInterval

LONG_RUN = 10 ** 4


class TestMonteCarlo(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.cp21 = Factories.reference21().concatenated
        cls.hammingPair = makePair(Factories.hamming74(), Factories.hamming74())
        cls.noisy = ChannelModel((0.9, 0.1))
        cls.noiseless = ChannelModel((1.0, 0.0))

    def test_noiseless(self):
        """
        No failures without noise
        """
        estimate = monteCarlo(TrialConfig(self.cp21, 1, self.noiseless, 50))
        self.assertEqual(0, estimate.failures)
        self.assertEqual(0.0, estimate.estimate)
        self.assertEqual("union bound", estimate.boundName)

    def test_reproducible(self):
        """
        Same seed, same failures
        """
        cfg = TrialConfig(self.cp21, 2, self.noisy, 200, seed=7)
        self.assertEqual(monteCarlo(cfg), monteCarlo(cfg))

    def test_offsetsAdd(self):
        """
        Split campaigns add up to the whole
        """
        whole = monteCarlo(TrialConfig(self.hammingPair, 1, self.noisy, 300, seed=3))
        first = monteCarlo(TrialConfig(self.hammingPair, 1, self.noisy, 120, seed=3))
        second = monteCarlo(TrialConfig(self.hammingPair, 1, self.noisy, 180, seed=3, trialOffset=120))
        combined = combineEstimates([first, second])
        self.assertEqual(whole.failures, combined.failures)
        self.assertEqual(300, combined.trials)
        self.assertAlmostEqual(whole.wilsonHigh, combined.wilsonHigh)

    def test_workers(self):
        """
        Threaded runs equal the single threaded run
        """
        cfg = TrialConfig(self.hammingPair, 2, self.noisy, 100, seed=5, trialOffset=40)
        self.assertEqual(monteCarlo(cfg), runTrials(cfg, workers=3))
        self.assertEqual(monteCarlo(cfg), runTrials(cfg, workers=1))

        few = TrialConfig(self.cp21, 1, self.noisy, 2, seed=5)
        self.assertEqual(monteCarlo(few), runTrials(few, workers=8))

    def test_pairBound(self):
        """
        Conjugate pairs report the minimum entropy decoding bound
        """
        estimate = monteCarlo(TrialConfig(self.hammingPair, 1, self.noisy, 20, fixScramble=True))
        self.assertEqual("minimum entropy decoding bound", estimate.boundName)
        self.assertGreater(estimate.bound, 0)

    def test_invalidConfig(self):
        """
        Invalid trial configs
        """
        with self.assertRaises(TypeError):
            TrialConfig(Factories.hamming74(), 1, self.noisy, 10)
        with self.assertRaises(ValueError):
            TrialConfig(self.cp21, 3, self.noisy, 10)
        with self.assertRaises(ValueError):
            TrialConfig(self.cp21, 1, self.noisy, 0)


class TestWilsonInterval(unittest.TestCase):
    def test_zeroFailures(self):
        """
        Zero failures still give a positive upper end
        """
        low, high = wilsonInterval(0, 10)
        self.assertEqual(0.0, low)
        self.assertTrue(0 < high < 1)

    def test_symmetric(self):
        """
        Half failures give an interval symmetric around 1/2
        """
        low, high = wilsonInterval(5, 10)
        self.assertAlmostEqual(1.0, low + high)
        self.assertLess(low, 0.5)

    def test_narrows(self):
        """
        More trials give a narrower interval
        """
        lowSmall, highSmall = wilsonInterval(10, 100)
        lowLarge, highLarge = wilsonInterval(100, 1000)
        self.assertLess(highLarge - lowLarge, highSmall - lowSmall)


class TestUnionBound(unittest.TestCase):
    def test_directSum(self):
        """
        Binomial tail for N = 7, K = 3, P = 0.01
        """
        result = unionBound(7, 0, 3, 0.01)
        expected = sum(math.comb(7, i) * 0.01 ** i * 0.99 ** (7 - i) for i in range(3, 8))
        self.assertEqual(3, result["theta"])
        self.assertAlmostEqual(expected, result["exact"], delta=1e-12)
        self.assertGreaterEqual(result["relaxed"], 0)

    def test_extremes(self):
        """
        P = 0 and P = 1
        """
        self.assertEqual(0.0, unionBound(7, 0, 3, 0.0)["exact"])
        self.assertEqual(0.0, unionBound(7, 0, 3, 0.0)["relaxed"])
        self.assertAlmostEqual(1.0, unionBound(7, 0, 3, 1.0)["exact"])
        self.assertEqual(1.0, unionBound(7, 0, 3, 1.0)["relaxed"])

    def test_badBlocks(self):
        """
        Bad blocks eat into the correction radius
        """
        self.assertEqual(1.0, unionBound(7, 3, 3, 0.01)["exact"])
        self.assertGreater(unionBound(7, 1, 3, 0.01)["exact"], unionBound(7, 0, 3, 0.01)["exact"])
        self.assertEqual(0.0, unionBound(3, 0, 0, 0.0)["exact"])

    def test_invalid(self):
        """
        Invalid union bound arguments
        """
        with self.assertRaises(ValueError):
            unionBound(7, 0, 3, 1.5)
        with self.assertRaises(ValueError):
            unionBound(7, 8, 3, 0.1)


class TestAgainstUnionBound(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.channel = ChannelModel((0.99, 0.01))
        cls.builds = [Factories.reference21().concatenated, Factories.reference49().concatenated]
        cls.estimates = {cp.length: tuple(monteCarlo(TrialConfig(cp, side, cls.channel, LONG_RUN, seed=11))
                                          for side in [1, 2])
                         for cp in cls.builds}

    def test_nonIncreasingInLength(self):
        """
        The [[49,9]] estimate does not exceed the [[21,1]] estimate on either side
        """
        for side in [0, 1]:
            short, long = self.estimates[21][side], self.estimates[49][side]
            self.assertLessEqual(long.wilsonLow, short.wilsonHigh, f"side {side + 1}")

    def test_belowUnionBound(self):
        """
        Estimates stay below the union bound whenever it is below 1
        """
        for length, estimates in self.estimates.items():
            for estimate in estimates:
                self.assertEqual("union bound", estimate.boundName)
                self.assertEqual(LONG_RUN, estimate.trials)
                if estimate.bound < 1:
                    self.assertLessEqual(estimate.wilsonLow, estimate.bound, f"N_o = {length}")

    def test_exponentReport(self):
        """
        Both builds side by side with the exponent target
        """
        runs = [(cp, self.estimates[cp.length]) for cp in reversed(self.builds)]
        report = exponentReport(runs, self.channel, self.channel)
        self.assertEqual(REPORT_COLUMNS, report.columns.to_list())
        self.assertEqual([21, 49, 21, 49], report["N_o"].to_list())
        self.assertEqual([1, 1, 2, 2], report["j"].to_list())
        self.assertAlmostEqual(1 / 21, report["rate"][0])
        self.assertAlmostEqual(9 / 49, report["rate"][1])
        self.assertAlmostEqual(0.5 * (1 - 5 / 7) * randomCodingExponent(self.channel, 5 / 7),
                               report["exponent_target"][1])

        for row in report.itertuples():
            if row.zero_failures:
                self.assertTrue(math.isinf(row.empirical_exponent))
            else:
                self.assertAlmostEqual(-math.log2(row.estimate) / row.N_o, row.empirical_exponent)

        for side in [1, 2]:
            short, long = report[report["j"] == side]["empirical_exponent"].to_list()
            self.assertEqual("non-decreasing" if long >= short else "mixed", report.attrs["trend"][side])


class TestExponentReport(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.noiseless = ChannelModel((1.0, 0.0))
        cls.builds = [Factories.reference21().concatenated, Factories.reference49().concatenated]

    def runs(self, _channel: ChannelModel, _trials: int) -> list:
        return [(cp, tuple(monteCarlo(TrialConfig(cp, side, _channel, _trials)) for side in [1, 2]))
                for cp in self.builds]

    def test_noiseless(self):
        """
        Runs without failures are flagged and keep the trend
        """
        report = exponentReport(self.runs(self.noiseless, 20), self.noiseless, self.noiseless)
        self.assertTrue(report["zero_failures"].all())
        self.assertTrue(all(math.isinf(value) for value in report["empirical_exponent"]))
        self.assertEqual({1: "non-decreasing", 2: "non-decreasing"}, report.attrs["trend"])

    def test_falling(self):
        """
        A falling empirical exponent is reported as mixed
        """
        cp21, cp49 = self.builds
        runs = [(cp21, (ErrorEstimate(1, 1000, 0.0, 0.01), ErrorEstimate(0, 1000, 0.0, 0.004))),
                (cp49, (ErrorEstimate(500, 1000, 0.4, 0.6), ErrorEstimate(0, 1000, 0.0, 0.004)))]
        report = exponentReport(runs, self.noiseless, self.noiseless)
        self.assertEqual({1: "mixed", 2: "non-decreasing"}, report.attrs["trend"])

    def test_singleBuild(self):
        """
        One build has no trend
        """
        report = exponentReport(self.runs(self.noiseless, 5)[:1], self.noiseless, self.noiseless)
        self.assertEqual(2, len(report))
        self.assertEqual({1: "single length", 2: "single length"}, report.attrs["trend"])
        with self.assertRaises(ValueError):
            exponentReport([], self.noiseless, self.noiseless)


if __name__ == '__main__':
    unittest.main()
