from Factories import Factories
import unittest

import numpy as np

from Algebra import polynomials
from Algebra.finiteField import FieldSpec, fieldCreate, isPrime, primeFactors
from exceptions import BudgetExceededError


class TestFiniteField(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.gf2 = Factories.field(2)
        cls.gf3 = Factories.field(3)
        cls.gf4 = Factories.field(2, 2)
        cls.gf8 = Factories.field(2, 3)
        cls.gf9 = Factories.field(3, 2)

    def test_lowestModulus(self):
        """
        Lowest irreducible moduli
        """
        self.assertEqual((1, 1, 1), self.gf4.modulus)
        self.assertEqual((1, 1, 0, 1), self.gf8.modulus)
        self.assertEqual(2, self.gf8.generator)

    def test_gf8Multiplication(self):
        """
        GF(8) products on x^3 + x + 1
        """
        self.assertEqual(3, int(self.gf8.mul(2, 4)))
        self.assertEqual(6, int(self.gf8.mul(2, 3)))
        self.assertEqual(0, int(self.gf8.mul(0, 5)))

    def test_gf4Arithmetic(self):
        """
        GF(4) products and inverses
        """
        self.assertEqual(3, int(self.gf4.mul(2, 2)))
        self.assertEqual(3, int(self.gf4.inv(2)))
        self.assertEqual(1, int(self.gf4.add(2, 3)))

    def test_fieldAxioms(self):
        """
        Every nonzero element has an inverse and multiplication distributes
        """
        for field in [self.gf3, self.gf4, self.gf8, self.gf9]:
            nonzero = field.elements()[1:]
            np.testing.assert_array_equal(np.ones_like(nonzero), field.mul(nonzero, field.inv(nonzero)))

            a, b, c = np.meshgrid(field.elements(), field.elements(), field.elements(), indexing="ij")
            np.testing.assert_array_equal(field.mul(a, field.add(b, c)),
                                          field.add(field.mul(a, b), field.mul(a, c)))

    def test_subtraction(self):
        """
        a - b + b = a in odd characteristic
        """
        a, b = np.meshgrid(self.gf9.elements(), self.gf9.elements(), indexing="ij")
        np.testing.assert_array_equal(a, self.gf9.add(self.gf9.sub(a, b), b))

    def test_generatorOrder(self):
        """
        The generator runs through every nonzero element
        """
        for field in [self.gf3, self.gf4, self.gf8, self.gf9]:
            powers = [int(field.power(field.generator, e)) for e in range(field.q - 1)]
            self.assertEqual(sorted(powers), list(range(1, field.q)))

    def test_powerEdgeCases(self):
        """
        0^0 is 1 and 0^-1 raises
        """
        self.assertEqual(1, int(self.gf8.power(0, 0)))
        self.assertEqual(int(self.gf8.inv(5)), int(self.gf8.power(5, -1)))
        with self.assertRaises(ZeroDivisionError):
            self.gf8.power(0, -1)
        with self.assertRaises(ZeroDivisionError):
            self.gf8.inv(0)

    def test_powerIndex(self):
        """
        Power index encoding
        """
        self.assertEqual(0, int(self.gf8.toPowerIndex(0)))
        self.assertEqual(1, int(self.gf8.toPowerIndex(1)))
        self.assertEqual(2, int(self.gf8.toPowerIndex(self.gf8.generator)))
        np.testing.assert_array_equal(self.gf8.elements(), self.gf8.fromPowerIndex(self.gf8.toPowerIndex(self.gf8.elements())))
        with self.assertRaises(ValueError):
            self.gf8.fromPowerIndex(8)

    def test_matmul(self):
        """
        Matrix products agree with elementwise sums
        """
        a = Factories.randomWords(self.gf9, 3, 4)
        b = Factories.randomWords(self.gf9, 4, 2, seed=7)
        product = self.gf9.matmul(a, b)
        expected = self.gf9.sum(self.gf9.mul(a[0][:, None], b), axis=0)
        np.testing.assert_array_equal(expected, product[0])

    def test_invalidFields(self):
        """
        Invalid field parameters
        """
        with self.assertRaises(ValueError):
            fieldCreate(4, 1)
        with self.assertRaises(ValueError):
            FieldSpec(2, 2, (1, 0, 1))
        with self.assertRaises(BudgetExceededError):
            fieldCreate(2, 17)

    def test_sameInstance(self):
        """
        fieldCreate caches its fields
        """
        self.assertIs(fieldCreate(2, 3), fieldCreate(2, 3))

    def test_primes(self):
        """
        Primality and prime factors
        """
        self.assertTrue(isPrime(7))
        self.assertFalse(isPrime(1))
        self.assertFalse(isPrime(9))
        self.assertEqual([3, 7], primeFactors(63))
        self.assertEqual([2], primeFactors(8))


class TestPolynomials(unittest.TestCase):
    def test_irreducible(self):
        """
        Irreducibility over GF(2)
        """
        self.assertTrue(polynomials.isIrreducible((1, 1, 0, 1), 2))
        self.assertFalse(polynomials.isIrreducible((1, 0, 1), 2))
        self.assertEqual((1, 1, 0, 1), polynomials.lowestIrreducible(2, 3))

    def test_polyMod(self):
        """
        x^3 mod x^3 + x + 1
        """
        self.assertEqual((1, 1), polynomials.polyMod((0, 0, 0, 1), (1, 1, 0, 1), 2))
        self.assertEqual((), polynomials.polyMod((1, 1, 0, 1), (1, 1, 0, 1), 2))

    def test_trimAndDegree(self):
        """
        Trailing zeros
        """
        self.assertEqual((1, 2), polynomials.trim((1, 2, 0, 0)))
        self.assertEqual(-1, polynomials.degree((0, 0)))
        self.assertEqual((1, 0, 1), polynomials.polyMul((1, 1), (1, 1), 2))


if __name__ == '__main__':
    unittest.main()
