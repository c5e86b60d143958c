from Factories import Factories
import unittest
from unittest import mock
import os

import numpy as np

from Algebra.gfMatrix import GFMatrix, companionMatrix, hasOrder, inverse, isAdditivelyClosed, kernel, \
    lowestPrimitivePolynomial, matPower, rank, rref, solve
from exceptions import BudgetExceededError


class TestGFMatrix(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.gf2 = Factories.field(2)
        cls.gf8 = Factories.field(2, 3)
        cls.gf3 = Factories.field(3)

    def test_companionExample(self):
        """
        Companion matrix of x^3 + x + 1
        """
        poly = lowestPrimitivePolynomial(self.gf2, 3)
        self.assertEqual((1, 1, 0, 1), poly)

        T = companionMatrix(self.gf2, poly)
        self.assertEqual([[0, 1, 0], [0, 0, 1], [1, 1, 0]], T.tolist())
        self.assertTrue(hasOrder(T, 7))
        self.assertFalse(hasOrder(T, 14))

    def test_companionInverse(self):
        """
        Inverse of the companion matrix
        """
        T = Factories.companion(2, 3)
        self.assertEqual([[1, 0, 1], [1, 0, 0], [0, 1, 0]], inverse(T).tolist())
        self.assertEqual(inverse(T), matPower(T, 6))
        self.assertEqual(inverse(T), matPower(T, -1))

    def test_notPrimitive(self):
        """
        Irreducible but not primitive polynomial
        """
        # x^2 + 1 is irreducible over GF(3) but its root has order 4, not 8
        with self.assertRaises(ValueError):
            companionMatrix(self.gf3, (1, 0, 1))

    def test_primitiveOverGF3(self):
        """
        Primitive polynomials over GF(3)
        """
        T = companionMatrix(self.gf3, lowestPrimitivePolynomial(self.gf3, 2))
        self.assertTrue(hasOrder(T, 8))
        self.assertTrue(isAdditivelyClosed(T))

    def test_additiveClosure(self):
        """
        Powers of a primitive companion matrix form a field
        """
        self.assertTrue(isAdditivelyClosed(Factories.companion(2, 3)))
        self.assertTrue(isAdditivelyClosed(Factories.companion(2, 4)))

    def test_primitiveSearchBudget(self):
        """
        Primitive polynomial search over budget
        """
        with mock.patch.dict(os.environ, {"CONJ_BUDGET": "4"}):
            with self.assertRaises(BudgetExceededError):
                lowestPrimitivePolynomial(self.gf2, 3)

    def test_rrefAndRank(self):
        """
        Row reduction
        """
        matrix = GFMatrix(self.gf2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        reduced, matrixRank, pivots = rref(matrix)
        self.assertEqual(2, matrixRank)
        self.assertEqual((0, 1), pivots)
        self.assertEqual([[1, 0, 1], [0, 1, 1], [0, 0, 0]], reduced.tolist())
        self.assertEqual(2, rank(matrix))

    def test_kernel(self):
        """
        Kernel rows are annihilated
        """
        matrix = GFMatrix(self.gf8, Factories.randomWords(self.gf8, 3, 6))
        basis = kernel(matrix)
        self.assertEqual(6 - rank(matrix), basis.rows)
        self.assertTrue(np.all((matrix @ basis.transpose()).entries == 0))
        self.assertEqual(basis.rows, rank(basis))

    def test_inverse(self):
        """
        Inverse over GF(8)
        """
        matrix = GFMatrix(self.gf8, [[1, 2, 0], [0, 1, 3], [0, 0, 5]])
        self.assertEqual(GFMatrix.identity(self.gf8, 3), matrix @ inverse(matrix))
        self.assertEqual(GFMatrix.identity(self.gf8, 3), inverse(matrix) @ matrix)

        with self.assertRaises(ValueError):
            inverse(GFMatrix(self.gf2, [[1, 1], [1, 1]]))
        with self.assertRaises(ValueError):
            inverse(GFMatrix(self.gf2, [[1, 1, 0], [1, 1, 1]]))

    def test_solve(self):
        """
        Linear systems
        """
        matrix = GFMatrix(self.gf8, [[1, 2, 3], [0, 5, 7]])
        rhs = [6, 1]
        solution = solve(matrix, rhs)
        np.testing.assert_array_equal(rhs, self.gf8.matmul(matrix.entries, solution[:, None])[:, 0])

        inconsistent = GFMatrix(self.gf2, [[1, 1], [1, 1]])
        self.assertIsNone(solve(inconsistent, [0, 1]))

    def test_shapeErrors(self):
        """
        Incompatible shapes
        """
        with self.assertRaises(ValueError):
            GFMatrix(self.gf2, [[1, 0]]) @ GFMatrix(self.gf2, [[1, 0]])
        with self.assertRaises(ValueError):
            solve(GFMatrix(self.gf2, [[1, 0]]), [1, 1])


if __name__ == '__main__':
    unittest.main()
