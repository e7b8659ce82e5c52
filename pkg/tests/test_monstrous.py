"""Test Faber polynomials, replicability and Monstrous supertraces in monstrous.py."""

import unittest
from fractions import Fraction
import gradedlie

monstrous = gradedlie.monstrous

J = monstrous.QSeries(tuple(monstrous.j_coefficients(16)), 'J')
C1, C2, C3 = J.f(1), J.f(2), J.f(3)


class TestQSeries(unittest.TestCase):
    """Evaluate QSeries and the j coefficients."""

    def test_j_values(self):
        """Test the first coefficients of j - 744."""
        self.assertEqual(monstrous.j_coefficients(3), [196884, 21493760, 864299970])

    def test_shipped(self):
        """Test that the shipped series matches the computed one."""
        self.assertEqual(monstrous.load_j_series(), monstrous.QSeries(tuple(monstrous.j_coefficients(8))))

    def test_depth(self):
        """Test that f(n) past the depth raises InsufficientData."""
        with self.assertRaises(gradedlie.InsufficientData):
            monstrous.QSeries((1, 2)).f(3)
        self.assertEqual(monstrous.QSeries((1, 2)).f(-1), 1)

    def test_from_mapping(self):
        """Test missing exponents and the normalization."""
        series = monstrous.QSeries.from_mapping({-1: 1, 0: 0, 3: 5})
        self.assertEqual(series.coefficients, (0, 0, 5))
        with self.assertRaises(gradedlie.GradingError):
            monstrous.QSeries.from_mapping({-1: 2})
        with self.assertRaises(gradedlie.GradingError):
            monstrous.QSeries((Fraction(1, 2),))


class TestFaber(unittest.TestCase):
    """Evaluate faber_polynomial and faber_check."""

    def test_low_degrees(self):
        """Test P₁ = t, P₂ = t² - 2f(1), P₃ = t³ - 3f(1)t - 3f(2)."""
        self.assertEqual(monstrous.faber_polynomial(J, 1), [0, 1])
        self.assertEqual(monstrous.faber_polynomial(J, 2), [-2 * C1, 0, 1])
        self.assertEqual(monstrous.faber_polynomial(J, 3), [-3 * C2, -3 * C1, 0, 1])

    def test_check(self):
        """Test that P_m(J) ≡ q^{-m} and that a wrong constant is caught."""
        for m in range(1, 7):
            self.assertTrue(monstrous.faber_check(J, m))
        result = monstrous.faber_check(J, 2, [-2 * C1 + 1, 0, 1])
        self.assertFalse(result)
        self.assertEqual(result.discrepancy, 0)

    def test_depth_needed(self):
        """Test that P_m needs f up to m - 1."""
        with self.assertRaises(gradedlie.InsufficientData):
            monstrous.faber_polynomial(monstrous.QSeries((1,)), 4)


class TestReplicability(unittest.TestCase):
    """Evaluate replicability_check."""

    def test_j(self):
        """Test that J is its own replicate to box 8."""
        self.assertTrue(monstrous.replicability_check(monstrous.ReplicateFamily.constant(J), 8))

    def test_corrupted_replicate(self):
        """Test that a wrong f^(2)(1) is caught at (2, 2)."""
        bad = J.with_coefficient(1, C1 + 1)
        family = monstrous.ReplicateFamily({1: J, 2: bad}, J)
        result = monstrous.replicability_check(family, 8)
        self.assertFalse(result)
        self.assertEqual(result.discrepancy.gamma, (2, 2))

    def test_trivial(self):
        """Test that F = q⁻¹ is replicable."""
        series = monstrous.QSeries((0,) * 9)
        self.assertTrue(monstrous.replicability_check(monstrous.ReplicateFamily.constant(series), 6))

    def test_missing_replicate(self):
        """Test that a family without F^(2) raises InsufficientData."""
        family = monstrous.ReplicateFamily({1: J})
        with self.assertRaises(gradedlie.InsufficientData):
            monstrous.replicability_check(family, 6)


class TestMonstrousSupertrace(unittest.TestCase):
    """Evaluate monstrous_supertrace and its replicable form."""

    def test_coprime(self):
        """Test that str at (1, n) is f(n)."""
        for n in range(1, 6):
            self.assertEqual(monstrous.monstrous_supertrace(1, n, J), J.f(n))

    def test_two_two(self):
        """Test the (2, 2) value c₃ + (c₁² - c₁)/2 against the replicate formula."""
        expected = C3 + Fraction(C1 * C1 - C1, 2)
        self.assertEqual(monstrous.monstrous_supertrace(2, 2, J), expected)
        family = monstrous.ReplicateFamily.constant(J)
        self.assertEqual(monstrous.monstrous_supertrace_replicable(2, 2, family), expected)
        self.assertEqual(expected, J.f(4))

    def test_symmetric(self):
        """Test str at (m, n) equals str at (n, m)."""
        for m, n in ((2, 3), (2, 4), (3, 3)):
            self.assertEqual(monstrous.monstrous_supertrace(m, n, J), monstrous.monstrous_supertrace(n, m, J))

    def test_replicable_agrees(self):
        """Test the Witt route against the replicate route for m + n <= 8."""
        family = monstrous.ReplicateFamily.constant(J)
        for m in range(1, 7):
            for n in range(1, 8 - m + 1):
                self.assertEqual(monstrous.monstrous_supertrace(m, n, J),
                                 monstrous.monstrous_supertrace_replicable(m, n, family))

    def test_bad_degree(self):
        """Test that (0, n) is refused."""
        with self.assertRaises(gradedlie.GradingError):
            monstrous.monstrous_supertrace(0, 2, J)


class TestMonstrousData(unittest.TestCase):
    """Evaluate monstrous_data and gkm_cross_check."""

    def test_data(self):
        """Test the matrix -(i+j), charges and parities."""
        series = monstrous.QSeries((3, 0, -2))
        data = monstrous.monstrous_data(series, 3)
        self.assertEqual(data.indices, (-1, 1, 3))
        self.assertEqual(data.matrix[0], (2, 0, -2))
        self.assertEqual(data.charge, (1, 3, 2))
        self.assertEqual(data.parity, (1, 1, -1))
        self.assertEqual(gradedlie.gkm.validate(data), [])

    def test_cross_check(self):
        """Test the free-case route on the Monstrous data of J to box 4."""
        self.assertTrue(monstrous.gkm_cross_check(J, 4))


if __name__ == '__main__':
    unittest.main()
