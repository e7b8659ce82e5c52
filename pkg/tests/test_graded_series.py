"""Test degrees, sign maps and truncated series found in graded_series.py."""

import itertools
import unittest
from fractions import Fraction
import numpy as np
import gradedlie


def _line(bound, terms, basis='E'):
    spec = gradedlie.GradingSpec.trivial(1)
    return gradedlie.FormalSeries(spec, bound, {spec.degree((k,)): c for k, c in terms.items()}, basis)


class TestToFraction(unittest.TestCase):
    """Evaluate exact number parsing."""

    def test_strings(self):
        """Test that "p/q" strings become Fractions."""
        self.assertEqual(gradedlie.to_fraction('-3/4'), Fraction(-3, 4))
        self.assertEqual(gradedlie.to_fraction('196884'), Fraction(196884))

    def test_float_refused(self):
        """Test that floats are rejected."""
        with self.assertRaises(gradedlie.GradingError):
            gradedlie.to_fraction(0.5)

    def test_zero_denominator(self):
        """Test that a zero denominator is rejected."""
        with self.assertRaises(gradedlie.GradingError):
            gradedlie.to_fraction('1/0')

    def test_format_number(self):
        """Test integer and rational rendering."""
        self.assertEqual(gradedlie.format_number(Fraction(6, 2)), '3')
        self.assertEqual(gradedlie.format_number(Fraction(-3, 4)), '-3/4')


class TestGradingSpec(unittest.TestCase):
    """Evaluate GradingSpec validation and the sign map."""

    def test_odd_modulus_with_odd_parity(self):
        """Test that ψ = -1 on an odd cyclic group is rejected."""
        with self.assertRaises(gradedlie.GradingError):
            gradedlie.GradingSpec(1, (3,), (-1,))

    def test_parity_length(self):
        """Test that parity and moduli must have equal length."""
        with self.assertRaises(gradedlie.GradingError):
            gradedlie.GradingSpec(1, (2, 2), (-1,))

    def test_sign_trivial(self):
        """Test that a trivial coloring gives +1."""
        spec = gradedlie.GradingSpec(2, (2,), (1,))
        self.assertEqual(gradedlie.sign(spec, spec.degree((1, 3), (1,))), 1)

    def test_sign_odd(self):
        """Test ψ = -1 on the odd class of ℤ₂."""
        spec = gradedlie.GradingSpec.super_grading(1)
        self.assertEqual(gradedlie.sign(spec, spec.degree((1,), (1,))), -1)

    def test_sign_product(self):
        """Test that two odd coordinates multiply to +1."""
        spec = gradedlie.GradingSpec(1, (2, 2), (-1, -1))
        self.assertEqual(gradedlie.sign(spec, spec.degree((1,), (1, 1))), 1)

    def test_degree_mismatch(self):
        """Test that a degree of the wrong shape is refused."""
        spec = gradedlie.GradingSpec.super_grading(1)
        with self.assertRaises(gradedlie.GradingError):
            spec.degree((1, 2), (0,))


class TestDegree(unittest.TestCase):
    """Evaluate Degree arithmetic."""

    def test_addition_commutes(self):
        """Test commutativity and associativity of addition."""
        spec = gradedlie.GradingSpec.super_grading(2)
        a = spec.degree((1, 0), (1,))
        b = spec.degree((0, 2), (1,))
        c = spec.degree((3, 1), (0,))
        self.assertEqual(a + b, b + a)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a + b).acomp, (0,))

    def test_negative_coordinate(self):
        """Test that negative Γ-coordinates are refused."""
        with self.assertRaises(gradedlie.GradingError):
            gradedlie.Degree((-1,))


class TestFormalSeries(unittest.TestCase):
    """Evaluate basis changes, exp and log."""

    def test_convert_even(self):
        """Test that even degrees keep their coefficients."""
        s = _line(3, {1: 2, 2: 5})
        t = gradedlie.basis_convert(s)
        self.assertEqual(t.basis, 'e')
        self.assertEqual(t.terms, s.terms)

    def test_convert_odd(self):
        """Test 3·E^d = -3·e^d at an odd degree."""
        spec = gradedlie.GradingSpec.super_grading(1)
        d = spec.degree((1,), (1,))
        s = gradedlie.FormalSeries(spec, 3, {d: 3}, 'E')
        self.assertEqual(s.convert().coefficient(d), -3)
        self.assertEqual(s.convert().convert(), s)

    def test_truncation(self):
        """Test that terms above the bound are dropped."""
        s = _line(2, {1: 1, 3: 7})
        self.assertEqual(len(s.terms), 1)

    def test_exp_zero(self):
        """Test exp(0) = 1."""
        spec = gradedlie.GradingSpec.trivial(1)
        zero = gradedlie.FormalSeries(spec, 4, {}, 'E')
        self.assertEqual(zero.exp(), gradedlie.FormalSeries.one(spec, 4))

    def test_log_one_minus(self):
        """Test that log(1 - E^d) has coefficient -1/k at k·d."""
        s = _line(6, {0: 1, 1: -1}).log()
        spec = s.spec
        for k in range(1, 7):
            self.assertEqual(s.coefficient(spec.degree((k,))), Fraction(-1, k))

    def test_round_trip(self):
        """Test exp(log(1 + 5E^d)) = 1 + 5E^d."""
        s = _line(6, {0: 1, 1: 5})
        self.assertEqual(s.log().exp(), s)

    def test_exp_needs_zero_constant(self):
        """Test that exp refuses a constant term."""
        with self.assertRaises(gradedlie.GradingError):
            _line(3, {0: 1}).exp()

    def test_log_needs_unit_constant(self):
        """Test that log refuses a constant term other than 1."""
        with self.assertRaises(gradedlie.GradingError):
            gradedlie.series_exp_log(_line(3, {0: 2}), 'log')

    def test_inverse(self):
        """Test (1 - E^d)·(1 - E^d)⁻¹ = 1."""
        s = _line(5, {0: 1, 1: -1})
        self.assertEqual(s * s.inverse(), gradedlie.FormalSeries.one(s.spec, 5))
        self.assertEqual(s.inverse().coefficient(s.spec.degree((4,))), 1)


MIXED = gradedlie.GradingSpec(2, (2, 3, 4), (-1, 1, -1))


def _random_degree(rng, spec, top=3):
    gamma = tuple(int(x) for x in rng.integers(0, top + 1, spec.gamma_rank))
    acomp = tuple(int(rng.integers(0, m)) for m in spec.group_moduli)
    return spec.degree(gamma, acomp)


def _random_series(rng, spec, bound, basis='E', size=5):
    terms = {}
    for _ in range(size):
        d = _random_degree(rng, spec)
        terms[d] = terms.get(d, 0) + Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))
    return gradedlie.FormalSeries(spec, bound, terms, basis)


class TestSeriesAlgebra(unittest.TestCase):
    """Evaluate ring laws on random sparse series."""

    def setUp(self):
        """Seeded generator."""
        self.rng = np.random.default_rng(2024)

    def test_multiplication_commutes(self):
        """Test s·t = t·s and (s·t)·u = s·(t·u)."""
        for spec in (MIXED, gradedlie.GradingSpec.super_grading(1)):
            for _ in range(10):
                s, t, u = (_random_series(self.rng, spec, 6) for _ in range(3))
                self.assertEqual(s * t, t * s)
                self.assertEqual((s * t) * u, s * (t * u))

    def test_distributive(self):
        """Test s·(t + u) = s·t + s·u."""
        for _ in range(10):
            s, t, u = (_random_series(self.rng, MIXED, 6) for _ in range(3))
            self.assertEqual(s * (t + u), s * t + s * u)

    def test_sign_homomorphism(self):
        """Test ψ(d + e) = ψ(d)·ψ(e), odd moduli included."""
        for spec in (MIXED, gradedlie.GradingSpec(1, (3, 2), (1, -1)), gradedlie.GradingSpec.super_grading(2)):
            for _ in range(50):
                d = _random_degree(self.rng, spec)
                e = _random_degree(self.rng, spec)
                self.assertEqual(gradedlie.sign(spec, d + e), gradedlie.sign(spec, d) * gradedlie.sign(spec, e))

    def test_convert_multiplicative(self):
        """Test that the basis change commutes with products."""
        for _ in range(10):
            s = _random_series(self.rng, MIXED, 6)
            t = _random_series(self.rng, MIXED, 6)
            self.assertEqual(gradedlie.basis_convert(s * t),
                             gradedlie.basis_convert(s) * gradedlie.basis_convert(t))


class TestDivisorPairs(unittest.TestCase):
    """Evaluate divisor_pairs."""

    def test_integer_divisors(self):
        """Test k ∈ {1, 2, 3, 6} for gamma = 6."""
        spec = gradedlie.GradingSpec.trivial(1)
        ks = [k for k, _ in gradedlie.divisor_pairs(spec, spec.degree((6,)))]
        self.assertEqual(ks, [1, 2, 3, 6])

    def test_gcd_divisors(self):
        """Test k ∈ {1, 2} for gamma = (2, 4)."""
        spec = gradedlie.GradingSpec.trivial(2)
        pairs = gradedlie.divisor_pairs(spec, spec.degree((2, 4)))
        self.assertEqual([k for k, _ in pairs], [1, 2])
        self.assertEqual(pairs[1][1].gamma, (1, 2))

    def test_no_half_of_odd(self):
        """Test that 2b = 1 has no solution in ℤ₂."""
        spec = gradedlie.GradingSpec.super_grading(1)
        pairs = gradedlie.divisor_pairs(spec, spec.degree((2,), (1,)))
        self.assertEqual([k for k, _ in pairs], [1])

    def test_brute_force(self):
        """Test every k·(τ, b) with weight <= 6 against an exhaustive search."""
        for spec in (MIXED, gradedlie.GradingSpec(1, (4,), (-1,)), gradedlie.GradingSpec(1, (6,), (1,))):
            groups = [range(m) for m in spec.group_moduli]
            points = [spec.degree(g, a)
                      for g in itertools.product(range(7), repeat=spec.gamma_rank) if 0 < sum(g) <= 6
                      for a in itertools.product(*groups)]
            expected = {}
            for k in range(1, 7):
                for q in points:
                    if k * q.weight <= 6:
                        expected.setdefault(q.scale(k), set()).add((k, q))
            for d in points:
                self.assertEqual(set(gradedlie.divisor_pairs(spec, d)), expected[d])

    def test_two_halves_of_even(self):
        """Test that 2b = 0 has two solutions in ℤ₂."""
        spec = gradedlie.GradingSpec.super_grading(1)
        pairs = gradedlie.divisor_pairs(spec, spec.degree((2,), (0,)))
        self.assertEqual(sorted(d.acomp for k, d in pairs if k == 2), [(0,), (1,)])


class TestCompareSeries(unittest.TestCase):
    """Evaluate compare_series."""

    def test_equal(self):
        """Test that equal series compare true."""
        self.assertTrue(gradedlie.compare_series(_line(4, {0: 1, 2: 3}), _line(4, {0: 1, 2: 3})))

    def test_lowest_discrepancy(self):
        """Test that the minimal-weight difference is reported."""
        result = gradedlie.compare_series(_line(4, {0: 1, 2: 3, 3: 1}), _line(4, {0: 1, 2: 4}))
        self.assertFalse(result)
        self.assertEqual(result.discrepancy.gamma, (2,))
        self.assertEqual(result.expected, 3)
        self.assertEqual(result.found, 4)


if __name__ == '__main__':
    unittest.main()
