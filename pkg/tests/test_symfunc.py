"""Test partitions and symmetric polynomials found in symfunc.py."""

import unittest
from fractions import Fraction
import gradedlie

P = gradedlie.Partition.of


class TestPartition(unittest.TestCase):
    """Evaluate Partition."""

    def test_not_decreasing(self):
        """Test that increasing parts are refused."""
        with self.assertRaises(gradedlie.GradingError):
            gradedlie.Partition((1, 2))

    def test_trailing_zeros(self):
        """Test that trailing zeros are stripped."""
        self.assertEqual(gradedlie.Partition((2, 1, 0)), P(2, 1))

    def test_conjugate(self):
        """Test (3,1)′ = (2,1,1)."""
        self.assertEqual(P(3, 1).conjugate(), P(2, 1, 1))
        self.assertEqual(P(3, 1).conjugate().conjugate(), P(3, 1))

    def test_orders(self):
        """Test dominance and containment."""
        self.assertTrue(P(3, 1).dominates(P(2, 2)))
        self.assertFalse(P(2, 2).dominates(P(3, 1)))
        self.assertTrue(P(3, 2).contains(P(2, 2)))
        self.assertFalse(P(3, 1).contains(P(2, 2)))

    def test_hook(self):
        """Test hook membership and the split into λ₀ and λ₁."""
        self.assertTrue(P(3, 2, 1).is_hook(1, 2))
        self.assertFalse(P(2, 2).is_hook(1, 1))
        self.assertEqual(P(3, 2, 1).split(1), (P(3), P(2, 1)))

    def test_partitions_of(self):
        """Test the counts p(4) = 5 and |H(1,1;4)| = 4."""
        self.assertEqual(len(gradedlie.partitions_of(4)), 5)
        self.assertEqual(len(gradedlie.hook_partitions(1, 1, 4)), 4)

    def test_subpartitions(self):
        """Test the partitions inside (2,1)."""
        found = set(gradedlie.subpartitions(P(2, 1)))
        self.assertEqual(found, {P(), P(1), P(2), P(1, 1), P(2, 1)})

    def test_centralizer(self):
        """Test z_(2,1,1) = 2·2! = 4."""
        self.assertEqual(gradedlie.centralizer_size(P(2, 1, 1)), 4)


class TestMurnaghanNakayama(unittest.TestCase):
    """Evaluate mn_character."""

    def test_values(self):
        """Test a few known character values."""
        for rho in gradedlie.partitions_of(4):
            self.assertEqual(gradedlie.mn_character(P(4), rho), 1)
        self.assertEqual(gradedlie.mn_character(P(1, 1), P(2)), -1)
        self.assertEqual(gradedlie.mn_character(P(2, 1), P(1, 1, 1)), 2)

    def test_orthogonality(self):
        """Test row orthogonality of the character tables for n <= 5."""
        for n in range(1, 6):
            parts = gradedlie.partitions_of(n)
            for lam in parts:
                for mu in parts:
                    total = sum(Fraction(gradedlie.mn_character(lam, rho) * gradedlie.mn_character(mu, rho),
                                         gradedlie.centralizer_size(rho)) for rho in parts)
                    self.assertEqual(total, 1 if lam == mu else 0)


class TestSchur(unittest.TestCase):
    """Evaluate Schur, skew Schur and hook Schur polynomials."""

    def test_elementary(self):
        """Test S_(1,1)(x₁,x₂) = x₁x₂ and S_(1) = x₁ + x₂."""
        self.assertEqual(gradedlie.schur_poly(P(1, 1), 2), gradedlie.elementary_e(2, 2))
        self.assertEqual(gradedlie.schur_poly(P(1), 2), gradedlie.power_sum(1, 2))

    def test_power_sums(self):
        """Test p_ρ = Σ χ_λ^ρ S_λ in four variables for n <= 4."""
        for n in range(1, 5):
            for rho in gradedlie.partitions_of(n):
                total = gradedlie.MultivarPolynomial(4)
                for lam in gradedlie.partitions_of(n):
                    total = total + gradedlie.schur_poly(lam, 4) * gradedlie.mn_character(lam, rho)
                self.assertEqual(total, gradedlie.power_sum_product(rho, 4))

    def test_newton(self):
        """Test exp(Σ p_r tʳ/r) = Σ h_n tⁿ = (Σ (-1)ⁿ e_n tⁿ)⁻¹."""
        first, second, third = gradedlie.newton_generating_functions(3, 4)
        self.assertEqual(first, second)
        self.assertEqual(second, third)

    def test_schur_expand(self):
        """Test h₃ = S_(3) and h₁² = S_(2) + S_(1,1)."""
        self.assertEqual(gradedlie.schur_expand(gradedlie.complete_h(3, 3)), {P(3): 1})
        h1 = gradedlie.complete_h(1, 3)
        self.assertEqual(gradedlie.schur_expand(h1 * h1), {P(2): 1, P(1, 1): 1})

    def test_skew_single_variable(self):
        """Test S_(2,1)/(1)(y₁) = y₁²."""
        skew = gradedlie.skew_schur(P(2, 1), P(1), 1)
        self.assertEqual(skew.terms, {(2,): 1})

    def test_skew_single_box(self):
        """Test S_(2)/(1)(y₁, y₂) = y₁ + y₂ and S_λ/λ = 1."""
        self.assertEqual(gradedlie.skew_schur(P(2), P(1), 2), gradedlie.power_sum(1, 2))
        self.assertEqual(gradedlie.skew_schur(P(2, 1), P(2, 1), 2), gradedlie.MultivarPolynomial.constant(1, 2))

    def test_skew_against_tableaux(self):
        """Test the LR expansion of skew Schur polynomials against tableau enumeration."""
        for lam in gradedlie.partitions_of(5):
            for mu in gradedlie.subpartitions(lam):
                self.assertEqual(gradedlie.skew_schur(lam, mu, 3), gradedlie.skew_schur_tableaux(lam, mu, 3))

    def test_hook_schur(self):
        """Test HS_(1) and HS_(1,1) for k = l = 1."""
        self.assertEqual(gradedlie.hook_schur(P(1), 1, 1).terms, {(1, 0): 1, (0, 1): 1})
        self.assertEqual(gradedlie.hook_schur(P(1, 1), 1, 1).terms, {(1, 1): 1, (0, 2): 1})

    def test_hook_schur_outside(self):
        """Test that (2,2) is not a (1,1)-hook and gives zero."""
        self.assertTrue(gradedlie.hook_schur(P(2, 2), 1, 1).is_zero())

    def test_hook_dimensions(self):
        """Test dim V_(1) = 3 for gl(2,1) and dim V_(2) = 2 for gl(1,1)."""
        self.assertEqual(gradedlie.hook_tableaux_count(P(1), 2, 1), 3)
        self.assertEqual(gradedlie.hook_tableaux_count(P(2), 1, 1), 2)

    def test_symmetric(self):
        """Test that hook Schur polynomials are symmetric in each block."""
        poly = gradedlie.hook_schur(P(2, 1), 2, 2)
        self.assertTrue(poly.is_symmetric('x'))
        self.assertTrue(poly.is_symmetric('y'))


class TestLittlewoodRichardson(unittest.TestCase):
    """Evaluate lr_coefficient."""

    def test_values(self):
        """Test a few coefficients."""
        self.assertEqual(gradedlie.lr_coefficient(P(2, 1), P(1), P(1, 1)), 1)
        self.assertEqual(gradedlie.lr_coefficient(P(2, 2), P(1), P(1)), 0)
        self.assertEqual(gradedlie.lr_coefficient(P(3, 2, 1), P(2, 1), P(2, 1)), 2)

    def test_pieri(self):
        """Test N^λ_μ,(1) = 1 exactly when λ/μ is one box."""
        for lam in gradedlie.partitions_of(4):
            for mu in gradedlie.partitions_of(3):
                expected = 1 if lam.contains(mu) else 0
                self.assertEqual(gradedlie.lr_coefficient(lam, mu, P(1)), expected)

    def test_against_products(self):
        """Test S_μ·S_ν = Σ N^λ_μν S_λ for |λ| <= 5 in five variables."""
        for total in range(2, 6):
            for a in range(1, total):
                for mu in gradedlie.partitions_of(a):
                    for nu in gradedlie.partitions_of(total - a):
                        product = gradedlie.schur_poly(mu, 5) * gradedlie.schur_poly(nu, 5)
                        expected = {lam: gradedlie.lr_coefficient(lam, mu, nu)
                                    for lam in gradedlie.partitions_of(total)}
                        expected = {lam: c for lam, c in expected.items() if c}
                        self.assertEqual(gradedlie.schur_expand(product), expected)


if __name__ == '__main__':
    unittest.main()
