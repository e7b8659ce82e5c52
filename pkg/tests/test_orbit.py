"""Test diagram automorphisms, folding and twining characters found in orbit.py."""

import unittest
from unittest import mock
import gradedlie

gkm = gradedlie.gkm
orbit = gradedlie.orbit

A2 = gkm.BorcherdsCartanData((1, 2), ((2, -1), (-1, 2)))
A3 = gkm.BorcherdsCartanData((1, 2, 3), ((2, -1, 0), (-1, 2, -1), (0, -1, 2)))
FLIP2 = orbit.DiagramAutomorphism.from_cycles(A2, '(1 2)')
FLIP3 = orbit.DiagramAutomorphism.from_cycles(A3, '(1 3)')


class TestAutomorphism(unittest.TestCase):
    """Evaluate DiagramAutomorphism and validate_automorphism."""

    def test_cycles(self):
        """Test parsing of cycle notation."""
        self.assertEqual(FLIP3.images, (2, 1, 0))
        self.assertEqual(orbit.DiagramAutomorphism.from_cycles(A3, '1 3').images, (2, 1, 0))
        self.assertEqual(str(FLIP3), '(1 3)')
        self.assertTrue(orbit.DiagramAutomorphism.from_cycles(A3, '()').is_identity())

    def test_bad_cycles(self):
        """Test unknown and repeated labels."""
        with self.assertRaises(gradedlie.GradingError):
            orbit.DiagramAutomorphism.from_cycles(A3, '(1 4)')
        with self.assertRaises(gradedlie.GradingError):
            orbit.DiagramAutomorphism.from_cycles(A3, '(1 3)(3 2)')

    def test_orbits(self):
        """Test orbits, order and powers of the A₃ flip."""
        self.assertEqual(FLIP3.orbits(), ((0, 2), (1,)))
        self.assertEqual(FLIP3.order, 2)
        self.assertTrue(FLIP3.power(2).is_identity())

    def test_valid(self):
        """Test that the flips and the identity are diagram automorphisms."""
        self.assertEqual(orbit.validate_automorphism(FLIP3), [])
        self.assertEqual(orbit.validate_automorphism(orbit.DiagramAutomorphism.identity(A3)), [])

    def test_invalid(self):
        """Test that swapping an end node with the middle node is refused."""
        bad = orbit.DiagramAutomorphism.from_cycles(A3, '(1 2)')
        self.assertTrue(orbit.validate_automorphism(bad))
        with self.assertRaises(gradedlie.GradingError):
            orbit.fold(bad)

    def test_parity_preserved(self):
        """Test that σ must preserve the parity."""
        data = gkm.BorcherdsCartanData((1, 2), ((-2, -1), (-1, -2)), parity=(1, -1))
        swap = orbit.DiagramAutomorphism.from_cycles(data, '(1 2)')
        self.assertTrue(orbit.validate_automorphism(swap))


class TestFold(unittest.TestCase):
    """Evaluate fold and phi_map."""

    def test_a3(self):
        """Test that the A₃ flip folds to C₂."""
        folded = orbit.fold(FLIP3)
        self.assertEqual(folded.epsilon, (1, 1))
        self.assertEqual(folded.matrix, ((2, -1), (-2, 2)))
        self.assertEqual(folded.linked, (0, 1))
        self.assertEqual(gkm.validate(folded.data), [])

    def test_a2(self):
        """Test that the A₂ flip folds to A₁ with ε = 2."""
        folded = orbit.fold(FLIP2)
        self.assertEqual(folded.epsilon, (2,))
        self.assertEqual(folded.matrix, ((2,),))
        self.assertEqual(folded.scale(0), 4)

    def test_identity(self):
        """Test that the identity folds to the data itself."""
        folded = orbit.fold(orbit.DiagramAutomorphism.identity(A3))
        self.assertEqual(folded.matrix, A3.matrix)
        self.assertEqual(folded.epsilon, (1, 1, 1))

    def test_lifted_roots(self):
        """Test the C₂ positive roots in e-coordinates."""
        folded = orbit.fold(FLIP3)
        roots = orbit.orbit_algebra_multiplicities(folded, 6)
        self.assertEqual(sorted(folded.lift(g) for g in roots), [(0, 1), (2, 0), (2, 1), (2, 2)])

    def test_free_multiplicities(self):
        """Test the free route against per-degree values with one generator table."""
        data = gkm.BorcherdsCartanData(('a', 'b'), ((-2, -1), (-1, -2)))
        folded = orbit.fold(orbit.DiagramAutomorphism.identity(data))
        with mock.patch.object(orbit, 'free_generator_table', wraps=gkm.free_generator_table) as built:
            roots = orbit.orbit_algebra_multiplicities(folded, 5)
        self.assertEqual(built.call_count, 1)
        self.assertEqual(roots[(1, 0)], 1)
        for gamma, value in roots.items():
            self.assertEqual(value, gkm.gkm_supertrace_free_case(data, (), data.degree(gamma)))

    def test_phi(self):
        """Test that φ adds coefficients over each orbit."""
        folded = orbit.fold(FLIP3)
        self.assertEqual(orbit.phi_map(folded, (1, 2, 1)), (2, 2))
        with self.assertRaises(gradedlie.GradingError):
            orbit.phi_map(folded, (1, 2))

    def test_phi_power(self):
        """Test φ² on the orbits of σ² = 1."""
        self.assertEqual(orbit.phi_power_map(FLIP3, 2, (1, 1, 1)), (2, 1))
        self.assertEqual(orbit.phi_power_map(FLIP3, 1, (3, 1)), (3, 1))

    def test_form(self):
        """Test (λ|μ) = (φλ|φμ) on 100 random σ-invariant pairs."""
        for automorphism in (FLIP2, FLIP3):
            folded = orbit.fold(automorphism)
            pairs = orbit.random_symmetric_pairs(automorphism, 100)
            self.assertTrue(orbit.symmetric_form_check(folded, pairs))

    def test_form_needs_invariant(self):
        """Test that a pair not fixed by σ is refused."""
        folded = orbit.fold(FLIP3)
        with self.assertRaises(gradedlie.GradingError):
            orbit.symmetric_form_check(folded, [((1, 0, 0), (1, 0, 1))])


class TestTwiningDenominator(unittest.TestCase):
    """Evaluate orbit_denominator and twining_denominator_check."""

    def test_a2_orbit_denominator(self):
        """Test R_σ = 1 - E⁴ for the A₂ flip."""
        folded = orbit.fold(FLIP2)
        series = orbit.orbit_denominator(folded, 6)
        self.assertEqual(series.coefficient(folded.degree((4,))), -1)
        self.assertEqual(series.coefficient(folded.degree((2,))), 0)

    def test_check(self):
        """Test the twining denominator against the orbit algebra to bound 6."""
        for automorphism in (FLIP2, FLIP3, orbit.DiagramAutomorphism.identity(A2)):
            self.assertTrue(orbit.twining_denominator_check(automorphism, 6))

    def test_perturbed_traces(self):
        """Test that a wrong trace is caught."""
        model = orbit.FiniteRootModel.type_a(FLIP3)
        table = model.trace_table(6)
        d = model.folded.degree((1, 1))
        values = dict(table.values)
        values[(1, d)] = values[(1, d)] + 2
        bad = gradedlie.PowerTraceTable(table.spec, values, period=table.period)
        self.assertFalse(orbit.twining_denominator_check(FLIP3, 6, traces=bad))

    def test_verma(self):
        """Test that the twining Verma character inverts the denominator."""
        model = orbit.FiniteRootModel.type_a(FLIP2)
        verma = orbit.twining_verma_character(model, 6)
        folded = model.folded
        for n in range(7):
            self.assertEqual(verma.coefficient(folded.degree((n,))), 1 if n % 4 == 0 else 0)


class TestFiniteRootModel(unittest.TestCase):
    """Evaluate the sl(n+1) matrix model."""

    def test_fixed_dimension(self):
        """Test dim sl₄^σ = 10 and dim sl₃^σ = 3."""
        self.assertEqual(orbit.FiniteRootModel.type_a(FLIP3).fixed_dimension(), 10)
        self.assertEqual(orbit.FiniteRootModel.type_a(FLIP2).fixed_dimension(), 3)

    def test_cartan(self):
        """Test dim 𝔥^σ for the A₃ flip."""
        self.assertEqual(orbit.FiniteRootModel.type_a(FLIP3).fixed_cartan_dimension(), 2)

    def test_not_type_a(self):
        """Test that other data is refused."""
        data = gkm.BorcherdsCartanData((1, 2), ((2, -1), (-2, 2)))
        with self.assertRaises(gradedlie.GradingError):
            orbit.FiniteRootModel.type_a(orbit.DiagramAutomorphism.identity(data))

    def test_adjoint_dimension(self):
        """Test that the A₃ adjoint twining character has five weights."""
        character = orbit.FiniteRootModel.type_a(FLIP3).adjoint_twining_character()
        self.assertEqual(sum(character.values()), 5)

    def test_adjoint_check(self):
        """Test the adjoint twining character against the orbit algebra module."""
        for automorphism in (FLIP2, FLIP3, orbit.DiagramAutomorphism.identity(A2)):
            self.assertTrue(orbit.finite_adjoint_twining_check(orbit.FiniteRootModel.type_a(automorphism)))

    def test_adjoint_altered(self):
        """Test that a changed weight multiplicity is caught."""
        model = orbit.FiniteRootModel.type_a(FLIP3)
        character = dict(model.adjoint_twining_character())
        character[(0, 0)] = character.get((0, 0), 0) + 1
        result = orbit.finite_adjoint_twining_check(model, character)
        self.assertFalse(result)
        self.assertEqual(result.discrepancy, (0, 0))


class TestSigmaTraces(unittest.TestCase):
    """Evaluate sigma_power_trace and fixed_point_sdim."""

    def test_values(self):
        """Test tr(σᵏ) on the A₃ pieces [1,1] and [2,1]."""
        self.assertEqual(orbit.sigma_power_trace(FLIP3, 1, (1, 1)), 0)
        self.assertEqual(orbit.sigma_power_trace(FLIP3, 2, (1, 1)), 2)
        self.assertEqual(orbit.sigma_power_trace(FLIP3, 1, (2, 1)), 1)

    def test_against_model(self):
        """Test the Möbius traces against the matrix model on every piece."""
        for automorphism in (FLIP2, FLIP3):
            model = orbit.FiniteRootModel.type_a(automorphism)
            for beta in {orbit.phi_map(model.folded, root) for root in model.roots}:
                for k in (1, 2):
                    self.assertEqual(orbit.sigma_power_trace(automorphism, k, beta), model.direct_trace(k, beta))

    def test_empty_piece(self):
        """Test that a piece with no roots has trace zero."""
        self.assertEqual(orbit.sigma_power_trace(FLIP3, 1, (4, 0)), 0)

    def test_bad_beta(self):
        """Test that β must lie in Q̂⁺."""
        with self.assertRaises(gradedlie.GradingError):
            orbit.sigma_power_trace(FLIP3, 1, (0, 0))

    def test_fixed_point(self):
        """Test the fixed-point dimensions against the model."""
        model = orbit.FiniteRootModel.type_a(FLIP3)
        for beta in ((1, 0), (0, 1), (1, 1), (2, 1)):
            self.assertEqual(orbit.fixed_point_sdim(FLIP3, beta), model.direct_fixed_dimension(beta))
        self.assertEqual(orbit.fixed_point_sdim(FLIP3, (1, 1)), 1)


if __name__ == '__main__':
    unittest.main()
