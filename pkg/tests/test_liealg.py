#!/usr/bin/env python3

import unittest
import sys
import os
from fractions import Fraction

from hypothesis import given, settings, strategies as st

# Add the app directory to the path so we can import modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'app'))

from families import catalog
from liealg import (
    W, X, Y, Z, BracketTable, StructureConstants, UnknownParameter, Vector4, bracket,
    failing_residuals, is_lie_algebra, jacobi_residuals_appendix, jacobi_residuals_generic,
    to_bracket_table,
)
from scalars import is_zero, mul
from utils.parameter_sampler import ParameterSampler

G1_POINT = StructureConstants.from_mapping({"lambda": 1, "r": 2, "w1": 3, "w2": 4, "theta2": 6})

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)
vectors = st.builds(Vector4, rationals, rationals, rationals, rationals)


def _random_tables(seed, count):
    """Half arbitrary points (many zeros), half family points."""
    sampler = ParameterSampler(seed=seed, zero_bias=0.6)
    families = catalog().families
    for index in range(count):
        if index % 2:
            yield sampler.structure_constants()
        else:
            yield sampler.family_sample(families[(index // 2) % len(families)])[1]


class TestStructureConstants(unittest.TestCase):

    def test_from_json_defaults_to_zero(self):
        sc = StructureConstants.from_json({"lambda": "1", "theta2": "-2/3"})
        self.assertEqual(sc.lam, 1)
        self.assertEqual(sc.theta2, Fraction(-2, 3))
        self.assertEqual(sc.z1, 0)

    def test_unknown_key_rejected(self):
        with self.assertRaises(UnknownParameter):
            StructureConstants.from_json({"mu": "1"})
        with self.assertRaises(UnknownParameter):
            StructureConstants.from_json({"alpha": 1.5})

    def test_to_json_renders_every_coefficient(self):
        payload = G1_POINT.to_json()
        self.assertEqual(len(payload), 14)
        self.assertEqual(payload["lambda"], "1")
        self.assertEqual(payload["theta2"], "6")


class TestBracketTable(unittest.TestCase):

    def test_family_one_point(self):
        table = to_bracket_table(G1_POINT)
        self.assertEqual(table.structure(Y, X), (2, 0, 0, 6))
        self.assertEqual(bracket(table, Vector4.basis(W), Vector4.basis(Z)), Vector4(0, 0, 0, 1))

    def test_zero_constants_give_abelian_table(self):
        self.assertEqual(to_bracket_table(StructureConstants.zero()), BracketTable.abelian())

    def test_w_coefficient_of_z_x(self):
        sc = StructureConstants.from_json({"w1": "w1", "alpha": "alpha"})
        self.assertEqual(to_bracket_table(sc).structure(Z, X)[W], sc.w1)

    def test_table_is_antisymmetric(self):
        table = to_bracket_table(ParameterSampler(seed=3).structure_constants())
        self.assertTrue(table.is_antisymmetric())

    def test_from_brackets_rejects_diagonal(self):
        with self.assertRaises(ValueError):
            BracketTable.from_brackets(2, {(0, 0): (1, 0)})

    @given(vectors, vectors, vectors)
    @settings(max_examples=100, deadline=None)
    def test_bracket_bilinear_and_antisymmetric(self, u, v, w):
        table = to_bracket_table(G1_POINT)
        self.assertEqual(bracket(table, u, v), -bracket(table, v, u))
        self.assertTrue(bracket(table, u, u).is_zero())
        self.assertEqual(bracket(table, u + v, w), bracket(table, u, w) + bracket(table, v, w))
        self.assertEqual(bracket(table, u.scale(3), w), bracket(table, u, w).scale(3))


class TestJacobi(unittest.TestCase):

    def test_abelian(self):
        self.assertTrue(all(r.is_zero() for r in jacobi_residuals_generic(BracketTable.abelian())))
        self.assertTrue(all(is_zero(r) for r in jacobi_residuals_appendix(StructureConstants.zero())))
        self.assertTrue(is_lie_algebra(StructureConstants.zero()))

    def test_nilpotent_point(self):
        table = to_bracket_table(StructureConstants.from_mapping({"z3": 1}))
        self.assertTrue(all(r.is_zero() for r in jacobi_residuals_generic(table)))

    def test_lambda_a_point_fails(self):
        sc = StructureConstants.from_mapping({"lambda": 1, "a": 1})
        residuals = jacobi_residuals_appendix(sc)
        self.assertEqual(residuals[0], 1)
        self.assertEqual(residuals[1], 0)
        self.assertFalse(is_lie_algebra(sc))
        self.assertIn(1, failing_residuals(sc))
        self.assertFalse(all(r.is_zero() for r in jacobi_residuals_generic(to_bracket_table(sc))))

    def test_family_one_point_is_lie(self):
        self.assertEqual(failing_residuals(G1_POINT), [])
        self.assertTrue(all(r.is_zero() for r in jacobi_residuals_generic(to_bracket_table(G1_POINT))))

    def test_family_eight_points_are_lie(self):
        sampler = ParameterSampler(seed=8)
        family = catalog().family(8)
        for _ in range(50):
            self.assertTrue(is_lie_algebra(sampler.family_sample(family)[1]))

    def test_residual_count(self):
        self.assertEqual(len(jacobi_residuals_appendix(G1_POINT)), 14)
        self.assertEqual(len(jacobi_residuals_generic(to_bracket_table(G1_POINT))), 4)

    def test_system_matches_trilinear_oracle(self):
        agreements = 0
        lie_points = 0
        for sc in _random_tables(seed=11, count=1200):
            system = is_lie_algebra(sc)
            oracle = all(r.is_zero() for r in jacobi_residuals_generic(to_bracket_table(sc)))
            self.assertEqual(system, oracle, sc.to_json())
            agreements += 1
            lie_points += int(system)
        self.assertEqual(agreements, 1200)
        self.assertGreaterEqual(lie_points, 600)

    def test_residuals_are_homogeneous_of_degree_two(self):
        sampler = ParameterSampler(seed=5)
        for _ in range(50):
            sc = sampler.structure_constants()
            base = jacobi_residuals_appendix(sc)
            for t in (2, 3):
                scaled = jacobi_residuals_appendix(sc.scaled(Fraction(t)))
                self.assertEqual(scaled, [mul(t * t, value) for value in base])


if __name__ == '__main__':
    unittest.main()
