#!/usr/bin/env python3

import unittest
import sys
import os
from fractions import Fraction
from itertools import permutations
from unittest.mock import patch

from hypothesis import given, settings, strategies as st

# Add the app directory to the path so we can import modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'app'))

from families import catalog
from hermitian import (
    KAHLER, AdaptedJ, apply_j, class_witnesses, classify, d_omega, is_almost_kahler_direct,
    is_integrable_direct, kahler_form, nijenhuis, satisfies_class,
)
from liealg import W, X, Y, Z, BracketTable, StructureConstants, Vector4, bracket, to_bracket_table
from scalars import PARAMETER_NAMES, add, neg, parse_scalar, scalars_equal, sub, variable
from utils.parameter_sampler import ParameterSampler

GENERIC = StructureConstants.from_mapping({name: variable(name) for name in PARAMETER_NAMES})
E = [Vector4.basis(index) for index in range(4)]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)
vectors = st.builds(Vector4, rationals, rationals, rationals, rationals)


def _d_omega_brute_force(table, i, j, k):
    """-w([e_i,e_j],e_k) - w([e_j,e_k],e_i) - w([e_k,e_i],e_j) in the given order."""
    value = add(kahler_form(bracket(table, E[i], E[j]), E[k]),
                add(kahler_form(bracket(table, E[j], E[k]), E[i]),
                    kahler_form(bracket(table, E[k], E[i]), E[j])))
    return neg(value)


def _force_almost_kahler(sc):
    values = sc.as_mapping()
    values["theta1"] = 2 * values["a"]
    values["theta2"] = -2 * values["alpha"]
    return StructureConstants.from_mapping(values)


def _force_integrable(sc):
    values = sc.as_mapping()
    values["z4"] = 2 * values["z1"] - values["w2"]
    values["z3"] = -2 * values["z2"] - values["w1"]
    return StructureConstants.from_mapping(values)


class TestAdaptedJ(unittest.TestCase):

    def test_basis_images(self):
        self.assertEqual(apply_j(E[X]), E[Y])
        self.assertEqual(apply_j(E[Z]), E[W])
        self.assertEqual(apply_j(E[W]), -E[Z])

    def test_matrix_columns_match_apply(self):
        for index in range(4):
            column = tuple(AdaptedJ.MATRIX[row][index] for row in range(4))
            self.assertEqual(apply_j(E[index]).components, column)

    def test_apply_follows_matrix(self):
        identity = tuple(tuple(int(row == col) for col in range(4)) for row in range(4))
        v = Vector4(Fraction(1), Fraction(-2), Fraction(3, 4), Fraction(5))
        with patch.object(AdaptedJ, "MATRIX", identity):
            self.assertEqual(apply_j(v), v)
        self.assertEqual(apply_j(v), Vector4(Fraction(2), Fraction(1), Fraction(-5), Fraction(3, 4)))

    @given(vectors, vectors)
    @settings(max_examples=100, deadline=None)
    def test_complex_structure_is_orthogonal(self, u, v):
        self.assertEqual(apply_j(apply_j(u)), -u)
        self.assertEqual(apply_j(u).dot(apply_j(v)), u.dot(v))
        self.assertEqual(kahler_form(u, v), -kahler_form(v, u))

    def test_kahler_form_values(self):
        self.assertEqual(kahler_form(E[X], E[Y]), 1)
        self.assertEqual(kahler_form(E[Z], E[W]), 1)
        self.assertEqual(kahler_form(E[X], E[Z]), 0)


class TestExteriorDerivative(unittest.TestCase):

    def test_xyz_on_generic_constants(self):
        value = d_omega(to_bracket_table(GENERIC), ("X", "Y", "Z"))
        self.assertTrue(scalars_equal(value, parse_scalar("-theta2-2*alpha")))

    def test_abelian_table(self):
        table = BracketTable.abelian()
        for triple in ((X, Y, Z), (X, Y, W), (X, Z, W), (Y, Z, W)):
            self.assertEqual(d_omega(table, triple), 0)

    def test_zwx_matches_brute_force(self):
        table = to_bracket_table(StructureConstants.from_mapping({"lambda": Fraction(1), "w1": Fraction(2)}))
        self.assertEqual(d_omega(table, ("Z", "W", "X")), _d_omega_brute_force(table, Z, W, X))

    def test_every_triple_matches_brute_force_symbolically(self):
        table = to_bracket_table(GENERIC)
        for triple in permutations(range(4), 3):
            with self.subTest(triple=triple):
                self.assertTrue(scalars_equal(d_omega(table, triple), _d_omega_brute_force(table, *triple)))

    def test_alternating(self):
        table = to_bracket_table(ParameterSampler(seed=4).structure_constants())
        base = d_omega(table, (X, Z, W))
        self.assertEqual(d_omega(table, (Z, X, W)), -base)
        self.assertEqual(d_omega(table, (Z, W, X)), base)
        self.assertEqual(d_omega(table, (X, X, W)), 0)


class TestNijenhuis(unittest.TestCase):

    def test_vanishing_pairs_on_generic_constants(self):
        table = to_bracket_table(GENERIC)
        self.assertTrue(nijenhuis(table, E[X], E[Y]).is_zero())
        self.assertTrue(nijenhuis(table, E[Z], E[W]).is_zero())

    def test_x_z_on_generic_constants(self):
        value = nijenhuis(to_bracket_table(GENERIC), E[X], E[Z])
        self.assertTrue(scalars_equal(value.x, 0) and scalars_equal(value.y, 0))
        self.assertTrue(scalars_equal(value.z, neg(parse_scalar("2*z1-z4-w2"))))
        self.assertTrue(scalars_equal(value.w, neg(parse_scalar("2*z2+z3+w1"))))

    def test_abelian_table(self):
        table = BracketTable.abelian()
        for u in E:
            for v in E:
                self.assertTrue(nijenhuis(table, u, v).is_zero())

    @given(vectors, vectors)
    @settings(max_examples=50, deadline=None)
    def test_antisymmetric(self, u, v):
        table = to_bracket_table(GENERIC)
        self.assertTrue((nijenhuis(table, u, v) + nijenhuis(table, v, u)).is_zero())


class TestClassify(unittest.TestCase):

    def test_family_two_with_alpha_zero(self):
        sc = catalog().family(2).build({"lambda": 1, "alpha": 0, "beta": 3, "w1": 1, "w2": 2})
        self.assertTrue(classify(sc).almost_kahler)

    def test_family_ten_points(self):
        sampler = ParameterSampler(seed=10)
        for _ in range(20):
            result = classify(sampler.family_sample(catalog().family(10))[1])
            self.assertTrue(result.integrable)
            self.assertFalse(result.almost_kahler)

    def test_zero_constants_are_kahler(self):
        result = classify(StructureConstants.zero())
        self.assertTrue(result.almost_kahler and result.integrable and result.kahler)

    def test_theta_two_condition(self):
        sc = StructureConstants.from_json({"theta2": "-2", "alpha": "1"})
        self.assertTrue(classify(sc).almost_kahler)

    def test_to_json_carries_witnesses(self):
        payload = classify(StructureConstants.from_json({"theta1": "3"})).to_json()
        self.assertFalse(payload["almost_kahler"])
        self.assertEqual(payload["witnesses"]["theta1-2*a"], "3")
        self.assertIn("totally_geodesic", payload)

    def test_closed_form_matches_direct_computation(self):
        sampler = ParameterSampler(seed=51, zero_bias=0.3)
        for index in range(1000):
            sc = sampler.structure_constants()
            if index % 4 in (1, 3):
                sc = _force_almost_kahler(sc)
            if index % 4 in (2, 3):
                sc = _force_integrable(sc)
            table = to_bracket_table(sc)
            result = classify(sc)
            self.assertEqual(result.almost_kahler, is_almost_kahler_direct(table), sc.to_json())
            self.assertEqual(result.integrable, is_integrable_direct(table), sc.to_json())
            self.assertEqual(result.kahler, result.almost_kahler and result.integrable)
            self.assertEqual(satisfies_class(sc, KAHLER), result.kahler)
            if index % 4 == 3:
                self.assertTrue(result.kahler)

    def test_witness_values(self):
        witnesses = class_witnesses(GENERIC)
        self.assertTrue(scalars_equal(witnesses["theta1-2*a"], sub(GENERIC.theta1, 2 * GENERIC.a)))
        self.assertEqual(len(witnesses), 4)


if __name__ == '__main__':
    unittest.main()
