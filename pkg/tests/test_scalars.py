#!/usr/bin/env python3

import unittest
import sys
import os
from fractions import Fraction

from hypothesis import given, settings, strategies as st

# Add the app directory to the path so we can import modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'app'))

from scalars import (
    DivisionByZero, MissingBinding, ParseError, add, compose, free_names, is_zero, mul, neg,
    parse_scalar, promote, render, scalar_arith, scalar_div, scalars_equal, sub, substitute, variable,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
nonzero_fractions = fractions.filter(lambda value: value != 0)

# Rendered shapes the parser must read back unchanged.
RENDER_CORPUS = [
    "3/4", "-7", "0", "2*lambda^2/z2", "r*w1/lambda", "-z1^2/z3", "z1*(r-2*z2)/(2*z3)",
    "(alpha*b-a*beta)/(r^2+1)", "theta2+2*alpha", "2*z1-z4-w2", "-a^2*w1/alpha^2",
    "1/2*r", "(lambda-alpha)^2+beta^2",
]


class TestScalarArithmetic(unittest.TestCase):
    """
    Exact arithmetic over Q and the rational function field
    """

    def test_rational_addition(self):
        self.assertEqual(add(Fraction(1, 2), Fraction(1, 3)), Fraction(5, 6))
        self.assertEqual(scalar_arith("add", Fraction(1, 2), Fraction(1, 3)), Fraction(5, 6))

    def test_monomial_product(self):
        x = variable("z1")
        self.assertTrue(scalars_equal(mul(x, x), parse_scalar("z1^2")))

    def test_additive_inverse_is_zero(self):
        value = parse_scalar("z1^2/z3")
        self.assertTrue(is_zero(add(value, neg(value))))
        self.assertTrue(is_zero(scalar_arith("sub", value, value)))

    def test_unary_minus(self):
        self.assertEqual(scalar_arith("neg", Fraction(3, 4)), Fraction(-3, 4))

    def test_division(self):
        quotient = scalar_div(mul(2, parse_scalar("lambda^2")), parse_scalar("z2"))
        self.assertEqual(render(quotient), "2*lambda^2/z2")

        with self.assertRaises(DivisionByZero):
            scalar_div(Fraction(1), Fraction(0))

        x = variable("r")
        reduced = scalar_div(sub(mul(x, x), 1), sub(x, 1))
        self.assertTrue(scalars_equal(reduced, add(x, 1)))
        self.assertEqual(render(reduced), "r+1")

    def test_is_zero(self):
        self.assertTrue(is_zero(Fraction(0, 1)))
        x, y = variable("a"), variable("b")
        self.assertTrue(is_zero(sub(mul(x, y), mul(y, x))))
        self.assertFalse(is_zero(parse_scalar("z1^2/z3")))

    def test_mixed_operands_promote(self):
        value = add(Fraction(1, 2), variable("r"))
        self.assertEqual(free_names(value), {"r"})
        self.assertEqual(render(promote(Fraction(5, 3))), "5/3")

    @given(fractions, fractions, fractions)
    @settings(max_examples=200, deadline=None)
    def test_field_axioms_on_rationals(self, a, b, c):
        self.assertEqual(add(add(a, b), c), add(a, add(b, c)))
        self.assertEqual(mul(a, b), mul(b, a))
        self.assertEqual(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
        self.assertTrue(is_zero(add(a, neg(a))))

    @given(nonzero_fractions)
    @settings(max_examples=100, deadline=None)
    def test_multiplicative_inverse(self, a):
        self.assertEqual(mul(a, scalar_div(1, a)), 1)

    def test_field_axioms_on_rational_functions(self):
        p = parse_scalar("z1^2/z3")
        q = parse_scalar("(r+2*z2)/(2*z1)")
        s = parse_scalar("lambda-alpha")
        self.assertTrue(scalars_equal(mul(p, add(q, s)), add(mul(p, q), mul(p, s))))
        self.assertTrue(scalars_equal(add(add(p, q), s), add(p, add(q, s))))
        self.assertTrue(scalars_equal(mul(p, scalar_div(1, p)), Fraction(1)))


class TestSubstitution(unittest.TestCase):

    def test_direct_evaluation(self):
        self.assertEqual(substitute(parse_scalar("2*lambda^2/z2"), {"lambda": 1, "z2": 2}), 1)
        self.assertEqual(substitute(parse_scalar("r*w1/lambda"), {"r": 2, "w1": 3, "lambda": 1}), 6)

    def test_pole_raises(self):
        with self.assertRaises(DivisionByZero):
            substitute(parse_scalar("z1^2/z3"), {"z1": 2, "z3": 0})

    def test_denominator_checked_before_numerator_bindings(self):
        with self.assertRaises(DivisionByZero):
            substitute(parse_scalar("z1^2/z3"), {"z3": 0})

    def test_missing_binding(self):
        with self.assertRaises(MissingBinding) as ctx:
            substitute(parse_scalar("r*w1"), {"r": 1})
        self.assertEqual(ctx.exception.name, "w1")

    @given(fractions, fractions, nonzero_fractions)
    @settings(max_examples=100, deadline=None)
    def test_substitution_is_a_ring_homomorphism(self, z1, z2, z3):
        point = {"z1": z1, "z2": z2, "z3": z3}
        p = parse_scalar("z1^2/z3")
        q = parse_scalar("z2-(z1^2-z3^2)/(2*z3)")
        self.assertEqual(substitute(add(p, q), point), substitute(p, point) + substitute(q, point))
        self.assertEqual(substitute(mul(p, q), point), substitute(p, point) * substitute(q, point))

    @given(fractions, nonzero_fractions)
    @settings(max_examples=50, deadline=None)
    def test_identically_zero_evaluates_to_zero(self, r, lam):
        zero = sub(parse_scalar("r^2/lambda"), mul(variable("r"), parse_scalar("r/lambda")))
        self.assertTrue(is_zero(zero))
        self.assertEqual(substitute(zero, {"r": r, "lambda": lam}), 0)

    def test_compose_stays_in_field(self):
        value = compose(parse_scalar("w1+2*z2"), {"w1": parse_scalar("-2*z2")})
        self.assertTrue(is_zero(value))
        with self.assertRaises(DivisionByZero):
            compose(parse_scalar("1/alpha"), {"alpha": Fraction(0)})


class TestParser(unittest.TestCase):

    def test_rational_literal(self):
        value = parse_scalar("3/4")
        self.assertIsInstance(value, Fraction)
        self.assertEqual(value, Fraction(3, 4))

    def test_custom_parameter_names(self):
        value = parse_scalar("2*l^2/z2", names=("l", "z2"))
        self.assertEqual(render(value), "2*l^2/z2")
        self.assertEqual(free_names(value), {"l", "z2"})

    def test_double_slash_reports_offset(self):
        with self.assertRaises(ParseError) as ctx:
            parse_scalar("1//2")
        self.assertEqual(ctx.exception.position, 2)
        self.assertIn("offset 2", str(ctx.exception))

    def test_unknown_identifier(self):
        with self.assertRaises(ParseError) as ctx:
            parse_scalar("lambda+mu")
        self.assertEqual(ctx.exception.position, 7)

    def test_literal_zero_denominator(self):
        with self.assertRaises(DivisionByZero):
            parse_scalar("3/0")
        with self.assertRaises(DivisionByZero):
            parse_scalar("r/(a-a)")

    def test_unary_minus_binds_after_power(self):
        self.assertTrue(scalars_equal(parse_scalar("-a^2"), neg(parse_scalar("a^2"))))

    def test_trailing_garbage(self):
        with self.assertRaises(ParseError):
            parse_scalar("r)")

    def test_render_round_trip(self):
        for text in RENDER_CORPUS:
            with self.subTest(text=text):
                value = parse_scalar(text)
                self.assertTrue(scalars_equal(parse_scalar(render(value)), value))

    @given(fractions)
    @settings(max_examples=100, deadline=None)
    def test_rational_render_round_trip(self, value):
        self.assertEqual(parse_scalar(render(value)), value)


if __name__ == '__main__':
    unittest.main()
