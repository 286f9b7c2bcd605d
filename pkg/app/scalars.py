# scalars.py
"""
Exact scalars for structure-constant computations.

A scalar is either a ``fractions.Fraction`` (numeric checks) or an element of a
sympy ``FracField`` over QQ (symbolic family verification). Field elements are
kept reduced by sympy, so a rational function is zero exactly when its
numerator is the zero polynomial.
"""
import operator
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField
from sympy.polys.orderings import lex


# Order of the 14 structure coefficients; also the lex order of the symbolic field.
PARAMETER_NAMES: Tuple[str, ...] = (
    "lambda", "alpha", "beta", "a", "b", "r",
    "z1", "z2", "z3", "z4", "w1", "w2", "theta1", "theta2",
)

Scalar = Union[Fraction, FracElement]

ZERO = Fraction(0)
ONE = Fraction(1)


class ScalarError(ValueError):
    """Base class for scalar errors."""


class ParseError(ScalarError):
    """Raised when a scalar expression does not match the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.message = message
        self.position = position


class DivisionByZero(ScalarError, ZeroDivisionError):
    """Raised when dividing by a scalar that is identically zero."""


class MissingBinding(ScalarError, LookupError):
    """Raised when substitution meets an unbound indeterminate."""

    def __init__(self, name: str):
        super().__init__(f"no value bound for '{name}'")
        self.name = name


@lru_cache(maxsize=None)
def rational_function_field(names: Tuple[str, ...]) -> FracField:
    """Field of rational functions over QQ in ``names`` with lex order."""
    return FracField(tuple(Symbol(name) for name in names), QQ, lex)


STRUCTURE_FIELD = rational_function_field(PARAMETER_NAMES)


def _field_names(field: FracField) -> Tuple[str, ...]:
    return tuple(str(symbol) for symbol in field.symbols)


def _coefficient_to_fraction(coefficient) -> Fraction:
    return Fraction(int(coefficient.numerator), int(coefficient.denominator))


def is_symbolic(value) -> bool:
    return isinstance(value, FracElement)


def promote(value, field: Optional[FracField] = None) -> FracElement:
    """Lift a rational (or int) into a rational function field."""
    if isinstance(value, FracElement):
        return value
    field = field or STRUCTURE_FIELD
    value = Fraction(value)
    return field.ground_new(QQ(value.numerator, value.denominator))


def variable(name: str, field: Optional[FracField] = None) -> FracElement:
    field = field or STRUCTURE_FIELD
    names = _field_names(field)
    if name not in names:
        raise MissingBinding(name)
    return field.gens[names.index(name)]


def _coerce(a, b):
    if isinstance(a, FracElement):
        return a, promote(b, a.field)
    if isinstance(b, FracElement):
        return promote(a, b.field), b
    return Fraction(a), Fraction(b)


_BINARY = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}


def scalar_arith(op: str, a: Scalar, b: Scalar = None) -> Scalar:
    """
    Exact field arithmetic on scalars.

    Args:
        op: one of ``add``, ``sub``, ``mul``, ``neg`` (``b`` is ignored for ``neg``)
        a: left operand
        b: right operand

    Returns:
        The exact result. Mixing a rational with a rational function promotes the
        rational to a constant of the same field.
    """
    if op == "neg":
        return -a if isinstance(a, FracElement) else -Fraction(a)
    if op not in _BINARY:
        raise ValueError(f"unknown scalar operation '{op}'")
    left, right = _coerce(a, b)
    return _BINARY[op](left, right)


def add(a: Scalar, b: Scalar) -> Scalar:
    return scalar_arith("add", a, b)


def sub(a: Scalar, b: Scalar) -> Scalar:
    return scalar_arith("sub", a, b)


def mul(a: Scalar, b: Scalar) -> Scalar:
    return scalar_arith("mul", a, b)


def neg(a: Scalar) -> Scalar:
    return scalar_arith("neg", a)


def total(values: Iterable[Scalar]) -> Scalar:
    result: Scalar = ZERO
    for value in values:
        result = add(result, value)
    return result


def half(a: Scalar) -> Scalar:
    return mul(Fraction(1, 2), a)


def power(a: Scalar, exponent: int) -> Scalar:
    if isinstance(a, FracElement):
        return a ** exponent
    return Fraction(a) ** exponent


def is_zero(a: Scalar) -> bool:
    """True iff ``a`` is the zero element of its field."""
    if isinstance(a, FracElement):
        return not a.numer
    return a == 0


def scalar_div(a: Scalar, b: Scalar) -> Scalar:
    """Exact quotient; raises DivisionByZero when ``b`` is identically zero."""
    if is_zero(b):
        raise DivisionByZero("division by zero")
    left, right = _coerce(a, b)
    return left / right


def scalars_equal(a: Scalar, b: Scalar) -> bool:
    return is_zero(sub(a, b))


def free_names(a: Scalar) -> Set[str]:
    """Indeterminates that actually occur in ``a``."""
    if not isinstance(a, FracElement):
        return set()
    names = _field_names(a.field)
    found = set()
    for poly in (a.numer, a.denom):
        for monom in poly.monoms():
            found.update(name for name, exponent in zip(names, monom) if exponent)
    return found


def _evaluate_polynomial(poly, names: Sequence[str], values: Mapping[str, Scalar], start: Scalar):
    result = start
    for monom, coefficient in poly.terms():
        term: Scalar = _coefficient_to_fraction(coefficient)
        for name, exponent in zip(names, monom):
            if not exponent:
                continue
            if name not in values:
                raise MissingBinding(name)
            term = mul(term, power(values[name], exponent))
        result = add(result, term)
    return result


def substitute(a: Scalar, assignment: Mapping[str, Fraction]) -> Fraction:
    """
    Evaluate ``a`` at a rational point.

    The denominator is evaluated first so that a pole raises DivisionByZero
    before any numerator binding is inspected.
    """
    if not isinstance(a, FracElement):
        return Fraction(a)
    names = _field_names(a.field)
    point = {name: Fraction(value) for name, value in assignment.items()}
    denominator = _evaluate_polynomial(a.denom, names, point, ZERO)
    if denominator == 0:
        raise DivisionByZero("denominator vanishes at the given point")
    numerator = _evaluate_polynomial(a.numer, names, point, ZERO)
    return numerator / denominator


def compose(a: Scalar, substitutions: Mapping[str, Scalar]) -> Scalar:
    """Replace indeterminates of ``a`` by scalars of the same field; others stay."""
    if not isinstance(a, FracElement):
        return a
    field = a.field
    names = _field_names(field)
    values: Dict[str, Scalar] = {name: field.gens[index] for index, name in enumerate(names)}
    for name, value in substitutions.items():
        values[name] = promote(value, field)
    denominator = _evaluate_polynomial(a.denom, names, values, field.zero)
    if is_zero(denominator):
        raise DivisionByZero("denominator vanishes identically after substitution")
    numerator = _evaluate_polynomial(a.numer, names, values, field.zero)
    return numerator / denominator


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _render_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _render_monomial(names: Sequence[str], monom: Sequence[int]) -> List[str]:
    factors = []
    for name, exponent in zip(names, monom):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return factors


def _render_polynomial(poly, names: Sequence[str]) -> Tuple[str, int]:
    """Render a polynomial; returns the text and its number of terms."""
    pieces = []
    terms = poly.terms()
    for index, (monom, coefficient) in enumerate(terms):
        value = _coefficient_to_fraction(coefficient)
        factors = _render_monomial(names, monom)
        magnitude = abs(value)
        if factors and magnitude == 1:
            body = "*".join(factors)
        elif factors:
            body = _render_fraction(magnitude) + "*" + "*".join(factors)
        else:
            body = _render_fraction(magnitude)
        if index == 0:
            pieces.append(("-" if value < 0 else "") + body)
        else:
            pieces.append(("-" if value < 0 else "+") + body)
    if not pieces:
        return "0", 0
    return "".join(pieces), len(terms)


def _is_single_factor(text: str, term_count: int) -> bool:
    return term_count == 1 and re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*(\^\d+)?|\d+", text) is not None


def render(a: Scalar) -> str:
    """Render a scalar in the parser's grammar."""
    if not isinstance(a, FracElement):
        return _render_fraction(Fraction(a))
    names = _field_names(a.field)
    numerator, numerator_terms = _render_polynomial(a.numer, names)
    if a.denom == 1:
        return numerator
    denominator, denominator_terms = _render_polynomial(a.denom, names)
    if numerator_terms > 1 or "/" in numerator:
        numerator = f"({numerator})"
    if not _is_single_factor(denominator, denominator_terms):
        denominator = f"({denominator})"
    return f"{numerator}/{denominator}"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offset = position + (len(text[position:]) - len(text[position:].lstrip()))
            raise ParseError(f"unexpected character '{text[offset]}'", offset)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _ExpressionParser:
    """Recursive-descent parser for the scalar grammar."""

    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.names = tuple(names)
        self.tokens = _tokenize(text)
        self.index = 0
        self.symbolic = False

    @property
    def current(self) -> Tuple[str, str, int]:
        return self.tokens[self.index]

    def _advance(self) -> Tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _fail(self, token: Tuple[str, str, int]):
        kind, value, position = token
        if kind == "end":
            raise ParseError("unexpected end of input", position)
        raise ParseError(f"unexpected '{value}'", position)

    def parse(self) -> Scalar:
        value = self.expr()
        if self.current[0] != "end":
            self._fail(self.current)
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while self.current[1] in ("+", "-") and self.current[0] == "op":
            symbol = self._advance()[1]
            right = self.term()
            value = add(value, right) if symbol == "+" else sub(value, right)
        return value

    def term(self) -> Scalar:
        value = self.factor()
        while self.current[1] in ("*", "/") and self.current[0] == "op":
            symbol, position = self._advance()[1:]
            right = self.factor()
            if symbol == "*":
                value = mul(value, right)
            elif is_zero(right):
                raise DivisionByZero(f"division by zero at offset {position}")
            else:
                value = scalar_div(value, right)
        return value

    def factor(self) -> Scalar:
        if self.current == ("op", "-", self.current[2]):
            self._advance()
            return neg(self.factor())
        value = self.atom()
        if self.current[0] == "op" and self.current[1] == "^":
            self._advance()
            kind, exponent, _ = self.current
            if kind != "int":
                self._fail(self.current)
            self._advance()
            value = power(value, int(exponent))
        return value

    def atom(self) -> Scalar:
        kind, value, position = self.current
        if kind == "int":
            self._advance()
            return Fraction(int(value))
        if kind == "ident":
            if value not in self.names:
                raise ParseError(f"unknown parameter '{value}'", position)
            self._advance()
            self.symbolic = True
            return variable(value, rational_function_field(self.names))
        if kind == "op" and value == "(":
            self._advance()
            inner = self.expr()
            if self.current[0] != "op" or self.current[1] != ")":
                self._fail(self.current)
            self._advance()
            return inner
        self._fail(self.current)


def parse_scalar(text: str, names: Optional[Sequence[str]] = None) -> Scalar:
    """
    Parse a scalar expression.

    Args:
        text: integer, ``p/q`` or polynomial-fraction expression
        names: declared parameter names (default: the 14 structure coefficients)

    Returns:
        A Fraction when no parameter occurs, otherwise a rational function over
        the field of ``names``.

    Raises:
        ParseError: grammar violation, with the offending offset
        DivisionByZero: division by an expression that is identically zero
    """
    if not isinstance(text, str):
        raise ParseError("expected a string expression", 0)
    parser = _ExpressionParser(text, names or PARAMETER_NAMES)
    value = parser.parse()
    if parser.symbolic:
        return promote(value, rational_function_field(parser.names))
    return value
