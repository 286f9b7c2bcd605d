# liealg.py
"""
Structure constants of a four-dimensional metric Lie algebra with an adapted
orthonormal basis (X, Y, Z, W), the general bracket table they expand to, and
the Jacobi identity in its polynomial-system and trilinear forms.
"""
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Sequence, Tuple

from scalars import (
    PARAMETER_NAMES, ZERO, Scalar, add, is_zero, mul, neg, parse_scalar, render, sub, total,
)


BASIS_NAMES = ("X", "Y", "Z", "W")
X, Y, Z, W = range(4)

# JSON key -> attribute ("lambda" is a Python keyword).
_ATTRIBUTES = {name: ("lam" if name == "lambda" else name) for name in PARAMETER_NAMES}


class UnknownParameter(ValueError):
    """Raised for structure-constant input that names no known coefficient."""


@dataclass(frozen=True)
class StructureConstants:
    """
    The 14 bracket coefficients of

        [W,Z] = lam W
        [Z,X] = alpha X + beta Y + z1 Z + w1 W
        [Z,Y] = -beta X + alpha Y + z2 Z + w2 W
        [W,X] = a X + b Y + z3 Z - z1 W
        [W,Y] = -b X + a Y + z4 Z - z2 W
        [Y,X] = r X + theta1 Z + theta2 W

    Not every instance is a Lie algebra; see is_lie_algebra.
    """
    lam: Scalar = ZERO
    alpha: Scalar = ZERO
    beta: Scalar = ZERO
    a: Scalar = ZERO
    b: Scalar = ZERO
    r: Scalar = ZERO
    z1: Scalar = ZERO
    z2: Scalar = ZERO
    z3: Scalar = ZERO
    z4: Scalar = ZERO
    w1: Scalar = ZERO
    w2: Scalar = ZERO
    theta1: Scalar = ZERO
    theta2: Scalar = ZERO

    @classmethod
    def from_mapping(cls, values: Mapping[str, Scalar]) -> "StructureConstants":
        """Build from a mapping keyed by the JSON names (``lambda``, ``alpha``, ...)."""
        unknown = sorted(set(values) - set(_ATTRIBUTES))
        if unknown:
            raise UnknownParameter(f"unknown structure coefficient(s): {', '.join(unknown)}")
        return cls(**{_ATTRIBUTES[name]: value for name, value in values.items()})

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "StructureConstants":
        """
        Parse the JSON input object.

        Values are scalar-grammar strings (integers are accepted too); omitted
        keys default to zero.
        """
        if not isinstance(payload, Mapping):
            raise UnknownParameter("structure constants must be a JSON object")
        parsed = {}
        for name, raw in payload.items():
            if isinstance(raw, bool) or not isinstance(raw, (str, int)):
                raise UnknownParameter(f"value for '{name}' must be a string or an integer")
            parsed[name] = parse_scalar(str(raw)) if isinstance(raw, str) else Fraction(raw)
        return cls.from_mapping(parsed)

    def get(self, name: str) -> Scalar:
        return getattr(self, _ATTRIBUTES[name])

    def as_mapping(self) -> Dict[str, Scalar]:
        return {name: self.get(name) for name in PARAMETER_NAMES}

    def to_json(self) -> Dict[str, str]:
        return {name: render(value) for name, value in self.as_mapping().items()}

    def scaled(self, factor: Scalar) -> "StructureConstants":
        return replace(self, **{f.name: mul(factor, getattr(self, f.name)) for f in fields(self)})

    @classmethod
    def zero(cls) -> "StructureConstants":
        return cls()


@dataclass(frozen=True)
class Vector4:
    """Coordinates in the orthonormal basis (X, Y, Z, W)."""
    x: Scalar = ZERO
    y: Scalar = ZERO
    z: Scalar = ZERO
    w: Scalar = ZERO

    @classmethod
    def from_components(cls, components: Sequence[Scalar]) -> "Vector4":
        return cls(*components)

    @classmethod
    def basis(cls, index: int) -> "Vector4":
        components = [ZERO] * 4
        components[index] = Fraction(1)
        return cls(*components)

    @property
    def components(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.x, self.y, self.z, self.w)

    def __add__(self, other: "Vector4") -> "Vector4":
        return Vector4(*(add(p, q) for p, q in zip(self.components, other.components)))

    def __sub__(self, other: "Vector4") -> "Vector4":
        return Vector4(*(sub(p, q) for p, q in zip(self.components, other.components)))

    def __neg__(self) -> "Vector4":
        return Vector4(*(neg(p) for p in self.components))

    def scale(self, factor: Scalar) -> "Vector4":
        return Vector4(*(mul(factor, p) for p in self.components))

    def dot(self, other: "Vector4") -> Scalar:
        return total(mul(p, q) for p, q in zip(self.components, other.components))

    def is_zero(self) -> bool:
        return all(is_zero(p) for p in self.components)

    def to_json(self) -> Dict[str, str]:
        return {name: render(value) for name, value in zip(BASIS_NAMES, self.components)}


@dataclass(frozen=True)
class BracketTable:
    """
    A bracket on an n-dimensional space with orthonormal basis e_0..e_{n-1}:
    [e_i, e_j] = sum_k c[i][j][k] e_k.
    """
    dimension: int
    c: Tuple[Tuple[Tuple[Scalar, ...], ...], ...]

    @classmethod
    def from_brackets(cls, dimension: int,
                      brackets: Mapping[Tuple[int, int], Sequence[Scalar]]) -> "BracketTable":
        """Antisymmetric table from the listed brackets [e_i, e_j]; unlisted pairs are zero."""
        table = [[[ZERO] * dimension for _ in range(dimension)] for _ in range(dimension)]
        for (i, j), coefficients in brackets.items():
            if i == j:
                raise ValueError(f"bracket [e{i}, e{i}] must vanish")
            for k, value in enumerate(coefficients):
                table[i][j][k] = value
                table[j][i][k] = neg(value)
        return cls(dimension, tuple(tuple(tuple(row) for row in plane) for plane in table))

    @classmethod
    def abelian(cls, dimension: int = 4) -> "BracketTable":
        return cls.from_brackets(dimension, {})

    def structure(self, i: int, j: int) -> Tuple[Scalar, ...]:
        return self.c[i][j]

    def is_antisymmetric(self) -> bool:
        n = self.dimension
        return all(
            is_zero(add(self.c[i][j][k], self.c[j][i][k]))
            for i in range(n) for j in range(n) for k in range(n)
        )


def to_bracket_table(sc: StructureConstants) -> BracketTable:
    """Expand the six bracket relations; every other basis bracket is zero."""
    return BracketTable.from_brackets(4, {
        (W, Z): (ZERO, ZERO, ZERO, sc.lam),
        (Z, X): (sc.alpha, sc.beta, sc.z1, sc.w1),
        (Z, Y): (neg(sc.beta), sc.alpha, sc.z2, sc.w2),
        (W, X): (sc.a, sc.b, sc.z3, neg(sc.z1)),
        (W, Y): (neg(sc.b), sc.a, sc.z4, neg(sc.z2)),
        (Y, X): (sc.r, ZERO, sc.theta1, sc.theta2),
    })


def bracket_coordinates(t: BracketTable, u: Sequence[Scalar], v: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    n = t.dimension
    result = []
    for k in range(n):
        result.append(total(
            mul(mul(u[i], v[j]), t.c[i][j][k])
            for i in range(n) for j in range(n)
            if not (is_zero(u[i]) or is_zero(v[j]) or is_zero(t.c[i][j][k]))
        ))
    return tuple(result)


def bracket(t: BracketTable, u: Vector4, v: Vector4) -> Vector4:
    """Bilinear extension of the table to arbitrary vectors."""
    return Vector4.from_components(bracket_coordinates(t, u.components, v.components))


def _basis_coordinates(n: int, index: int) -> Tuple[Scalar, ...]:
    return tuple(Fraction(1) if k == index else ZERO for k in range(n))


def jacobi_residuals_generic(t: BracketTable) -> List[Vector4]:
    """
    J(e_i, e_j, e_k) = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
    for every basis triple i < j < k.
    """
    n = t.dimension
    residuals = []
    for i, j, k in combinations(range(n), 3):
        ei, ej, ek = (_basis_coordinates(n, index) for index in (i, j, k))
        terms = (
            bracket_coordinates(t, t.c[i][j], ek),
            bracket_coordinates(t, t.c[j][k], ei),
            bracket_coordinates(t, t.c[k][i], ej),
        )
        components = tuple(total(term[m] for term in terms) for m in range(n))
        residuals.append(Vector4.from_components(components) if n == 4 else components)
    return residuals


# Each residual is a sum of coefficient * factor * factor, in the fixed residual order.
_JACOBI_SYSTEM: Tuple[Tuple[Tuple[int, str, str], ...], ...] = (
    ((1, "lambda", "a"),),
    ((1, "lambda", "b"),),
    ((-1, "w2", "z3"), (1, "w1", "z4"), (-2, "alpha", "theta1"), (1, "r", "z1")),
    ((-2, "z4", "z1"), (2, "z3", "z2"), (-2, "a", "theta1"), (1, "r", "z3")),
    ((-1, "lambda", "z3"), (-1, "z2", "b"), (1, "z4", "beta"), (-1, "z1", "a"), (1, "z3", "alpha")),
    ((-1, "lambda", "z4"), (-1, "z2", "a"), (1, "z4", "alpha"), (1, "z1", "b"), (-1, "z3", "beta")),
    ((1, "lambda", "theta1"), (-1, "w1", "z4"), (1, "w2", "z3"), (-2, "a", "theta2"), (-1, "r", "z1")),
    ((-1, "lambda", "theta2"), (2, "z1", "w2"), (-2, "z2", "w1"), (-2, "alpha", "theta2"), (1, "r", "w1")),
    ((-1, "w2", "a"), (-1, "w1", "b"), (-1, "z2", "alpha"), (-1, "z1", "beta"), (-1, "alpha", "r")),
    ((-1, "w2", "b"), (1, "w1", "a"), (-1, "z2", "beta"), (1, "z1", "alpha"), (1, "r", "beta")),
    ((1, "lambda", "z1"), (-1, "w2", "b"), (-1, "z2", "beta"), (-1, "w1", "a"), (-1, "z1", "alpha")),
    ((1, "z2", "a"), (1, "z1", "b"), (-1, "z4", "alpha"), (-1, "z3", "beta"), (-1, "a", "r")),
    ((1, "z2", "b"), (-1, "z1", "a"), (-1, "z4", "beta"), (1, "z3", "alpha"), (1, "r", "b")),
    ((1, "lambda", "z2"), (-1, "w2", "a"), (-1, "z2", "alpha"), (1, "w1", "b"), (1, "z1", "beta")),
)


def jacobi_residuals_appendix(sc: StructureConstants) -> List[Scalar]:
    """The 14 quadratic Jacobi residuals of the bracket shape, residual 1 first."""
    values = sc.as_mapping()
    return [
        total(mul(Fraction(coefficient), mul(values[p], values[q])) for coefficient, p, q in equation)
        for equation in _JACOBI_SYSTEM
    ]


def is_lie_algebra(sc: StructureConstants) -> bool:
    return all(is_zero(residual) for residual in jacobi_residuals_appendix(sc))


def failing_residuals(sc: StructureConstants) -> List[int]:
    """1-based indices of the non-vanishing Jacobi residuals."""
    return [index for index, residual in enumerate(jacobi_residuals_appendix(sc), start=1)
            if not is_zero(residual)]
