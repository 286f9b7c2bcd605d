# geometry.py
"""
Left-invariant Riemannian geometry of the adapted orthonormal basis: the
Levi-Civita connection from the Koszul formula, the second fundamental forms of
the vertical distribution V = span{Z, W} and the horizontal distribution
H = span{X, Y}, the foliation flags, and the curvature of the subgroup with
[W, Z] = lambda W.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from liealg import (
    BracketTable, StructureConstants, Vector4, W, X, Y, Z, bracket_coordinates,
)
from scalars import ZERO, Scalar, add, half, is_zero, mul, sub, total

logger = logging.getLogger(__name__)


class NotConformal(ValueError):
    """The horizontal second fundamental form is not of the form g (x) V."""

    def __init__(self, component: str, value: Scalar):
        super().__init__(f"horizontal form is not conformal: {component} does not vanish")
        self.component = component
        self.value = value


@dataclass(frozen=True)
class ConnectionCoefficients:
    """gamma[i][j][k] = g(nabla_{e_i} e_j, e_k)."""
    dimension: int
    gamma: Tuple[Tuple[Tuple[Scalar, ...], ...], ...]

    def covariant(self, i: int, j: int) -> Tuple[Scalar, ...]:
        """Coordinates of nabla_{e_i} e_j."""
        return self.gamma[i][j]

    def is_metric_compatible(self) -> bool:
        n = self.dimension
        return all(
            is_zero(add(self.gamma[i][j][k], self.gamma[i][k][j]))
            for i in range(n) for j in range(n) for k in range(n)
        )

    def is_torsion_free(self, t: BracketTable) -> bool:
        n = self.dimension
        return all(
            is_zero(sub(sub(self.gamma[i][j][k], self.gamma[j][i][k]), t.c[i][j][k]))
            for i in range(n) for j in range(n) for k in range(n)
        )


def levi_civita(t: BracketTable) -> ConnectionCoefficients:
    """
    Koszul formula for a left-invariant metric with orthonormal basis:

        2 g(nabla_i e_j, e_k) = c[i][j][k] - c[j][k][i] + c[k][i][j]

    Jacobi is not required.
    """
    n = t.dimension
    c = t.c
    gamma = tuple(
        tuple(
            tuple(half(add(sub(c[i][j][k], c[j][k][i]), c[k][i][j])) for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    return ConnectionCoefficients(n, gamma)


def _horizontal(components) -> Vector4:
    return Vector4(components[X], components[Y], ZERO, ZERO)


def _vertical(components) -> Vector4:
    return Vector4(ZERO, ZERO, components[Z], components[W])


def _symmetrized(conn: ConnectionCoefficients, i: int, j: int) -> Tuple[Scalar, ...]:
    return tuple(half(add(p, q)) for p, q in zip(conn.covariant(i, j), conn.covariant(j, i)))


@dataclass(frozen=True)
class SecondFundamentalForms:
    """
    vertical: B_V on (Z,Z), (Z,W), (W,W), valued in H.
    horizontal: B_H on (X,X), (X,Y), (Y,Y), valued in V.
    """
    vertical: Dict[str, Vector4]
    horizontal: Dict[str, Vector4]

    def vertical_trace(self) -> Vector4:
        return self.vertical["ZZ"] + self.vertical["WW"]

    def to_json(self) -> Dict[str, Dict[str, Dict[str, str]]]:
        return {
            "vertical": {key: value.to_json() for key, value in self.vertical.items()},
            "horizontal": {key: value.to_json() for key, value in self.horizontal.items()},
        }


def second_fundamental_forms(conn: ConnectionCoefficients) -> SecondFundamentalForms:
    vertical = {
        "ZZ": _horizontal(_symmetrized(conn, Z, Z)),
        "ZW": _horizontal(_symmetrized(conn, Z, W)),
        "WW": _horizontal(_symmetrized(conn, W, W)),
    }
    horizontal = {
        "XX": _vertical(_symmetrized(conn, X, X)),
        "XY": _vertical(_symmetrized(conn, X, Y)),
        "YY": _vertical(_symmetrized(conn, Y, Y)),
    }
    return SecondFundamentalForms(vertical, horizontal)


def conformal_witness(forms: SecondFundamentalForms) -> Vector4:
    """
    Return V with B_H = g (x) V.

    Raises:
        NotConformal: naming the first component that breaks the form
    """
    xy = forms.horizontal["XY"]
    for name, value in (("B_H(X,Y).Z", xy.z), ("B_H(X,Y).W", xy.w)):
        if not is_zero(value):
            raise NotConformal(name, value)
    difference = forms.horizontal["XX"] - forms.horizontal["YY"]
    for name, value in (("B_H(X,X)-B_H(Y,Y).Z", difference.z), ("B_H(X,X)-B_H(Y,Y).W", difference.w)):
        if not is_zero(value):
            raise NotConformal(name, value)
    return forms.horizontal["XX"]


@dataclass(frozen=True)
class FoliationFlags:
    totally_geodesic: bool
    riemannian: bool
    h_integrable: bool
    mean_curvature: Optional[Vector4]
    conformal: bool = True
    minimal: bool = True

    def to_json(self) -> Dict[str, object]:
        return {
            "conformal": self.conformal,
            "minimal": self.minimal,
            "totally_geodesic": self.totally_geodesic,
            "riemannian": self.riemannian,
            "h_integrable": self.h_integrable,
            "mean_curvature": self.mean_curvature.to_json() if self.mean_curvature else None,
        }


def foliation_flags(sc: StructureConstants) -> FoliationFlags:
    """Closed-form foliation predicates of the bracket shape."""
    return FoliationFlags(
        totally_geodesic=all(is_zero(v) for v in (sc.z1, sc.z2, add(sc.z3, sc.w1), add(sc.z4, sc.w2))),
        riemannian=is_zero(sc.alpha) and is_zero(sc.a),
        h_integrable=is_zero(sc.theta1) and is_zero(sc.theta2),
        mean_curvature=Vector4(ZERO, ZERO, sc.alpha, sc.a),
    )


def connection_flags(t: BracketTable) -> FoliationFlags:
    """The same predicates, computed from the connection of an arbitrary table."""
    forms = second_fundamental_forms(levi_civita(t))
    try:
        witness: Optional[Vector4] = conformal_witness(forms)
    except NotConformal as exc:
        logger.debug(f"[connection_flags] {exc}")
        witness = None
    xy = t.structure(X, Y)
    return FoliationFlags(
        totally_geodesic=all(value.is_zero() for value in forms.vertical.values()),
        riemannian=witness is not None and witness.is_zero(),
        h_integrable=is_zero(xy[Z]) and is_zero(xy[W]),
        mean_curvature=witness,
        conformal=witness is not None,
        minimal=forms.vertical_trace().is_zero(),
    )


def _nabla(conn: ConnectionCoefficients, u, v) -> Tuple[Scalar, ...]:
    """nabla_u v for left-invariant fields given in coordinates."""
    n = conn.dimension
    return tuple(
        total(mul(mul(u[i], v[j]), conn.gamma[i][j][k])
              for i in range(n) for j in range(n) if not (is_zero(u[i]) or is_zero(v[j])))
        for k in range(n)
    )


def sectional_curvature(t: BracketTable, i: int, j: int) -> Scalar:
    """
    g(R(e_i, e_j) e_j, e_i) with R(u, v) = [nabla_u, nabla_v] - nabla_[u,v].
    For orthonormal e_i, e_j this is the sectional curvature of their plane.
    """
    conn = levi_civita(t)
    n = t.dimension
    ei = tuple(Fraction(int(k == i)) for k in range(n))
    ej = tuple(Fraction(int(k == j)) for k in range(n))
    first = _nabla(conn, ei, _nabla(conn, ej, ej))
    second = _nabla(conn, ej, _nabla(conn, ei, ej))
    third = _nabla(conn, bracket_coordinates(t, ei, ej), ej)
    return sub(sub(first[i], second[i]), third[i])


def gaussian_curvature_k(lam: Scalar) -> Scalar:
    """Curvature of the two-dimensional algebra [W, Z] = lam W (basis Z, W)."""
    subgroup = BracketTable.from_brackets(2, {(1, 0): (ZERO, lam)})
    return sectional_curvature(subgroup, 0, 1)
