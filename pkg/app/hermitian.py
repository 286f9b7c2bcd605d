# hermitian.py
"""
The adapted almost Hermitian structure J (J X = Y, J Z = W), its Kahler form,
the exterior derivative of that form, the Nijenhuis tensor, and the almost
Kahler (AK), integrable (I) and Kahler (K) predicates.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Sequence, Union

from geometry import FoliationFlags, foliation_flags
from liealg import BASIS_NAMES, BracketTable, StructureConstants, Vector4, bracket
from scalars import Scalar, add, is_zero, mul, neg, render, sub, total

ALMOST_KAHLER = "AK"
INTEGRABLE = "I"
KAHLER = "K"
CLASSES = (ALMOST_KAHLER, INTEGRABLE, KAHLER)

# Witness expressions; a class holds iff its witnesses vanish.
THETA1_WITNESS = "theta1-2*a"
THETA2_WITNESS = "theta2+2*alpha"
Z1_WITNESS = "2*z1-z4-w2"
Z2_WITNESS = "2*z2+z3+w1"

CLASS_WITNESSES = {
    ALMOST_KAHLER: (THETA1_WITNESS, THETA2_WITNESS),
    INTEGRABLE: (Z1_WITNESS, Z2_WITNESS),
    KAHLER: (THETA1_WITNESS, THETA2_WITNESS, Z1_WITNESS, Z2_WITNESS),
}


class AdaptedJ:
    """J X = Y, J Y = -X, J Z = W, J W = -Z; columns are the images of the basis."""

    # Entries are 0 or +-1.
    MATRIX = (
        (0, -1, 0, 0),
        (1, 0, 0, 0),
        (0, 0, 0, -1),
        (0, 0, 1, 0),
    )

    @classmethod
    def apply(cls, v: Vector4) -> Vector4:
        components = v.components
        return Vector4.from_components([
            total(components[col] if entry > 0 else neg(components[col]) for col, entry in enumerate(row) if entry)
            for row in cls.MATRIX
        ])


def apply_j(v: Vector4) -> Vector4:
    return AdaptedJ.apply(v)


def kahler_form(u: Vector4, v: Vector4) -> Scalar:
    """omega(u, v) = g(J u, v)."""
    return apply_j(u).dot(v)


def _basis_index(entry: Union[int, str]) -> int:
    if isinstance(entry, str):
        return BASIS_NAMES.index(entry)
    return entry


def _cyclic_sum(t: BracketTable, i: int, j: int, k: int) -> Scalar:
    """-omega([e_i,e_j],e_k) - omega([e_j,e_k],e_i) - omega([e_k,e_i],e_j)."""
    e = [Vector4.basis(index) for index in range(4)]
    value = add(
        kahler_form(bracket(t, e[i], e[j]), e[k]),
        add(kahler_form(bracket(t, e[j], e[k]), e[i]), kahler_form(bracket(t, e[k], e[i]), e[j])),
    )
    return neg(value)


def _permutation_sign(indices: Sequence[int]) -> int:
    sign = 1
    items = list(indices)
    for p in range(len(items)):
        for q in range(p + 1, len(items)):
            if items[p] > items[q]:
                sign = -sign
    return sign


def d_omega(t: BracketTable, triple: Sequence[Union[int, str]]) -> Scalar:
    """
    d(omega) on a triple of basis vectors.

    Args:
        t: bracket table of the algebra
        triple: three basis indices or names ("X", "Y", "Z", "W")

    Returns:
        The value on the sorted triple times the sign of the sorting permutation;
        zero when an index repeats.
    """
    indices = [_basis_index(entry) for entry in triple]
    if len(indices) != 3:
        raise ValueError("d_omega expects exactly three basis vectors")
    if len(set(indices)) < 3:
        return Fraction(0)
    value = _cyclic_sum(t, *sorted(indices))
    return value if _permutation_sign(indices) > 0 else neg(value)


def nijenhuis(t: BracketTable, u: Vector4, v: Vector4) -> Vector4:
    """N(u, v) = [u, v] + J[Ju, v] + J[u, Jv] - [Ju, Jv]."""
    ju, jv = apply_j(u), apply_j(v)
    return (
        bracket(t, u, v)
        + apply_j(bracket(t, ju, v))
        + apply_j(bracket(t, u, jv))
        - bracket(t, ju, jv)
    )


def is_almost_kahler_direct(t: BracketTable) -> bool:
    return all(is_zero(d_omega(t, triple)) for triple in combinations(range(4), 3))


def is_integrable_direct(t: BracketTable) -> bool:
    return all(
        nijenhuis(t, Vector4.basis(i), Vector4.basis(j)).is_zero()
        for i, j in combinations(range(4), 2)
    )


def class_witnesses(sc: StructureConstants) -> Dict[str, Scalar]:
    return {
        THETA1_WITNESS: sub(sc.theta1, mul(2, sc.a)),
        THETA2_WITNESS: add(sc.theta2, mul(2, sc.alpha)),
        Z1_WITNESS: sub(sub(mul(2, sc.z1), sc.z4), sc.w2),
        Z2_WITNESS: add(add(mul(2, sc.z2), sc.z3), sc.w1),
    }


def satisfies_class(sc: StructureConstants, cls: str) -> bool:
    witnesses = class_witnesses(sc)
    return all(is_zero(witnesses[name]) for name in CLASS_WITNESSES[cls])


@dataclass(frozen=True)
class ClassificationResult:
    almost_kahler: bool
    integrable: bool
    kahler: bool
    flags: FoliationFlags
    witnesses: Dict[str, Scalar] = field(default_factory=dict)

    def to_json(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "almost_kahler": self.almost_kahler,
            "integrable": self.integrable,
            "kahler": self.kahler,
        }
        payload.update(self.flags.to_json())
        payload["witnesses"] = {name: render(value) for name, value in self.witnesses.items()}
        return payload


def classify(sc: StructureConstants) -> ClassificationResult:
    """Closed-form class predicates; defined for any structure constants, Lie or not."""
    witnesses = class_witnesses(sc)
    almost_kahler = all(is_zero(witnesses[name]) for name in CLASS_WITNESSES[ALMOST_KAHLER])
    integrable = all(is_zero(witnesses[name]) for name in CLASS_WITNESSES[INTEGRABLE])
    return ClassificationResult(
        almost_kahler=almost_kahler,
        integrable=integrable,
        kahler=almost_kahler and integrable,
        flags=foliation_flags(sc),
        witnesses=witnesses,
    )
