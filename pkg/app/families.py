# families.py
"""
Catalog of the twenty parametric families of metric Lie algebras with a
conformal foliation by minimal leaves, and of their almost Kahler (AK),
integrable (I) and Kahler (K) subfamilies.

Every bracket entry, domain constraint, chart substitution and obstruction is
kept as a scalar-grammar string and parsed into the structure field on demand,
so the catalog doubles as the source of the exported golden file.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from hermitian import (
    ALMOST_KAHLER, CLASSES, INTEGRABLE, KAHLER,
    THETA1_WITNESS, THETA2_WITNESS, Z1_WITNESS, Z2_WITNESS,
)
from liealg import StructureConstants
from scalars import (
    PARAMETER_NAMES, DivisionByZero, MissingBinding, Scalar, compose, parse_scalar, promote,
    substitute,
)

NONZERO = "!=0"
POSITIVE = ">0"

WHOLE = "whole"
EMPTY = "empty"
PARAMETRIC = "parametric"


class DomainViolation(ValueError):
    """A parameter assignment violates a domain constraint."""

    def __init__(self, constraint: "DomainConstraint"):
        super().__init__(f"domain constraint violated: {constraint.describe()}")
        self.constraint = constraint


class UnknownFamily(LookupError):
    def __init__(self, family_id):
        super().__init__(f"unknown family id {family_id!r}; expected 1..20")
        self.family_id = family_id


class UnknownChart(LookupError):
    pass


@lru_cache(maxsize=None)
def catalog_expression(text: str) -> Scalar:
    """Parse a catalog expression into the structure field."""
    return promote(parse_scalar(text))


@dataclass(frozen=True)
class DomainConstraint:
    expression: str
    relation: str = NONZERO

    def describe(self) -> str:
        return f"{self.expression} {self.relation}"

    def holds(self, assignment: Mapping[str, Fraction]) -> bool:
        try:
            value = substitute(catalog_expression(self.expression), assignment)
        except DivisionByZero:
            return False
        return value > 0 if self.relation == POSITIVE else value != 0

    def to_json(self) -> Dict[str, str]:
        return {"expression": self.expression, "relation": self.relation}


def _first_violation(constraints: Sequence[DomainConstraint],
                     assignment: Mapping[str, Fraction]) -> Optional[DomainConstraint]:
    for constraint in constraints:
        if not constraint.holds(assignment):
            return constraint
    return None


def _require(names: Sequence[str], assignment: Mapping[str, Fraction]) -> None:
    for name in names:
        if name not in assignment:
            raise MissingBinding(name)


@dataclass(frozen=True)
class FamilySpec:
    id: int
    case_label: str
    param_names: Tuple[str, ...]
    constraints: Tuple[DomainConstraint, ...]
    entries: Tuple[Tuple[str, str], ...]
    prose_tag: str
    notes: Tuple[str, ...] = ()

    @property
    def name(self) -> str:
        return f"g{self.id}"

    def entry(self, key: str) -> str:
        """Expression of a structure coefficient; free params default to themselves."""
        explicit = dict(self.entries)
        if key in explicit:
            return explicit[key]
        return key if key in self.param_names else "0"

    def entry_map(self) -> Dict[str, str]:
        return {key: self.entry(key) for key in PARAMETER_NAMES}

    def structure_constants(self) -> StructureConstants:
        """Symbolic constructor: entries as rational functions of the params."""
        return _symbolic_constants(self)

    def violated_constraint(self, assignment: Mapping[str, Fraction]) -> Optional[DomainConstraint]:
        return _first_violation(self.constraints, assignment)

    def build(self, assignment: Mapping[str, Fraction]) -> StructureConstants:
        _require(self.param_names, assignment)
        violated = self.violated_constraint(assignment)
        if violated is not None:
            raise DomainViolation(violated)
        point = {name: Fraction(assignment[name]) for name in self.param_names}
        symbolic = self.structure_constants().as_mapping()
        return StructureConstants.from_mapping(
            {key: substitute(value, point) for key, value in symbolic.items()}
        )


@lru_cache(maxsize=None)
def _symbolic_constants(spec: FamilySpec) -> StructureConstants:
    return StructureConstants.from_mapping(
        {key: catalog_expression(text) for key, text in spec.entry_map().items()}
    )


@dataclass(frozen=True)
class Chart:
    """
    Rational parametrization of (part of) a subfamily: chart params plus
    substitutions for the family params they replace.
    """
    params: Tuple[str, ...]
    substitutions: Tuple[Tuple[str, str], ...] = ()
    constraints: Tuple[DomainConstraint, ...] = ()
    name: str = "main"
    branch: str = ""

    @property
    def dimension(self) -> int:
        return len(self.params)

    def substitution_map(self) -> Dict[str, str]:
        return dict(self.substitutions)

    def restrict(self, value: Scalar) -> Scalar:
        return compose(value, {name: catalog_expression(text) for name, text in self.substitutions})

    def structure_constants(self, family: FamilySpec) -> StructureConstants:
        return _chart_constants(self, family)

    def family_assignment(self, family: FamilySpec,
                          assignment: Mapping[str, Fraction]) -> Dict[str, Fraction]:
        """Map a chart point to the family params; raises DomainViolation off-chart."""
        _require(self.params, assignment)
        violated = _first_violation(self.constraints, assignment)
        if violated is not None:
            raise DomainViolation(violated)
        point = {name: Fraction(assignment[name]) for name in self.params}
        substitutions = self.substitution_map()
        return {
            name: substitute(catalog_expression(substitutions[name]), point) if name in substitutions
            else point[name]
            for name in family.param_names
        }


@lru_cache(maxsize=None)
def _chart_constants(chart: Chart, family: FamilySpec) -> StructureConstants:
    symbolic = family.structure_constants().as_mapping()
    return StructureConstants.from_mapping({key: chart.restrict(value) for key, value in symbolic.items()})


@dataclass(frozen=True)
class Obstruction:
    """
    Certificate for an empty class: sum(multiplier * witness) equals
    ``expression`` identically (on ``chart`` when given), and ``expression``
    is a nonzero constraint or a sum of squares of ``terms``.
    """
    expression: str
    multipliers: Tuple[Tuple[str, str], ...]
    chart: Optional[Chart] = None
    terms: Tuple[str, ...] = ()

    def to_json(self) -> Dict[str, object]:
        return {
            "expression": self.expression,
            "multipliers": dict(self.multipliers),
            "chart": self.chart.name if self.chart else None,
            "terms": list(self.terms),
        }


@dataclass(frozen=True)
class SubfamilyClaim:
    family_id: int
    cls: str
    outcome: str
    conditions: Tuple[str, ...] = ()
    charts: Tuple[Chart, ...] = ()
    obstruction: Optional[Obstruction] = None
    notes: Tuple[str, ...] = ()

    def branches(self) -> Dict[str, List[Chart]]:
        grouped: Dict[str, List[Chart]] = {}
        for chart in self.charts:
            grouped.setdefault(chart.branch, []).append(chart)
        return grouped

    def dimension(self, family: FamilySpec) -> Optional[int]:
        if self.outcome == WHOLE:
            return len(family.param_names)
        if self.outcome == EMPTY:
            return None
        return max(chart.dimension for chart in self.charts)

    def chart(self, name: str) -> Chart:
        for chart in self.charts:
            if chart.name == name:
                return chart
        raise UnknownChart(f"g{self.family_id} {self.cls} has no chart '{name}'")


@dataclass(frozen=True)
class Catalog:
    families: Tuple[FamilySpec, ...]
    claims: Tuple[SubfamilyClaim, ...]

    def family(self, family_id: int) -> FamilySpec:
        for spec in self.families:
            if spec.id == family_id:
                return spec
        raise UnknownFamily(family_id)

    def claims_for(self, family_id: int) -> List[SubfamilyClaim]:
        self.family(family_id)
        order = {cls: index for index, cls in enumerate(CLASSES)}
        return sorted((claim for claim in self.claims if claim.family_id == family_id),
                      key=lambda claim: order[claim.cls])

    def claim(self, family_id: int, cls: str) -> SubfamilyClaim:
        for claim in self.claims_for(family_id):
            if claim.cls == cls:
                return claim
        raise LookupError(f"no {cls} claim for family g{family_id}")

    def ids(self) -> List[int]:
        return [spec.id for spec in self.families]


# ---------------------------------------------------------------------------
# Catalog construction helpers
# ---------------------------------------------------------------------------

def _nonzero(*expressions: str) -> Tuple[DomainConstraint, ...]:
    return tuple(DomainConstraint(text, NONZERO) for text in expressions)


def _family(family_id, case_label, params, constraints, entries, prose_tag="solvable", notes=()):
    return FamilySpec(
        id=family_id,
        case_label=case_label,
        param_names=tuple(params),
        constraints=tuple(constraints),
        entries=tuple(entries.items()),
        prose_tag=prose_tag,
        notes=tuple(notes),
    )


def _chart(params, substitutions=None, constraints=(), name="main", branch=""):
    return Chart(
        params=tuple(params),
        substitutions=tuple((substitutions or {}).items()),
        constraints=tuple(constraints),
        name=name,
        branch=branch,
    )


def _whole(family_id, cls, notes=()):
    return SubfamilyClaim(family_id, cls, WHOLE, notes=tuple(notes))


def _empty(family_id, cls, obstruction, notes=()):
    return SubfamilyClaim(family_id, cls, EMPTY, obstruction=obstruction, notes=tuple(notes))


def _parametric(family_id, cls, conditions, charts, notes=()):
    return SubfamilyClaim(family_id, cls, PARAMETRIC, conditions=tuple(conditions),
                          charts=tuple(charts), notes=tuple(notes))


def _obstruction(expression_text, multipliers, terms=(), chart=None):
    return Obstruction(expression_text, tuple(multipliers.items()), chart, tuple(terms))


def _theta_free(family_id, params, constraints):
    """AK claim of the families with a = alpha = 0: theta1 = theta2 = 0."""
    chart_params = [name for name in params if name not in ("theta1", "theta2")]
    return _parametric(family_id, ALMOST_KAHLER, ("theta1", "theta2"), [
        _chart(chart_params, {"theta1": "0", "theta2": "0"}, _nonzero(*constraints)),
    ])


# g5: D = alpha*b - a*beta; the AK branches solve r^2 = 4D rationally.
_G5_D = "(alpha*b-a*beta)"

_ALPHA_OBSTRUCTION = _obstruction("alpha", {THETA2_WITNESS: "1/2"})

_G5_INTEGRABLE_CHART = _chart(
    ("alpha", "beta", "r"), {"a": "beta", "b": "-alpha"}, _nonzero("r", "alpha^2+beta^2"),
)


def _g5_branch(sign: str) -> List[Chart]:
    positive = DomainConstraint("r" if sign == "+" else "-r", POSITIVE)
    word = "plus" if sign == "+" else "minus"
    return [
        _chart(("alpha", "a", "beta", "r"), {"b": "(r^2/4+a*beta)/alpha"},
               (DomainConstraint("alpha"), positive), name=f"{word}-alpha-nonzero", branch=sign),
        _chart(("a", "b", "r"), {"alpha": "0", "beta": "-r^2/(4*a)"},
               (DomainConstraint("a"), positive), name=f"{word}-alpha-zero", branch=sign),
    ]


def _build_families() -> Tuple[FamilySpec, ...]:
    return (
        _family(1, "A", ("lambda", "r", "w1", "w2"), _nonzero("lambda", "r"),
                {"theta2": "r*w1/lambda"}),
        _family(2, "A", ("lambda", "alpha", "beta", "w1", "w2"),
                _nonzero("lambda", "(lambda-alpha)^2+beta^2"), {}),
        _family(3, "A", ("alpha", "beta", "w1", "w2", "theta2"), _nonzero("alpha", "theta2"),
                {"lambda": "-2*alpha"}),
        _family(4, "B", ("lambda", "z2", "w1", "w2"), _nonzero("lambda"),
                {"alpha": "lambda", "r": "-z2", "theta2": "-z2*w1/lambda"}),
        _family(5, "C", ("alpha", "a", "beta", "b", "r"), _nonzero("r", "alpha*b-a*beta"), {
            "z1": f"r*(alpha*a-beta*b)/(2*{_G5_D})",
            "w1": f"r*(beta^2-alpha^2)/(2*{_G5_D})",
            "z2": f"-r*(alpha*b+beta*a)/(2*{_G5_D})",
            "w2": f"r*alpha*beta/{_G5_D}",
            "z3": f"r*(a^2-b^2)/(2*{_G5_D})",
            "z4": f"-r*a*b/{_G5_D}",
            "theta1": f"a*r^2/(2*{_G5_D})",
            "theta2": f"-alpha*r^2/(2*{_G5_D})",
        }),
        _family(6, "D", ("z1", "z2", "z3", "r", "theta1", "theta2"), _nonzero("z1", "z3", "r"), {
            "z4": "z3*(r+2*z2)/(2*z1)",
            "w1": "-z1^2/z3",
            "w2": "z1*(r-2*z2)/(2*z3)",
        }),
        _family(7, "D", ("z2", "w1", "w2", "theta1", "theta2"), _nonzero("w1", "z2"),
                {"r": "2*z2"}, notes=("z2 != 0 is implied by r != 0",)),
        _family(8, "D", ("z2", "z4", "w2", "r", "theta1", "theta2"), _nonzero("r"), {}),
        _family(9, "D", ("z2", "z3", "z4", "theta1", "theta2"), _nonzero("z3", "z2"),
                {"r": "-2*z2"}, notes=("z2 != 0 is implied by r != 0",)),
        _family(10, "E", ("alpha", "a", "beta", "b"), _nonzero("alpha*b-a*beta"), {}),
        _family(11, "F", ("z1", "z2", "z3", "w1", "theta1", "theta2"), _nonzero("z1"),
                {"z4": "z2*z3/z1", "w2": "z2*w1/z1"}),
        _family(12, "F", ("z3", "w1", "w2", "theta1", "theta2"), _nonzero("w1"),
                {"z4": "z3*w2/w1"}),
        _family(13, "F", ("z3", "z4", "theta1", "theta2"), _nonzero("z3"), {},
                prose_tag="nilpotent"),
        _family(14, "F", ("z2", "z4", "w2", "theta1", "theta2"), (), {}),
        _family(15, "F", ("alpha", "w1", "w2"), _nonzero("alpha"), {}),
        _family(16, "F", ("beta", "w1", "w2", "theta1", "theta2"), _nonzero("beta"), {},
                prose_tag="not solvable in general"),
        _family(17, "F", ("alpha", "a", "w1", "w2"), _nonzero("alpha", "a"), {
            "z1": "-a*w1/alpha",
            "z2": "-a*w2/alpha",
            "z3": "-a^2*w1/alpha^2",
            "z4": "-a^2*w2/alpha^2",
        }),
        _family(18, "F", ("beta", "b", "z3", "z4", "theta1", "theta2"), _nonzero("beta", "b"), {
            "z1": "beta*z3/b",
            "z2": "beta*z4/b",
            "w1": "-beta^2*z3/b^2",
            "w2": "-beta^2*z4/b^2",
        }, prose_tag="not solvable in general"),
        _family(19, "F", ("alpha", "beta", "w1", "w2"), _nonzero("alpha", "beta"), {}),
        _family(20, "F", ("alpha", "a", "beta", "w1", "w2"), _nonzero("alpha", "a", "beta"), {
            "z1": "-a*w1/alpha",
            "z2": "-a*w2/alpha",
            "z3": "-a^2*w1/alpha^2",
            "z4": "-a^2*w2/alpha^2",
            "b": "beta*a/alpha",
        }),
    )


_INTEGRABLE_LABEL_NOTE = ("integrable subfamily is printed with the horizontal-distribution "
                          "label; read as the integrable class")


def _build_claims() -> Tuple[SubfamilyClaim, ...]:
    zero_w = {"w1": "0", "w2": "0"}
    return (
        # g1
        _parametric(1, ALMOST_KAHLER, ("w1",), [
            _chart(("lambda", "r", "w2"), {"w1": "0"}, _nonzero("lambda", "r"))]),
        _parametric(1, INTEGRABLE, ("w1", "w2"), [
            _chart(("lambda", "r"), zero_w, _nonzero("lambda", "r"))]),
        _parametric(1, KAHLER, ("w1", "w2"), [
            _chart(("lambda", "r"), zero_w, _nonzero("lambda", "r"))],
            notes=("the Kahler group is described as a direct product; group-level "
                   "statements are not modelled",)),
        # g2
        _parametric(2, ALMOST_KAHLER, ("alpha",), [
            _chart(("lambda", "beta", "w1", "w2"), {"alpha": "0"}, _nonzero("lambda"))]),
        _parametric(2, INTEGRABLE, ("w1", "w2"), [
            _chart(("lambda", "alpha", "beta"), zero_w,
                   _nonzero("lambda", "(lambda-alpha)^2+beta^2"))]),
        _parametric(2, KAHLER, ("alpha", "w1", "w2"), [
            _chart(("lambda", "beta"), {"alpha": "0", **zero_w}, _nonzero("lambda"))]),
        # g3
        _parametric(3, ALMOST_KAHLER, ("theta2+2*alpha",), [
            _chart(("alpha", "beta", "w1", "w2"), {"theta2": "-2*alpha"}, _nonzero("alpha"))]),
        _parametric(3, INTEGRABLE, ("w1", "w2"), [
            _chart(("alpha", "beta", "theta2"), zero_w, _nonzero("alpha", "theta2"))]),
        _parametric(3, KAHLER, ("theta2+2*alpha", "w1", "w2"), [
            _chart(("alpha", "beta"), {"theta2": "-2*alpha", **zero_w}, _nonzero("alpha"))]),
        # g4
        _parametric(4, ALMOST_KAHLER, ("z2*w1-2*lambda^2",), [
            _chart(("lambda", "z2", "w2"), {"w1": "2*lambda^2/z2"}, _nonzero("lambda", "z2"))]),
        _parametric(4, INTEGRABLE, ("w1+2*z2", "w2"), [
            _chart(("lambda", "z2"), {"w1": "-2*z2", "w2": "0"}, _nonzero("lambda"))]),
        _empty(4, KAHLER, _obstruction("lambda^2+z2^2", {THETA2_WITNESS: "lambda/2", Z2_WITNESS: "z2/2"},
                                       terms=("lambda", "z2"))),
        # g5
        _parametric(5, ALMOST_KAHLER, (f"r^2-4*{_G5_D}",), _g5_branch("+") + _g5_branch("-"),
                    notes=("branches r = +2 sqrt(alpha*b-a*beta) and r = -2 sqrt(alpha*b-a*beta) "
                           "are parametrized rationally by solving r^2 = 4(alpha*b-a*beta) for b "
                           "(alpha != 0) or beta (alpha = 0)",)),
        _parametric(5, INTEGRABLE, ("a-beta", "b+alpha"), [_G5_INTEGRABLE_CHART]),
        _empty(5, KAHLER, _obstruction("r^2+4*alpha^2+4*beta^2",
                                       {THETA1_WITNESS: "-2*beta", THETA2_WITNESS: "2*alpha"},
                                       terms=("r", "2*alpha", "2*beta"), chart=_G5_INTEGRABLE_CHART)),
        # g6
        _theta_free(6, ("z1", "z2", "z3", "r", "theta1", "theta2"), ("z1", "z3", "r")),
        _parametric(6, INTEGRABLE, ("r-(z1^2+z3^2)/z3", "z2-(z1^2-z3^2)/(2*z3)"), [
            _chart(("z1", "z3", "theta1", "theta2"),
                   {"r": "(z1^2+z3^2)/z3", "z2": "(z1^2-z3^2)/(2*z3)"}, _nonzero("z1", "z3"))]),
        _parametric(6, KAHLER, ("theta1", "theta2", "r-(z1^2+z3^2)/z3", "z2-(z1^2-z3^2)/(2*z3)"), [
            _chart(("z1", "z3"),
                   {"r": "(z1^2+z3^2)/z3", "z2": "(z1^2-z3^2)/(2*z3)", "theta1": "0", "theta2": "0"},
                   _nonzero("z1", "z3"))]),
        # g7
        _theta_free(7, ("z2", "w1", "w2", "theta1", "theta2"), ("w1", "z2")),
        _parametric(7, INTEGRABLE, ("w1+2*z2", "w2"), [
            _chart(("z2", "theta1", "theta2"), {"w1": "-2*z2", "w2": "0"}, _nonzero("z2"))]),
        _parametric(7, KAHLER, ("theta1", "theta2", "w1+2*z2", "w2"), [
            _chart(("z2",), {"w1": "-2*z2", "w2": "0", "theta1": "0", "theta2": "0"}, _nonzero("z2"))]),
        # g8
        _theta_free(8, ("z2", "z4", "w2", "r", "theta1", "theta2"), ("r",)),
        _parametric(8, INTEGRABLE, ("z2", "z4+w2"), [
            _chart(("w2", "r", "theta1", "theta2"), {"z2": "0", "z4": "-w2"}, _nonzero("r"))]),
        _parametric(8, KAHLER, ("theta1", "theta2", "z2", "z4+w2"), [
            _chart(("w2", "r"), {"z2": "0", "z4": "-w2", "theta1": "0", "theta2": "0"}, _nonzero("r"))]),
        # g9
        _theta_free(9, ("z2", "z3", "z4", "theta1", "theta2"), ("z3", "z2")),
        _parametric(9, INTEGRABLE, ("z3+2*z2", "z4"), [
            _chart(("z2", "theta1", "theta2"), {"z3": "-2*z2", "z4": "0"}, _nonzero("z2"))]),
        _parametric(9, KAHLER, ("theta1", "theta2", "z3+2*z2", "z4"), [
            _chart(("z2",), {"z3": "-2*z2", "z4": "0", "theta1": "0", "theta2": "0"}, _nonzero("z2"))]),
        # g10
        _empty(10, ALMOST_KAHLER, _obstruction("alpha*b-a*beta",
                                               {THETA1_WITNESS: "beta/2", THETA2_WITNESS: "b/2"})),
        _whole(10, INTEGRABLE),
        _empty(10, KAHLER, _obstruction("alpha*b-a*beta",
                                        {THETA1_WITNESS: "beta/2", THETA2_WITNESS: "b/2"})),
        # g11
        _theta_free(11, ("z1", "z2", "z3", "w1", "theta1", "theta2"), ("z1",)),
        _empty(11, INTEGRABLE, _obstruction("z1^2+z2^2", {Z1_WITNESS: "z1/2", Z2_WITNESS: "z2/2"},
                                            terms=("z1", "z2")),
               notes=("the integrability paragraph concludes with the Kahler class where the "
                      "integrable class is meant; both are recorded empty",)),
        _empty(11, KAHLER, _obstruction("z1^2+z2^2", {Z1_WITNESS: "z1/2", Z2_WITNESS: "z2/2"},
                                        terms=("z1", "z2"))),
        # g12
        _theta_free(12, ("z3", "w1", "w2", "theta1", "theta2"), ("w1",)),
        _parametric(12, INTEGRABLE, ("z3+w1",), [
            _chart(("w1", "w2", "theta1", "theta2"), {"z3": "-w1"}, _nonzero("w1"))]),
        _parametric(12, KAHLER, ("theta1", "theta2", "z3+w1"), [
            _chart(("w1", "w2"), {"z3": "-w1", "theta1": "0", "theta2": "0"}, _nonzero("w1"))]),
        # g13
        _theta_free(13, ("z3", "z4", "theta1", "theta2"), ("z3",)),
        _empty(13, INTEGRABLE, _obstruction("z3", {Z2_WITNESS: "1"})),
        _empty(13, KAHLER, _obstruction("z3", {Z2_WITNESS: "1"})),
        # g14
        _theta_free(14, ("z2", "z4", "w2", "theta1", "theta2"), ()),
        _parametric(14, INTEGRABLE, ("z2", "z4+w2"), [
            _chart(("w2", "theta1", "theta2"), {"z2": "0", "z4": "-w2"})]),
        _parametric(14, KAHLER, ("theta1", "theta2", "z2", "z4+w2"), [
            _chart(("w2",), {"z2": "0", "z4": "-w2", "theta1": "0", "theta2": "0"})]),
        # g15
        _empty(15, ALMOST_KAHLER, _ALPHA_OBSTRUCTION),
        _parametric(15, INTEGRABLE, ("w1", "w2"), [
            _chart(("alpha",), zero_w, _nonzero("alpha"))]),
        _empty(15, KAHLER, _ALPHA_OBSTRUCTION),
        # g16
        _theta_free(16, ("beta", "w1", "w2", "theta1", "theta2"), ("beta",)),
        _parametric(16, INTEGRABLE, ("w1", "w2"), [
            _chart(("beta", "theta1", "theta2"), zero_w, _nonzero("beta"))]),
        _parametric(16, KAHLER, ("theta1", "theta2", "w1", "w2"), [
            _chart(("beta",), {"theta1": "0", "theta2": "0", **zero_w}, _nonzero("beta"))]),
        # g17
        _empty(17, ALMOST_KAHLER, _ALPHA_OBSTRUCTION),
        _parametric(17, INTEGRABLE, ("w1", "w2"), [
            _chart(("alpha", "a"), zero_w, _nonzero("alpha", "a"))],
            notes=(_INTEGRABLE_LABEL_NOTE,)),
        _empty(17, KAHLER, _ALPHA_OBSTRUCTION),
        # g18
        _theta_free(18, ("beta", "b", "z3", "z4", "theta1", "theta2"), ("beta", "b")),
        _parametric(18, INTEGRABLE, ("z3", "z4"), [
            _chart(("beta", "b", "theta1", "theta2"), {"z3": "0", "z4": "0"}, _nonzero("beta", "b"))]),
        _parametric(18, KAHLER, ("theta1", "theta2", "z3", "z4"), [
            _chart(("beta", "b"), {"z3": "0", "z4": "0", "theta1": "0", "theta2": "0"},
                   _nonzero("beta", "b"))]),
        # g19
        _empty(19, ALMOST_KAHLER, _ALPHA_OBSTRUCTION),
        _parametric(19, INTEGRABLE, ("w1", "w2"), [
            _chart(("alpha", "beta"), zero_w, _nonzero("alpha", "beta"))],
            notes=(_INTEGRABLE_LABEL_NOTE,)),
        _empty(19, KAHLER, _ALPHA_OBSTRUCTION),
        # g20
        _empty(20, ALMOST_KAHLER, _ALPHA_OBSTRUCTION),
        _parametric(20, INTEGRABLE, ("w1", "w2"), [
            _chart(("alpha", "a", "beta"), zero_w, _nonzero("alpha", "a", "beta"))]),
        _empty(20, KAHLER, _ALPHA_OBSTRUCTION),
    )


@lru_cache(maxsize=1)
def catalog() -> Catalog:
    """The twenty families and their sixty class claims (three per family)."""
    return Catalog(_build_families(), _build_claims())


def get_family(family_id: int, source: Optional[Catalog] = None) -> FamilySpec:
    return (source or catalog()).family(family_id)


def make_family(family_id: int, params: Mapping[str, Fraction],
                source: Optional[Catalog] = None) -> StructureConstants:
    """
    Numeric structure constants of a family member.

    Raises:
        DomainViolation: naming the violated constraint
        MissingBinding: for an unbound parameter
        UnknownFamily: for ids outside 1..20
    """
    return get_family(family_id, source).build(params)


def make_branch(family_id: int, cls: str, params: Mapping[str, Fraction],
                chart: Optional[str] = None, source: Optional[Catalog] = None) -> StructureConstants:
    """Numeric structure constants of a point of a parametric subfamily chart."""
    source = source or catalog()
    family = source.family(family_id)
    claim = source.claim(family_id, cls)
    if not claim.charts:
        raise UnknownChart(f"g{family_id} {cls} is {claim.outcome} and has no charts")
    selected = claim.chart(chart) if chart else claim.charts[0]
    return family.build(selected.family_assignment(family, params))
