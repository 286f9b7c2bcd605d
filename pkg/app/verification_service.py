# verification_service.py
"""
Symbolic and randomized verification of the family catalog.

Jacobi soundness and class membership are decided symbolically (identical
vanishing in the structure field). Tightness of parametric claims and
emptiness of empty claims are checked by seeded random sampling; empty claims
additionally carry a symbolic obstruction certificate.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional

from families import (
    EMPTY, NONZERO, PARAMETRIC, WHOLE, Catalog, Chart, DomainViolation, FamilySpec, SubfamilyClaim,
    catalog, catalog_expression,
)
from hermitian import CLASS_WITNESSES, class_witnesses, satisfies_class
from liealg import StructureConstants, jacobi_residuals_appendix
from scalars import (
    DivisionByZero, MissingBinding, Scalar, free_names, is_zero, mul, render, sub, substitute, total,
)
from utils.parameter_sampler import ParameterSampler, SamplingExhausted

# Family draws allowed per required off-subfamily sample.
TIGHTNESS_DRAW_FACTOR = 10


@dataclass
class VerificationReport:
    family_id: int
    cls: Optional[str] = None
    jacobi_ok: bool = True
    membership_ok: bool = True
    tightness_samples: int = 0
    subfamily_samples: int = 0
    failures: List[str] = field(default_factory=list)
    outcome: Optional[str] = None
    dimension: Optional[int] = None
    branches: Dict[str, int] = field(default_factory=dict)
    obstruction: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.jacobi_ok and self.membership_ok and not self.failures

    def to_json(self) -> Dict[str, object]:
        return {
            "family_id": self.family_id,
            "class": self.cls,
            "ok": self.ok,
            "jacobi_ok": self.jacobi_ok,
            "membership_ok": self.membership_ok,
            "tightness_samples": self.tightness_samples,
            "subfamily_samples": self.subfamily_samples,
            "outcome": self.outcome,
            "dimension": self.dimension,
            "branches": dict(self.branches),
            "obstruction": self.obstruction,
            "failures": list(self.failures),
            "notes": list(self.notes),
        }


def _format_point(point: Mapping[str, Fraction]) -> str:
    return ", ".join(f"{name}={value}" for name, value in point.items())


class VerificationService:
    """Runs the per-family and per-claim checks against a catalog."""

    def __init__(self, source: Optional[Catalog] = None, samples: int = 1000, seed: int = 0,
                 chart_samples: int = 100):
        """
        Args:
            source: catalog to verify (defaults to the built-in one)
            samples: random trials per claim for tightness and emptiness
            seed: base seed; every job derives its own seed from it
            chart_samples: random chart points checked against the family domain
        """
        self.catalog = source or catalog()
        self.samples = samples
        self.seed = seed
        self.chart_samples = chart_samples
        self._logger = logging.getLogger(__name__)

    def _sampler(self, family_id: int, salt: int) -> ParameterSampler:
        # Each job owns its sampler so results do not depend on scheduling.
        return ParameterSampler(seed=self.seed * 1000 + family_id * 10 + salt)

    # ------------------------------------------------------------------
    # Families
    # ------------------------------------------------------------------

    def verify_family_symbolic(self, family_id: int) -> VerificationReport:
        family = self.catalog.family(family_id)
        report = VerificationReport(family_id=family_id, dimension=len(family.param_names),
                                    notes=list(family.notes))
        declared = set(family.param_names)

        for constraint in family.constraints:
            stray = free_names(catalog_expression(constraint.expression)) - declared
            if stray:
                report.failures.append(f"constraint {constraint.describe()} uses undeclared {sorted(stray)}")

        try:
            sc = family.structure_constants()
        except DivisionByZero as exc:
            report.jacobi_ok = False
            report.failures.append(f"constructor undefined: {exc}")
            return report

        for key, value in sc.as_mapping().items():
            stray = free_names(value) - declared
            if stray:
                report.failures.append(f"entry {key} uses undeclared {sorted(stray)}")

        for index, residual in enumerate(jacobi_residuals_appendix(sc), start=1):
            if not is_zero(residual):
                report.jacobi_ok = False
                report.failures.append(f"Jacobi residual {index} = {render(residual)}")

        if report.ok:
            self._logger.info(f"[VerificationService] g{family_id}: Jacobi system vanishes identically")
        else:
            self._logger.warning(f"[VerificationService] g{family_id}: {len(report.failures)} failure(s)")
        return report

    # ------------------------------------------------------------------
    # Claims
    # ------------------------------------------------------------------

    def verify_subfamily(self, family_id: int, cls: str) -> VerificationReport:
        family = self.catalog.family(family_id)
        claim = self.catalog.claim(family_id, cls)
        report = VerificationReport(
            family_id=family_id,
            cls=cls,
            outcome=claim.outcome,
            dimension=claim.dimension(family),
            branches={branch or "main": max(chart.dimension for chart in charts)
                      for branch, charts in claim.branches().items()},
            notes=list(claim.notes),
        )
        if claim.obstruction is not None:
            report.obstruction = claim.obstruction.expression

        try:
            if claim.outcome == WHOLE:
                self._check_identically(report, family.structure_constants(), cls, "family")
            elif claim.outcome == PARAMETRIC:
                for chart in claim.charts:
                    self._check_chart(report, family, claim, chart)
            elif claim.outcome == EMPTY:
                self._check_obstruction(report, family, claim)
            else:
                report.failures.append(f"unknown outcome '{claim.outcome}'")
            self._check_tightness(report, family, claim)
        except (DivisionByZero, MissingBinding, SamplingExhausted) as exc:
            report.membership_ok = False
            report.failures.append(f"verification aborted: {exc}")

        if report.ok:
            self._logger.info(f"[VerificationService] g{family_id} {cls}: {claim.outcome} claim verified "
                              f"({report.tightness_samples} samples)")
        else:
            self._logger.warning(f"[VerificationService] g{family_id} {cls}: {report.failures[0]}")
        return report

    def _check_identically(self, report: VerificationReport, sc: StructureConstants,
                           cls: str, where: str) -> None:
        witnesses = class_witnesses(sc)
        for name in CLASS_WITNESSES[cls]:
            if not is_zero(witnesses[name]):
                report.membership_ok = False
                report.failures.append(f"{where}: witness {name} = {render(witnesses[name])}")

    def _check_chart(self, report: VerificationReport, family: FamilySpec,
                     claim: SubfamilyClaim, chart: Chart) -> None:
        where = f"chart {chart.name}"
        stray = {name for name in chart.params if name not in family.param_names}
        if stray:
            report.failures.append(f"{where}: params {sorted(stray)} are not family params")
        uncovered = set(family.param_names) - set(chart.params) - set(chart.substitution_map())
        if uncovered:
            report.failures.append(f"{where}: family params {sorted(uncovered)} are neither free nor substituted")
            return
        sc = chart.structure_constants(family)
        for index, residual in enumerate(jacobi_residuals_appendix(sc), start=1):
            if not is_zero(residual):
                report.jacobi_ok = False
                report.failures.append(f"{where}: Jacobi residual {index} = {render(residual)}")
        self._check_identically(report, sc, claim.cls, where)
        for condition in claim.conditions:
            restricted = chart.restrict(catalog_expression(condition))
            if not is_zero(restricted):
                report.membership_ok = False
                report.failures.append(f"{where}: condition {condition} restricts to {render(restricted)}")

        sampler = self._sampler(family.id, 7)
        for _ in range(self.chart_samples):
            point = sampler.draw_valid(chart.params, lambda p: _chart_defined(family, chart, p))
            mapped = chart.family_assignment(family, point)
            violated = family.violated_constraint(mapped)
            if violated is not None:
                report.membership_ok = False
                report.failures.append(f"{where}: point ({_format_point(point)}) leaves the family "
                                       f"domain ({violated.describe()})")
                break

    def _check_obstruction(self, report: VerificationReport, family: FamilySpec,
                           claim: SubfamilyClaim) -> None:
        obstruction = claim.obstruction
        if obstruction is None:
            report.failures.append("empty claim without an obstruction certificate")
            return
        sc = family.structure_constants()
        constraints = list(family.constraints)
        if obstruction.chart is not None:
            sc = obstruction.chart.structure_constants(family)
            constraints.extend(obstruction.chart.constraints)
        witnesses = class_witnesses(sc)

        allowed = CLASS_WITNESSES[claim.cls]
        for name, _ in obstruction.multipliers:
            if name not in allowed:
                report.failures.append(f"obstruction uses witness {name} outside class {claim.cls}")
                return

        combination = total(mul(catalog_expression(multiplier), witnesses[name])
                            for name, multiplier in obstruction.multipliers)
        target = catalog_expression(obstruction.expression)
        if obstruction.chart is not None:
            target = obstruction.chart.restrict(target)
        if not is_zero(sub(combination, target)):
            report.failures.append(f"obstruction identity fails: combination - ({obstruction.expression}) "
                                   f"= {render(sub(combination, target))}")
            return

        nonzero = [catalog_expression(c.expression) for c in constraints if c.relation == NONZERO]
        if obstruction.terms:
            squares = total(mul(catalog_expression(term), catalog_expression(term)) for term in obstruction.terms)
            if not is_zero(sub(catalog_expression(obstruction.expression), squares)):
                report.failures.append(f"{obstruction.expression} is not the sum of squares of "
                                       f"{list(obstruction.terms)}")
            elif not any(_matches_constraint(catalog_expression(term), nonzero) for term in obstruction.terms):
                report.failures.append(f"no square term of {obstruction.expression} is a nonzero constraint")
        elif not _matches_constraint(catalog_expression(obstruction.expression), nonzero):
            report.failures.append(f"{obstruction.expression} is not a nonzero domain constraint")

    def _expected(self, claim: SubfamilyClaim, conditions: List[Scalar], point: Mapping[str, Fraction]) -> bool:
        if claim.outcome == WHOLE:
            return True
        if claim.outcome == EMPTY:
            return False
        return all(substitute(condition, point) == 0 for condition in conditions)

    def _sample_agrees(self, report: VerificationReport, claim: SubfamilyClaim, point: Mapping[str, Fraction],
                       sc: StructureConstants, expected: bool) -> bool:
        if satisfies_class(sc, claim.cls) == expected:
            return True
        report.membership_ok = False
        report.failures.append(
            f"sample ({_format_point(point)}): class {claim.cls} "
            f"{'fails' if expected else 'holds'} against the claim"
        )
        return False

    def _check_tightness(self, report: VerificationReport, family: FamilySpec,
                         claim: SubfamilyClaim) -> None:
        """
        Predicate(class) must equal 'all conditions vanish' on random in-domain points.

        tightness_samples counts family points that must be classified by the claim's
        verdict: every point for whole and empty claims, points off the subfamily for
        parametric ones. Parametric claims additionally check samples // 4 chart points,
        counted in subfamily_samples.
        """
        sampler = self._sampler(family.id, {"AK": 1, "I": 2, "K": 3}.get(claim.cls, 0))
        conditions = [catalog_expression(condition) for condition in claim.conditions]
        charts = claim.charts if claim.outcome == PARAMETRIC else ()

        for index in range(self.samples // 4 if charts else 0):
            point, sc = sampler.chart_sample(family, charts[index % len(charts)])
            if not self._sample_agrees(report, claim, point, sc, self._expected(claim, conditions, point)):
                return
            report.subfamily_samples += 1

        budget = self.samples * TIGHTNESS_DRAW_FACTOR
        for _ in range(budget):
            if report.tightness_samples >= self.samples:
                return
            point, sc = sampler.family_sample(family)
            expected = self._expected(claim, conditions, point)
            if not self._sample_agrees(report, claim, point, sc, expected):
                return
            if claim.outcome == PARAMETRIC and expected:
                report.subfamily_samples += 1
            else:
                report.tightness_samples += 1
        if report.tightness_samples < self.samples:
            report.failures.append(f"only {report.tightness_samples} of {self.samples} samples fell off the "
                                   f"subfamily within {budget} draws")

    # ------------------------------------------------------------------

    def verify_all(self) -> List[VerificationReport]:
        reports = [self.verify_family_symbolic(family_id) for family_id in self.catalog.ids()]
        for family_id in self.catalog.ids():
            reports.extend(self.verify_subfamily(family_id, claim.cls)
                           for claim in self.catalog.claims_for(family_id))
        return reports


def _chart_defined(family: FamilySpec, chart: Chart, point: Mapping[str, Fraction]) -> bool:
    try:
        mapped = chart.family_assignment(family, point)
        for value in family.structure_constants().as_mapping().values():
            substitute(value, mapped)
    except (DomainViolation, DivisionByZero):
        return False
    return True


def _matches_constraint(value: Scalar, constraints: List[Scalar]) -> bool:
    return any(is_zero(sub(value, c)) or is_zero(sub(value, mul(-1, c))) for c in constraints)


def verify_family_symbolic(family_id: int, source: Optional[Catalog] = None) -> VerificationReport:
    return VerificationService(source).verify_family_symbolic(family_id)


def verify_subfamily(family_id: int, cls: str, source: Optional[Catalog] = None,
                     samples: int = 1000, seed: int = 0) -> VerificationReport:
    return VerificationService(source, samples=samples, seed=seed).verify_subfamily(family_id, cls)
