# utils/parameter_sampler.py

import logging
import random
from fractions import Fraction
from typing import Callable, Dict, Sequence, Tuple

from families import Chart, DomainViolation, FamilySpec
from liealg import StructureConstants
from scalars import PARAMETER_NAMES, DivisionByZero


class SamplingExhausted(RuntimeError):
    """Rejection sampling found no admissible point within the attempt budget."""


class ParameterSampler:
    """Seeded source of exact rational parameter points p/q, p in [-20, 20], q in [1, 10]."""

    def __init__(self, seed: int = 0, numerator_bound: int = 20, max_denominator: int = 10,
                 max_attempts: int = 1000, zero_bias: float = 0.0):
        """
        Args:
            seed: seed of the private random.Random
            numerator_bound: numerators are drawn from [-bound, bound]
            max_denominator: denominators are drawn from [1, max_denominator]
            max_attempts: rejection budget per admissible point
            zero_bias: probability of drawing an exact zero (exercises degenerate cases)
        """
        self._random = random.Random(seed)
        self.numerator_bound = numerator_bound
        self.max_denominator = max_denominator
        self.max_attempts = max_attempts
        self.zero_bias = zero_bias
        self.logger = logging.getLogger(__name__)

    def rational(self) -> Fraction:
        if self.zero_bias and self._random.random() < self.zero_bias:
            return Fraction(0)
        return Fraction(
            self._random.randint(-self.numerator_bound, self.numerator_bound),
            self._random.randint(1, self.max_denominator),
        )

    def draw(self, names: Sequence[str]) -> Dict[str, Fraction]:
        return {name: self.rational() for name in names}

    def draw_valid(self, names: Sequence[str],
                   accept: Callable[[Dict[str, Fraction]], bool]) -> Dict[str, Fraction]:
        for _ in range(self.max_attempts):
            point = self.draw(names)
            if accept(point):
                return point
        self.logger.error(f"[ParameterSampler] No admissible point for {list(names)} "
                          f"after {self.max_attempts} attempts")
        raise SamplingExhausted(f"no admissible point after {self.max_attempts} attempts")

    def family_sample(self, family: FamilySpec) -> Tuple[Dict[str, Fraction], StructureConstants]:
        """An in-domain assignment of the family params and the algebra it builds."""
        built: Dict[str, StructureConstants] = {}

        def accept(point):
            try:
                built["sc"] = family.build(point)
            except (DomainViolation, DivisionByZero):
                return False
            return True
        point = self.draw_valid(family.param_names, accept)
        return point, built["sc"]

    def chart_sample(self, family: FamilySpec, chart: Chart) -> Tuple[Dict[str, Fraction], StructureConstants]:
        """A chart point mapped to family params; rejected when it leaves the family domain."""
        built: Dict[str, object] = {}

        def accept(point):
            try:
                mapped = chart.family_assignment(family, point)
                built["sc"] = family.build(mapped)
            except (DomainViolation, DivisionByZero):
                return False
            built["point"] = mapped
            return True
        self.draw_valid(chart.params, accept)
        return built["point"], built["sc"]

    def structure_constants(self) -> StructureConstants:
        return StructureConstants.from_mapping(self.draw(PARAMETER_NAMES))
