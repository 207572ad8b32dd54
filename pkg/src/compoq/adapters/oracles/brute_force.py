"""Exhaustive composition enumeration oracle."""

import logging

from compoq.core.domain.exceptions import InfeasibleComputationError
from compoq.core.domain.models import PartSet, WeightRule
from compoq.core.domain.ports import ICompositionOracle
from compoq.core.services.compositions import weighted_sums_brute

logger = logging.getLogger(__name__)


class BruteForceCompositionOracle(ICompositionOracle):
    """
    Walks every composition explicitly.

    The number of compositions grows exponentially, so sizes above
    ``max_feasible_n`` are refused rather than attempted.
    """

    name = "composition_brute"

    def __init__(self, max_feasible_n: int = 40) -> None:
        self.max_feasible_n = max_feasible_n
        logger.debug(f"BruteForceCompositionOracle initialized (limit {max_feasible_n})")

    def weighted_sums(self, part_set: PartSet, rule: WeightRule, max_n: int) -> list[int]:
        if max_n > self.max_feasible_n:
            raise InfeasibleComputationError(
                f"Brute-force enumeration to n={max_n} exceeds the limit {self.max_feasible_n}"
            )
        logger.debug(f"Enumerating compositions into {part_set.name} up to n={max_n}")
        return weighted_sums_brute(part_set, rule, max_n)
