"""Convolution-recurrence oracle for weighted composition sums."""

import logging

from compoq.core.domain.models import PartSet, WeightRule
from compoq.core.domain.ports import ICompositionOracle
from compoq.core.services.compositions import weighted_sums_dp

logger = logging.getLogger(__name__)


class RecurrenceCompositionOracle(ICompositionOracle):
    """Conditions on the last part: ``d_n = sum_m w(m) d_(n-m)``."""

    name = "composition_dp"

    def weighted_sums(self, part_set: PartSet, rule: WeightRule, max_n: int) -> list[int]:
        return weighted_sums_dp(part_set, rule, max_n)
