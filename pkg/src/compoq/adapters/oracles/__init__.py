"""Оракулы для взвешенных сумм по композициям."""

from compoq.adapters.oracles.brute_force import BruteForceCompositionOracle
from compoq.adapters.oracles.recurrence import RecurrenceCompositionOracle

__all__ = ["BruteForceCompositionOracle", "RecurrenceCompositionOracle"]
