"""Ports (interfaces) for adapters."""

from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence
from typing import Any

from compoq.core.domain.models import PartSet, WeightRule


class ICompositionOracle(ABC):
    """Interface for computing weighted composition sums."""

    name: str

    @abstractmethod
    def weighted_sums(self, part_set: PartSet, rule: WeightRule, max_n: int) -> list[int]:
        """
        Weighted composition sums for every size up to ``max_n``.

        Args:
            part_set: Allowed parts, materialized at least up to ``max_n``
            rule: Per-part weight
            max_n: Largest size

        Returns:
            List whose entry ``n`` is the sum over compositions of ``n`` of
            the product of part weights (entry 0 is 1)

        Raises:
            BoundTooSmallError: If the part set is not materialized far enough
        """
        pass


class IReportWriter(ABC):
    """Interface for emitting results."""

    @abstractmethod
    def write_document(self, name: str, payload: Any) -> None:
        """Write a JSON-serializable document."""
        pass

    @abstractmethod
    def write_table(
        self, name: str, header: Sequence[str], rows: Iterable[Sequence[object]]
    ) -> None:
        """Write a table with a header row."""
        pass
