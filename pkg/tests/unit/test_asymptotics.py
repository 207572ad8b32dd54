"""Тесты асимптотических формул."""

import pytest

from compoq.core.domain.exceptions import (
    InfeasibleComputationError,
    InvalidParameterError,
    UnknownNameError,
)
from compoq.core.domain.models import AsymptoticId
from compoq.core.services.asymptotics import (
    asymptotic_value,
    exact_values,
    get_formula,
    ratio_report,
)
from tests.fixtures import PARTITIONS_10

FORMULAS = [
    (AsymptoticId.P_SK, 5),
    (AsymptoticId.P_SK, 6),
    (AsymptoticId.P_SK, 7),
    (AsymptoticId.P_SK, 8),
    (AsymptoticId.PARTITION, None),
    (AsymptoticId.P3, None),
    (AsymptoticId.R, None),
    (AsymptoticId.S, None),
    (AsymptoticId.RR, None),
]


class TestFormulas:
    """Тесты для get_formula и asymptotic_value."""

    @pytest.mark.parametrize(("identifier", "k"), FORMULAS)
    def test_monotone(self, identifier: AsymptoticId, k: int | None) -> None:
        values = [asymptotic_value(identifier, n, k) for n in range(10, 200, 7)]
        assert all(a < b for a, b in zip(values, values[1:], strict=False))

    def test_p_sk_needs_k(self) -> None:
        with pytest.raises(InvalidParameterError, match="k >= 5"):
            get_formula("p-sk")

    def test_unknown(self) -> None:
        with pytest.raises(UnknownNameError):
            get_formula("plane")

    def test_n_must_be_positive(self) -> None:
        with pytest.raises(InvalidParameterError):
            asymptotic_value("p3", 0)

    def test_exact_values(self) -> None:
        assert exact_values("p3", 5) == [1, 3, 9, 22, 51, 108]
        assert exact_values("rr", 10) == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]
        assert exact_values("p-sk", 4, k=5) == [1, 1, 2, 3, 5]

    def test_partition_exact_values(self) -> None:
        assert exact_values("partition", 10) == list(PARTITIONS_10)

    @pytest.mark.parametrize("n", [1, 10, 100, 1000])
    def test_partition_is_pentagonal_case(self, n: int) -> None:
        """Тест: формула для p(n) совпадает с p-sk при k = 5."""
        assert asymptotic_value("partition", n) == pytest.approx(
            asymptotic_value("p-sk", n, 5), rel=1e-12
        )


class TestRatioReport:
    """Тесты для ratio_report."""

    def test_rows(self) -> None:
        rows = ratio_report("p3", [5, 50])
        assert [row.n for row in rows] == [5, 50]
        assert rows[0].exact == 108
        assert rows[1].ratio == pytest.approx(rows[1].exact / rows[1].asymptotic, rel=1e-5)

    def test_empty(self) -> None:
        with pytest.raises(InvalidParameterError, match="at least one"):
            ratio_report("p3", [])

    def test_non_positive(self) -> None:
        with pytest.raises(InvalidParameterError):
            ratio_report("p3", [0, 5])

    def test_infeasible(self) -> None:
        with pytest.raises(InfeasibleComputationError):
            ratio_report("p3", [500], max_feasible_n=100)

    @pytest.mark.slow
    @pytest.mark.parametrize(("identifier", "k"), FORMULAS)
    def test_band_and_trend(self, identifier: AsymptoticId, k: int | None) -> None:
        """Тест: отношение в полосе [0.8, 1.25] при n = 1000 и приближается к 1."""
        early, middle, late = ratio_report(identifier, [500, 1000, 2000], k)
        assert 0.8 <= middle.ratio <= 1.25
        assert abs(late.ratio - 1) <= abs(early.ratio - 1)
