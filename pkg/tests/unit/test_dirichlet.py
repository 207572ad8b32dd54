"""Тесты рядов Дирихле и композиционных дзета-функций."""

import math

import pytest
import sympy

from compoq.core.domain.exceptions import (
    BoundTooSmallError,
    DivergentSeriesError,
    InvalidParameterError,
)
from compoq.core.domain.models import PartSet
from compoq.core.services.dirichlet import (
    comp_zeta_brute,
    comp_zeta_coeffs,
    comp_zeta_value,
    dirichlet_mul,
    mobius_by_factorization,
    mobius_table,
    mobius_via_compositions,
    ones,
    partition_norm_counts,
    partition_zeta_value,
    unit,
)
from compoq.core.services.partsets import explicit_set, naturals_set, primes_set


@pytest.fixture
def factors() -> PartSet:
    """Фикстура для множителей >= 2."""
    return naturals_set(200, minimum=2)


class TestCoefficients:
    """Тесты для точных коэффициентов Дирихле."""

    def test_signed_compositions_give_mobius(self) -> None:
        coeffs = comp_zeta_coeffs(naturals_set(60, minimum=2), -1, 60)
        assert list(coeffs.values) == [sympy.mobius(n) for n in range(1, 61)]

    def test_ordered_factorization_counts(self) -> None:
        coeffs = comp_zeta_coeffs(naturals_set(12, minimum=2), 1, 12)
        assert coeffs[12] == 8
        assert coeffs[1] == 1

    @pytest.mark.parametrize(
        ("values", "z"), [([2, 3, 5], 2), ([4, 6, 9, 10], -3), ([2], 1)]
    )
    def test_recurrence_matches_enumeration(self, values: list[int], z: int) -> None:
        part_set = explicit_set(values)
        assert comp_zeta_coeffs(part_set, z, 90) == comp_zeta_brute(part_set, z, 90)

    def test_mobius_inverts_zeta(self) -> None:
        mu = comp_zeta_coeffs(naturals_set(40, minimum=2), -1, 40)
        assert dirichlet_mul(ones(40), mu) == unit(40)

    def test_multiplicative_partitions(self) -> None:
        counts = partition_norm_counts(naturals_set(16, minimum=2), 16)
        assert counts[16] == 5
        assert counts[12] == 4

    def test_part_one_diverges(self) -> None:
        with pytest.raises(DivergentSeriesError, match="contains 1"):
            comp_zeta_coeffs(naturals_set(10), 1, 10)

    def test_bound_too_small(self) -> None:
        with pytest.raises(BoundTooSmallError):
            comp_zeta_coeffs(naturals_set(5, minimum=2), 1, 10)

    def test_invalid_bound(self) -> None:
        with pytest.raises(InvalidParameterError):
            unit(0)


class TestMobius:
    """Тесты для функции Мёбиуса."""

    @pytest.mark.parametrize(("n", "expected"), [(1, 1), (6, 1), (4, 0), (30, -1), (7, -1)])
    def test_known_values(self, n: int, expected: int) -> None:
        assert mobius_by_factorization(n) == expected
        assert mobius_via_compositions(n) == expected

    def test_table_agrees(self) -> None:
        assert all(a == b for _, a, b in mobius_table(200))

    def test_table_needs_positive_size(self) -> None:
        with pytest.raises(InvalidParameterError):
            mobius_table(0)

    @pytest.mark.slow
    def test_memoized_counts_to_5000(self) -> None:
        """Тест: знакопеременные разложения дают mu(n) для n <= 5000."""
        rows = mobius_table(5000)
        assert len(rows) == 5000
        assert all(memo == factored for _, memo, factored in rows)

    @pytest.mark.slow
    def test_enumerated_factorizations_to_500(self) -> None:
        assert all(
            mobius_via_compositions(n) == mobius_by_factorization(n) for n in range(1, 501)
        )


class TestZetaValues:
    """Тесты для численных значений с оценкой хвоста."""

    def test_all_factors_at_three(self, factors: PartSet) -> None:
        evaluation = comp_zeta_value(factors, 1, 3.0, 200)
        assert evaluation.within_bound
        assert evaluation.reference == pytest.approx(1.2533, abs=1e-3)
        assert evaluation.reference_error is not None
        assert abs(evaluation.reference - evaluation.closed_form) <= evaluation.reference_error

    @pytest.mark.slow
    @pytest.mark.parametrize("s", [3.0, 4.0])
    def test_all_factors_at_full_bound(self, s: float) -> None:
        """Тест: |1/(2 - zeta(s)) - частичная сумма| не превышает оценку хвоста при B = 10^4."""
        evaluation = comp_zeta_value(naturals_set(10_000, minimum=2), 1, s, 10_000)
        assert evaluation.within_bound
        assert evaluation.series_tail_bound > 0
        assert evaluation.reference is not None
        assert evaluation.reference == pytest.approx(1 / (2 - float(sympy.zeta(s))), rel=1e-9)

    def test_finite_set_is_exact(self) -> None:
        evaluation = comp_zeta_value(explicit_set([2, 3]), 1, 2.0, 50)
        assert evaluation.series_tail_bound == 0
        assert evaluation.reference == pytest.approx(1 / (1 - 1 / 4 - 1 / 9))
        assert evaluation.within_bound

    def test_primes_euler_product(self) -> None:
        evaluation = partition_zeta_value(primes_set(100), 2.0, 100)
        assert evaluation.within_bound
        assert evaluation.reference == pytest.approx(math.pi**2 / 6)
        assert evaluation.reference_error is not None
        assert abs(evaluation.reference - evaluation.closed_form) <= evaluation.reference_error

    def test_divergent_weight(self, factors: PartSet) -> None:
        with pytest.raises(DivergentSeriesError, match="reaches"):
            comp_zeta_value(factors, 1, 1.5, 200)

    def test_s_must_exceed_one(self, factors: PartSet) -> None:
        with pytest.raises(DivergentSeriesError, match="s > 1"):
            comp_zeta_value(factors, -1, 1.0, 200)
