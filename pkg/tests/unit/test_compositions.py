"""Тесты композиций и весовых правил."""

import pytest
import sympy

from compoq.core.domain.exceptions import BoundTooSmallError, InvalidParameterError
from compoq.core.domain.models import Composition, PartSet, ThetaSpec, WeightRule
from compoq.core.services.compositions import (
    WeightKind,
    composition_weight,
    enumerate_compositions,
    index_sign_weight,
    lemma_coefficients,
    lemma_weight,
    multinomial_count,
    ordered_factorizations,
    signed_factorization_count,
    stat_weight,
    symm_transfer_check,
    weighted_sum,
    weighted_sums_brute,
    weighted_sums_dp,
)
from compoq.core.services.partsets import (
    explicit_set,
    naturals_set,
    pentagonal_hat_set,
    polygonal_set,
    u_set,
)
from compoq.core.services.powerseries import product_expand, series_recip
from compoq.core.services.qgen import EULER, RR_DENOMINATOR, named_gf, theta_sum


class TestEnumerateCompositions:
    """Тесты для enumerate_compositions."""

    def test_all_compositions_of_four(self) -> None:
        listed = [c.parts for c in enumerate_compositions(naturals_set(4), 4)]
        assert len(listed) == 8
        assert listed[0] == (1, 1, 1, 1)
        assert listed[-1] == (4,)
        assert listed == sorted(listed)

    def test_restricted_parts(self) -> None:
        listed = [c.parts for c in enumerate_compositions(polygonal_set(5, 3), 3)]
        assert listed == [(1, 1, 1), (1, 2), (2, 1)]

    def test_zero_has_empty_composition(self) -> None:
        assert [c.parts for c in enumerate_compositions(naturals_set(1), 0)] == [()]

    def test_unreachable_size(self) -> None:
        assert list(enumerate_compositions(explicit_set([2]), 5)) == []

    def test_bound_too_small(self) -> None:
        with pytest.raises(BoundTooSmallError):
            list(enumerate_compositions(naturals_set(3), 6))


class TestWeightedSums:
    """Тесты для весовых сумм по композициям."""

    def test_signed_length_on_triangular_parts(self) -> None:
        rule = stat_weight("length")
        assert weighted_sum(polygonal_set(3, 4), rule, 4) == 3

    def test_three_colour_weights(self) -> None:
        rule = stat_weight(WeightKind.P3)
        assert [rule.weight(m) for m in (1, 2, 3, 6)] == [3, 0, -5, 7]
        assert weighted_sums_dp(polygonal_set(3, 5), rule, 5) == [1, 3, 9, 22, 51, 108]

    @pytest.mark.parametrize(
        ("part_set", "kind", "k"),
        [
            (polygonal_set(5, 18), WeightKind.R, None),
            (u_set(18), WeightKind.S, None),
            (polygonal_set(7, 18), WeightKind.STAR, 7),
            (pentagonal_hat_set(18), WeightKind.HAT, None),
            (naturals_set(18), WeightKind.LENGTH, None),
        ],
    )
    def test_brute_matches_recurrence(
        self, part_set: PartSet, kind: WeightKind, k: int | None
    ) -> None:
        rule = stat_weight(kind, k=k)
        assert weighted_sums_brute(part_set, rule, 18) == weighted_sums_dp(part_set, rule, 18)

    def test_brute_matches_enumeration(self) -> None:
        parts = polygonal_set(5, 12)
        rule = stat_weight("r")
        sums = weighted_sums_brute(parts, rule, 12)
        assert sums == [weighted_sum(parts, rule, n) for n in range(13)]

    def test_composition_weight(self) -> None:
        rule = WeightRule(name="t", default=2, overrides={3: -1})
        assert composition_weight(Composition((3, 1, 3)), rule) == 2
        assert composition_weight(Composition(()), rule) == 1


class TestStatWeight:
    """Тесты для stat_weight."""

    def test_star_signs(self) -> None:
        rule = stat_weight("star", k=5)
        assert [rule.weight(m) for m in (1, 2, 4, 15, 22)] == [-1, 1, 0, -1, -1]

    def test_length_z(self) -> None:
        assert stat_weight("length-z", z=-2).weight(7) == -2

    def test_length_z_needs_z(self) -> None:
        with pytest.raises(InvalidParameterError, match="needs z"):
            stat_weight("length-z")

    def test_star_needs_odd_k(self) -> None:
        with pytest.raises(InvalidParameterError, match="odd k"):
            stat_weight("star", k=6)

    def test_unknown_kind(self) -> None:
        with pytest.raises(InvalidParameterError, match="Unknown weight"):
            stat_weight("volume")

    def test_index_sign_generalizes_hat(self) -> None:
        hat, index_sign = stat_weight("hat"), index_sign_weight(1, 2)
        assert all(hat.weight(m) == index_sign.weight(m) for m in range(1, 60))


class TestLemma:
    """Тесты для обращения ряда через композиции."""

    def test_lemma_weights(self) -> None:
        rule = lemma_weight(product_expand(EULER, 7))
        assert rule.overrides == {1: 1, 2: 1, 5: -1, 7: -1}

    def test_euler_reciprocal_counts_partitions(self) -> None:
        assert lemma_coefficients(product_expand(EULER, 15), 15) == list(
            named_gf("partition", 15).coeffs
        )

    def test_rr_reciprocal(self) -> None:
        denominator = product_expand(RR_DENOMINATOR, 20)
        assert lemma_coefficients(denominator, 20) == list(series_recip(denominator).coeffs)

    def test_constant_series(self) -> None:
        assert lemma_coefficients(product_expand(EULER, 0), 0) == [1]

    def test_order_too_small(self) -> None:
        with pytest.raises(BoundTooSmallError):
            lemma_coefficients(product_expand(EULER, 3), 5)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        ("k", "spec"),
        [
            (3, ThetaSpec(1, 3)),
            (4, ThetaSpec(1, 1)),
            (5, ThetaSpec(1, 2, a_sign=-1, b_sign=-1)),
        ],
    )
    def test_theta_reciprocal_by_brute_force(self, k: int, spec: ThetaSpec) -> None:
        """Тест: обращение тета-ряда с носителем P_k равно переборной сумме до n = 25."""
        theta = theta_sum(spec, 25)
        assert set(lemma_weight(theta).overrides) == set(polygonal_set(k, 25).members)
        assert lemma_coefficients(theta, 25) == list(series_recip(theta).coeffs)


class TestTransfer:
    """Тесты для перехода от разбиений к композициям."""

    def test_multinomial(self) -> None:
        assert multinomial_count(Composition((1, 1, 2))) == 3
        assert multinomial_count(Composition(())) == 1

    @pytest.mark.parametrize(
        "weights", [{1: 2, 2: -1, 3: 5}, {1: 1}, {2: 3, 5: -2}, {}]
    )
    def test_transfer_holds(self, weights: dict[int, int]) -> None:
        assert symm_transfer_check(weights, 8)


class TestFactorizations:
    """Тесты для упорядоченных разложений на множители."""

    def test_twelve(self) -> None:
        listed = list(ordered_factorizations(12))
        assert len(listed) == 8
        assert all(c.norm == 12 for c in listed)

    def test_one(self) -> None:
        assert [c.parts for c in ordered_factorizations(1)] == [()]

    def test_invalid(self) -> None:
        with pytest.raises(InvalidParameterError):
            list(ordered_factorizations(0))

    def test_signed_count_is_mobius(self) -> None:
        assert [signed_factorization_count(n) for n in (1, 6, 4, 30)] == [1, 1, 0, -1]
        assert all(
            signed_factorization_count(n) == sympy.mobius(n) for n in range(1, 80)
        )
