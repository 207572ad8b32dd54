"""Тесты именованных производящих функций и тета-функций."""

import pytest

from compoq.core.domain.exceptions import InvalidParameterError, UnknownNameError
from compoq.core.domain.models import ThetaSpec
from compoq.core.services.powerseries import negate_q, product_expand, series_recip
from compoq.core.services.qgen import (
    EULER_CUBE,
    ono_robins_product,
    ono_robins_sum,
    named_gf,
    rogers_ramanujan_sum,
    rr_piecewise_coefficient,
    rr_theta_factor,
    series_by_name,
    series_names,
    signed_sk_spec,
    theta_product,
    theta_sum,
)
from tests.fixtures import PARTITIONS_10, RR_PRODUCT_30


class TestTheta:
    """Тесты для тета-функций Рамануджана."""

    def test_phi(self) -> None:
        assert theta_sum(ThetaSpec(1, 1), 10).coeffs == (1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0)

    def test_psi(self) -> None:
        assert theta_sum(ThetaSpec(1, 3), 10).coeffs == (1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1)

    @pytest.mark.parametrize(
        "spec",
        [
            ThetaSpec(1, 1),
            ThetaSpec(1, 2, -1, -1),
            ThetaSpec(2, 3, -1, -1),
            ThetaSpec(1, 3, 1, -1),
            ThetaSpec(3, 5, -1, 1),
        ],
    )
    def test_sum_matches_product(self, spec: ThetaSpec) -> None:
        """Тест тройного произведения Якоби."""
        assert theta_sum(spec, 40) == theta_product(spec, 40)

    def test_jacobi_cube(self) -> None:
        expected = (1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9)
        assert series_by_name("jacobi", 10).coeffs == expected
        assert product_expand(EULER_CUBE, 10).coeffs == expected

    def test_rr_piecewise(self) -> None:
        factor = rr_theta_factor(80)
        assert all(factor[i] == rr_piecewise_coefficient(i) for i in range(81))


class TestNamedGeneratingFunctions:
    """Тесты для named_gf."""

    def test_partition(self) -> None:
        assert named_gf("partition", 10).coeffs == PARTITIONS_10

    def test_p_sk_at_five_is_partition(self) -> None:
        assert named_gf("p-sk", 10, k=5).coeffs == PARTITIONS_10

    @pytest.mark.parametrize(
        ("name", "expected"),
        [
            ("pod", (1, 1, 1, 2, 3, 4, 5)),
            ("overpartition", (1, 2, 4, 8, 14, 24, 40)),
            ("p3", (1, 3, 9, 22, 51, 108, 221)),
            ("rr", (1, 1, 1, 1, 2, 2, 3)),
        ],
    )
    def test_known_values(self, name: str, expected: tuple[int, ...]) -> None:
        assert named_gf(name, 6).coeffs == expected

    @pytest.mark.parametrize("k", [5, 6, 7, 8, 9])
    def test_signed_product_is_negated_series(self, k: int) -> None:
        """Тест: произведение для q -> -q совпадает с заменой переменной."""
        assert product_expand(signed_sk_spec(k), 30) == negate_q(named_gf("p-sk", 30, k=k))

    def test_rr_reciprocal(self) -> None:
        assert series_recip(named_gf("rr", 30)).coeffs == RR_PRODUCT_30

    def test_p_sk_needs_k(self) -> None:
        with pytest.raises(InvalidParameterError, match="needs k"):
            named_gf("p-sk", 10)
        with pytest.raises(InvalidParameterError, match="k >= 5"):
            named_gf("p-sk", 10, k=4)

    def test_unknown_name(self) -> None:
        with pytest.raises(UnknownNameError, match="nope"):
            named_gf("nope", 5)

    def test_negative_order(self) -> None:
        with pytest.raises(InvalidParameterError):
            named_gf("partition", -1)


class TestSumSides:
    """Тесты для суммовых сторон тождеств."""

    def test_rogers_ramanujan(self) -> None:
        assert rogers_ramanujan_sum(40) == named_gf("rr", 40)

    @pytest.mark.parametrize("modulus", [7, 9])
    def test_weighted_theta_sums(self, modulus: int) -> None:
        assert ono_robins_sum(modulus, 50) == ono_robins_product(modulus, 50)

    def test_unsupported_modulus(self) -> None:
        with pytest.raises(InvalidParameterError, match="7 and 9"):
            ono_robins_sum(8, 10)

    def test_series_names(self) -> None:
        names = series_names()
        assert "rr" in names
        assert "rogers-ramanujan" in names
        assert len(names) == len(set(names))

    def test_series_by_name_falls_through(self) -> None:
        assert series_by_name("partition", 10).coeffs == PARTITIONS_10
        with pytest.raises(UnknownNameError):
            series_by_name("missing", 5)
