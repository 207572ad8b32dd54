"""Truncated integer power series and infinite q-Pochhammer products."""

import logging

from compoq.core.domain.exceptions import (
    BoundTooSmallError,
    InvalidParameterError,
    NonInvertibleSeriesError,
)
from compoq.core.domain.models import PartSet, ProductFactor, ProductSpec, TruncatedSeries

logger = logging.getLogger(__name__)


def _common_order(a: TruncatedSeries, b: TruncatedSeries) -> int:
    return min(a.order, b.order)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = _common_order(a, b)
    return TruncatedSeries(tuple(a.coeffs[n] + b.coeffs[n] for n in range(order + 1)))


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = _common_order(a, b)
    return TruncatedSeries(tuple(a.coeffs[n] - b.coeffs[n] for n in range(order + 1)))


def series_scale(a: TruncatedSeries, factor: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(factor * c for c in a.coeffs))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller of the two orders."""
    order = _common_order(a, b)
    out = [0] * (order + 1)
    b_coeffs = b.coeffs
    for i, ai in enumerate(a.coeffs[: order + 1]):
        if not ai:
            continue
        for j in range(order + 1 - i):
            bj = b_coeffs[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(tuple(out))


def series_recip(a: TruncatedSeries) -> TruncatedSeries:
    """
    Multiplicative inverse over the integers.

    Uses ``b_0 = a_0`` and ``b_n = -a_0 * sum_{k=1..n} a_k b_{n-k}``, iterating
    only over the non-zero coefficients of ``a``.

    Raises:
        NonInvertibleSeriesError: If ``a_0`` is not ``+1`` or ``-1``
    """
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonInvertibleSeriesError(
            f"Constant term {a0} is not a unit; the inverse has non-integer coefficients"
        )
    support = [(k, ak) for k, ak in enumerate(a.coeffs) if k and ak]
    out = [0] * (a.order + 1)
    out[0] = a0
    for n in range(1, a.order + 1):
        total = 0
        for k, ak in support:
            if k > n:
                break
            total += ak * out[n - k]
        out[n] = -a0 * total
    return TruncatedSeries(tuple(out))


def series_pow(a: TruncatedSeries, exponent: int) -> TruncatedSeries:
    """Integer power; negative exponents go through ``series_recip``."""
    base = series_recip(a) if exponent < 0 else a
    remaining = abs(exponent)
    result = TruncatedSeries.one(a.order)
    while remaining:
        if remaining & 1:
            result = series_mul(result, base)
        remaining >>= 1
        if remaining:
            base = series_mul(base, base)
    return result


def negate_q(a: TruncatedSeries) -> TruncatedSeries:
    """Substitute ``q -> -q``."""
    return TruncatedSeries(tuple(-c if n % 2 else c for n, c in enumerate(a.coeffs)))


def apply_binomial(
    coeffs: list[int], coefficient: int, exponent: int, power: int
) -> list[int]:
    """
    Multiply in place by ``(1 - coefficient * q^exponent)^power``.

    Positive powers multiply, negative powers divide by the geometric
    inverse; each unit step is linear in the length.

    Raises:
        NonInvertibleSeriesError: If ``exponent == 0`` and ``1 - coefficient``
            is not a unit while ``power < 0``
    """
    order = len(coeffs) - 1
    if exponent == 0:
        constant = 1 - coefficient
        if power < 0 and constant not in (1, -1):
            raise NonInvertibleSeriesError(
                f"Constant factor {constant} cannot be inverted over the integers"
            )
        scale = constant ** abs(power)
        for n in range(order + 1):
            coeffs[n] *= scale
        return coeffs
    if exponent > order or not coefficient:
        return coeffs
    for _ in range(abs(power)):
        if power > 0:
            for n in range(order, exponent - 1, -1):
                coeffs[n] -= coefficient * coeffs[n - exponent]
        else:
            for n in range(exponent, order + 1):
                coeffs[n] += coefficient * coeffs[n - exponent]
    return coeffs


def pochhammer_factor(
    first: int, step: int, *, coefficient: int = 1, ratio: int = 1, power: int = 1
) -> ProductFactor:
    """``(coefficient * q^first; ratio * q^step)_inf`` raised to ``power``."""
    return ProductFactor(
        coefficient=coefficient, first=first, step=step, ratio=ratio, power=power
    )


def product_expand(spec: ProductSpec, order: int) -> TruncatedSeries:
    """
    Expand a product of infinite q-Pochhammer factors through ``q^order``.

    Factors whose exponent exceeds ``order`` contribute 1 and are skipped.

    Args:
        spec: Factors and the overall power
        order: Truncation order N

    Returns:
        Series with exactly ``order + 1`` coefficients

    Raises:
        InvalidParameterError: If ``order < 0``
        NonInvertibleSeriesError: If a constant factor cannot be inverted
    """
    if order < 0:
        raise InvalidParameterError(f"Truncation order must be >= 0, got {order}")
    coeffs = [1] + [0] * order
    for factor in spec.factors:
        power = factor.power * spec.power
        if not power:
            continue
        n = 0
        while (exponent := factor.first + n * factor.step) <= order:
            apply_binomial(coeffs, factor.coefficient * factor.ratio**n, exponent, power)
            n += 1
    return TruncatedSeries(tuple(coeffs))


def phi_series(part_set: PartSet, z: int, order: int) -> TruncatedSeries:
    """``1 - z * sum_{m in S, m <= order} q^m``.

    Raises:
        BoundTooSmallError: If ``part_set`` is not materialized through ``order``
    """
    if not part_set.covers(order):
        raise BoundTooSmallError(
            f"{part_set.name} is materialized to {part_set.bound}, series needs {order}"
        )
    coeffs = [1] + [0] * order
    for m in part_set.up_to(order):
        coeffs[m] -= z
    return TruncatedSeries(tuple(coeffs))


def composition_gf(part_set: PartSet, z: int, order: int) -> TruncatedSeries:
    """Bivariate composition generating function ``1 / (1 - z * sum_{m in S} q^m)`` at fixed z.

    Coefficient ``n`` is ``sum over compositions of n into S of z^length``.
    """
    return series_recip(phi_series(part_set, z, order))
