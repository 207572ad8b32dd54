"""Named generating functions, theta functions and their product forms."""

import logging
from enum import Enum

from compoq.core.domain.exceptions import InvalidParameterError, UnknownNameError
from compoq.core.domain.models import ProductFactor, ProductSpec, ThetaSpec, TruncatedSeries
from compoq.core.services.powerseries import apply_binomial, pochhammer_factor, product_expand

logger = logging.getLogger(__name__)


class GeneratingFunction(str, Enum):
    """Product-side generating functions."""

    PARTITION = "partition"
    P_SK = "p-sk"
    POD = "pod"
    OVERPARTITION = "overpartition"
    P3 = "p3"
    R = "r"
    S = "s"
    RR = "rr"


def _require_order(order: int) -> None:
    if order < 0:
        raise InvalidParameterError(f"Truncation order must be >= 0, got {order}")


def _sign_power(sign: int, exponent: int) -> int:
    return 1 if sign == 1 or exponent % 2 == 0 else -1


def theta_sum(spec: ThetaSpec, order: int) -> TruncatedSeries:
    """
    Bilateral sum ``f(a, b) = sum_j a^(j(j+1)/2) b^(j(j-1)/2)``.

    Here ``a = +-q^alpha`` and ``b = +-q^beta``.

    Walks ``j = 0, 1, -1, 2, -2, ...`` until both branch exponents exceed ``order``.
    """
    _require_order(order)
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    j = 1
    while True:
        inside = False
        for index in (j, -j):
            tri_a = index * (index + 1) // 2
            tri_b = index * (index - 1) // 2
            exponent = spec.alpha * tri_a + spec.beta * tri_b
            if exponent <= order:
                inside = True
                coeffs[exponent] += _sign_power(spec.a_sign, tri_a) * _sign_power(
                    spec.b_sign, tri_b
                )
        if not inside:
            break
        j += 1
    return TruncatedSeries(tuple(coeffs))


def theta_product_spec(spec: ThetaSpec) -> ProductSpec:
    """``(-a, -b, ab; ab)_inf`` for ``a = a_sign*q^alpha``, ``b = b_sign*q^beta``."""
    step = spec.alpha + spec.beta
    ratio = spec.a_sign * spec.b_sign
    return ProductSpec(
        factors=(
            pochhammer_factor(spec.alpha, step, coefficient=-spec.a_sign, ratio=ratio),
            pochhammer_factor(spec.beta, step, coefficient=-spec.b_sign, ratio=ratio),
            pochhammer_factor(step, step, coefficient=ratio, ratio=ratio),
        )
    )


def theta_product(spec: ThetaSpec, order: int) -> TruncatedSeries:
    """Triple-product side of ``f(a, b)``; equals ``theta_sum`` coefficientwise."""
    return product_expand(theta_product_spec(spec), order)


def _qq(first: int = 1, step: int = 1, power: int = 1) -> ProductFactor:
    """``(q^first; q^step)_inf^power``."""
    return pochhammer_factor(first, step, power=power)


def _minus_qq(first: int = 1, step: int = 1, power: int = 1) -> ProductFactor:
    """``(-q^first; q^step)_inf^power``."""
    return pochhammer_factor(first, step, coefficient=-1, power=power)


def p_sk_spec(k: int) -> ProductSpec:
    """``1/(q, q^(k-3), q^(k-2); q^(k-2))_inf``, generating ``p_{S_k}(n)``."""
    if k < 5:
        raise InvalidParameterError(f"p_Sk needs k >= 5, got {k}")
    m = k - 2
    return ProductSpec(factors=(_qq(1, m), _qq(k - 3, m), _qq(m, m)), power=-1)


def signed_sk_spec(k: int) -> ProductSpec:
    """The ``q -> -q`` image of ``p_sk_spec(k)`` written as a product.

    Even k: ``1/(-q, -q^(k-3), q^(k-2); q^(k-2))``.
    Odd k: ``1/(-q, q^(k-3), -q^(k-2); -q^(k-2))``.
    """
    if k < 5:
        raise InvalidParameterError(f"p_Sk needs k >= 5, got {k}")
    m = k - 2
    if k % 2 == 0:
        return ProductSpec(factors=(_minus_qq(1, m), _minus_qq(k - 3, m), _qq(m, m)), power=-1)
    return ProductSpec(
        factors=(
            pochhammer_factor(1, m, coefficient=-1, ratio=-1),
            pochhammer_factor(k - 3, m, coefficient=1, ratio=-1),
            pochhammer_factor(m, m, coefficient=-1, ratio=-1),
        ),
        power=-1,
    )


_NAMED_SPECS: dict[GeneratingFunction, ProductSpec] = {
    GeneratingFunction.PARTITION: ProductSpec(factors=(_qq(power=-1),)),
    GeneratingFunction.POD: ProductSpec(factors=(_qq(1, 4), _qq(3, 4), _qq(4, 4)), power=-1),
    GeneratingFunction.OVERPARTITION: ProductSpec(factors=(_minus_qq(), _qq(power=-1))),
    GeneratingFunction.P3: ProductSpec(factors=(_qq(power=-3),)),
    GeneratingFunction.R: ProductSpec(factors=(_minus_qq(power=2), _qq(power=-3))),
    GeneratingFunction.S: ProductSpec(
        factors=(_minus_qq(), _qq(power=-1), _qq(4, 4, power=-2))
    ),
    GeneratingFunction.RR: ProductSpec(factors=(_qq(1, 5), _qq(4, 5)), power=-1),
}

POD_CLASSICAL = ProductSpec(factors=(_minus_qq(1, 2), _qq(2, 2, power=-1)))
EULER = ProductSpec(factors=(_qq(),))
EULER_CUBE = ProductSpec(factors=(_qq(power=3),))
RR_DENOMINATOR = ProductSpec(factors=(_qq(1, 5), _qq(4, 5)))
PSI_PRODUCT = ProductSpec(factors=(_qq(), _minus_qq(power=2)))
PHI_PRODUCT = ProductSpec(factors=(_qq(2, 2), _minus_qq(1, 2, power=2)))
ONO_ROBINS_7_PRODUCT = ProductSpec(factors=(_qq(power=5), _qq(2, 2, power=-2)))
ONO_ROBINS_9_PRODUCT = ProductSpec(factors=(_qq(power=2), _qq(4, 4, power=2), _qq(2, 2, power=-1)))


def named_spec(name: GeneratingFunction | str, k: int | None = None) -> ProductSpec:
    """Product spec behind ``named_gf``."""
    try:
        gf = GeneratingFunction(name)
    except ValueError as e:
        raise UnknownNameError(f"Unknown generating function: {name}") from e
    if gf is GeneratingFunction.P_SK:
        if k is None:
            raise InvalidParameterError("p-sk needs k")
        return p_sk_spec(k)
    return _NAMED_SPECS[gf]


def named_gf(name: GeneratingFunction | str, order: int, k: int | None = None) -> TruncatedSeries:
    """
    Expand a named generating function through ``q^order``.

    Args:
        name: Generating function name
        order: Truncation order N
        k: Polygonal order for ``p-sk``

    Raises:
        UnknownNameError: If the name is not registered
        InvalidParameterError: If ``k`` is missing or invalid for ``p-sk``
    """
    _require_order(order)
    spec = named_spec(name, k)
    logger.debug(f"Expanding {name} (k={k}) to order {order}")
    return product_expand(spec, order)


def jacobi_cube(order: int) -> TruncatedSeries:
    """Sum side ``sum_n (-1)^n (2n+1) q^(n(n+1)/2)`` of Jacobi's identity for ``(q;q)^3``."""
    _require_order(order)
    coeffs = [0] * (order + 1)
    n = 0
    while (exponent := n * (n + 1) // 2) <= order:
        coeffs[exponent] = (-1) ** n * (2 * n + 1)
        n += 1
    return TruncatedSeries(tuple(coeffs))


def rr_theta_factor(order: int) -> TruncatedSeries:
    """``f(-q^2, -q^3) = sum_j (-1)^j q^(j(5j-1)/2)``, the numerator of ``1/(q, q^4; q^5)``
    over ``1/(q;q)``."""
    return theta_sum(ThetaSpec(alpha=2, beta=3, a_sign=-1, b_sign=-1), order)


def rr_piecewise_coefficient(i: int) -> int:
    """Coefficient of ``q^i`` in ``rr_theta_factor`` read off two quadratic families.

    ``+1`` when ``i = 10j^2 +- j``, ``-1`` when ``i = 10j^2 +- 9j + 2``, else 0 (j >= 0).
    """
    j = 0
    while 10 * j * j - 9 * j <= i:
        if i in (10 * j * j + j, 10 * j * j - j):
            return 1
        if i in (10 * j * j + 9 * j + 2, 10 * j * j - 9 * j + 2):
            return -1
        j += 1
    return 0


def ono_robins_sum(modulus: int, order: int) -> TruncatedSeries:
    """Weighted theta sums whose product forms are eta quotients.

    ``modulus=7``: ``sum_j (1 - 6j) q^(j(3j-1)/2)`` against ``(q;q)^5 / (q^2;q^2)^2``.
    ``modulus=9``: ``sum_j (3j + 1) q^(j(3j+2))`` against ``(q;q)^2 (q^4;q^4)^2 / (q^2;q^2)``.
    """
    _require_order(order)
    if modulus == 7:
        def exponent_of(j: int) -> int:
            return j * (3 * j - 1) // 2

        def weight_of(j: int) -> int:
            return 1 - 6 * j
    elif modulus == 9:
        def exponent_of(j: int) -> int:
            return j * (3 * j + 2)

        def weight_of(j: int) -> int:
            return 3 * j + 1
    else:
        raise InvalidParameterError(f"Weighted theta sums exist for 7 and 9, got {modulus}")

    coeffs = [0] * (order + 1)
    coeffs[0] = weight_of(0)
    j = 1
    while exponent_of(j) <= order or exponent_of(-j) <= order:
        for index in (j, -j):
            if (exponent := exponent_of(index)) <= order:
                coeffs[exponent] += weight_of(index)
        j += 1
    return TruncatedSeries(tuple(coeffs))


def ono_robins_product(modulus: int, order: int) -> TruncatedSeries:
    if modulus == 7:
        return product_expand(ONO_ROBINS_7_PRODUCT, order)
    if modulus == 9:
        return product_expand(ONO_ROBINS_9_PRODUCT, order)
    raise InvalidParameterError(f"Weighted theta sums exist for 7 and 9, got {modulus}")


def rogers_ramanujan_sum(order: int) -> TruncatedSeries:
    """``sum_n q^(n^2) / (q;q)_n``, the gap-condition side of ``1/(q, q^4; q^5)``."""
    _require_order(order)
    total = [0] * (order + 1)
    n = 0
    while n * n <= order:
        term = [0] * (order + 1)
        term[n * n] = 1
        for i in range(1, n + 1):
            apply_binomial(term, 1, i, -1)
        total = [a + b for a, b in zip(total, term, strict=True)]
        n += 1
    return TruncatedSeries(tuple(total))


SERIES_EXTRAS = (
    "jacobi",
    "rr-theta",
    "psi",
    "phi",
    "euler",
    "ono-robins-7",
    "ono-robins-9",
    "rogers-ramanujan",
)


def series_names() -> list[str]:
    """Every name ``series_by_name`` accepts."""
    return [gf.value for gf in GeneratingFunction] + list(SERIES_EXTRAS)


def series_by_name(name: str, order: int, k: int | None = None) -> TruncatedSeries:
    """
    Named generating function or one of the theta/sum sides it is compared with.

    Raises:
        UnknownNameError: If the name is not registered
    """
    match name:
        case "jacobi":
            return jacobi_cube(order)
        case "rr-theta":
            return rr_theta_factor(order)
        case "psi":
            return theta_sum(ThetaSpec(1, 3), order)
        case "phi":
            return theta_sum(ThetaSpec(1, 1), order)
        case "euler":
            return product_expand(EULER, order)
        case "ono-robins-7":
            return ono_robins_sum(7, order)
        case "ono-robins-9":
            return ono_robins_sum(9, order)
        case "rogers-ramanujan":
            return rogers_ramanujan_sum(order)
        case _:
            return named_gf(name, order, k)
