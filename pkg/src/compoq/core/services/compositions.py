"""Compositions with restricted parts, weight rules and weighted composition sums."""

import logging
from collections.abc import Iterator, Mapping
from enum import Enum
from functools import lru_cache
from math import factorial, isqrt, prod

import sympy

from compoq.core.domain.exceptions import BoundTooSmallError, InvalidParameterError
from compoq.core.domain.models import Composition, PartSet, TruncatedSeries, WeightRule
from compoq.core.services.partitions import enumerate_partitions
from compoq.core.services.partsets import explicit_set, naturals_set, signed_indices

logger = logging.getLogger(__name__)


class WeightKind(str, Enum):
    """Named part statistics."""

    LENGTH = "length"
    LENGTH_Z = "length-z"
    STAR = "star"
    HAT = "hat"
    P3 = "p3"
    R = "r"
    S = "s"


def _require_covered(part_set: PartSet, n: int) -> None:
    if n < 0:
        raise InvalidParameterError(f"Size must be >= 0, got {n}")
    if not part_set.covers(n):
        raise BoundTooSmallError(
            f"{part_set.name} is materialized to {part_set.bound}, compositions of {n} need more"
        )


def _reachable(parts: tuple[int, ...], n: int) -> list[bool]:
    reachable = [False] * (n + 1)
    reachable[0] = True
    for total in range(1, n + 1):
        reachable[total] = any(reachable[total - m] for m in parts if m <= total)
    return reachable


def enumerate_compositions(part_set: PartSet, n: int) -> Iterator[Composition]:
    """
    Yield every composition of ``n`` into parts of ``part_set`` once, lexicographically.

    Raises:
        BoundTooSmallError: If ``part_set`` is not materialized through ``n``
    """
    _require_covered(part_set, n)
    parts = part_set.up_to(n)
    reachable = _reachable(parts, n)
    prefix: list[int] = []

    def descend(remaining: int) -> Iterator[Composition]:
        if remaining == 0:
            yield Composition(tuple(prefix))
            return
        for part in parts:
            if part > remaining:
                break
            if not reachable[remaining - part]:
                continue
            prefix.append(part)
            yield from descend(remaining - part)
            prefix.pop()

    yield from descend(n)


def composition_weight(composition: Composition, rule: WeightRule) -> int:
    """Product of part weights; the empty composition weighs 1."""
    return prod(rule.weight(part) for part in composition.parts)


def weighted_sum(part_set: PartSet, rule: WeightRule, n: int) -> int:
    """Sum of ``composition_weight`` over ``enumerate_compositions(part_set, n)``."""
    return sum(composition_weight(c, rule) for c in enumerate_compositions(part_set, n))


def weighted_sums_brute(part_set: PartSet, rule: WeightRule, max_n: int) -> list[int]:
    """Weighted sums for every size ``<= max_n`` from one depth-first walk.

    Every node of the walk is a composition (its prefix), so each composition
    of size at most ``max_n`` is visited exactly once.
    """
    _require_covered(part_set, max_n)
    # zero-weight parts only add zero-weight subtrees
    weighted = [(m, w) for m in part_set.up_to(max_n) if (w := rule.weight(m))]
    sums = [0] * (max_n + 1)

    def descend(size: int, weight: int) -> None:
        sums[size] += weight
        for part, w in weighted:
            if size + part > max_n:
                break
            descend(size + part, weight * w)

    descend(0, 1)
    return sums


def weighted_sums_dp(part_set: PartSet, rule: WeightRule, max_n: int) -> list[int]:
    """``d_0 = 1``, ``d_n = sum_{m in S, m <= n} w(m) d_(n-m)``."""
    _require_covered(part_set, max_n)
    weighted = [(m, w) for m in part_set.up_to(max_n) if (w := rule.weight(m))]
    sums = [0] * (max_n + 1)
    sums[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        for m, w in weighted:
            if m > n:
                break
            total += w * sums[n - m]
        sums[n] = total
    return sums


def _star_resolver(k: int) -> WeightRule:
    def resolve(part: int) -> int | None:
        indices = signed_indices(part, k - 2, k - 4)
        if not indices:
            return None
        return -1 if indices[0] % 4 in (0, 1) else 1

    return WeightRule(name=f"star-{k}", default=0, resolver=resolve)


def _hat_resolve(part: int) -> int | None:
    indices = signed_indices(part, 3, 1)
    if not indices:
        return None
    return -1 if indices[0] % 2 == 0 else 1


def _p3_resolve(part: int) -> int | None:
    root = isqrt(8 * part + 1)
    if root * root != 8 * part + 1:
        return None
    j = (root - 1) // 2
    return (2 * j + 1) if j % 2 else -(2 * j + 1)


def _r_resolve(part: int) -> int | None:
    indices = signed_indices(part, 3, 1)
    return 6 * indices[0] - 1 if indices else None


def _s_resolve(part: int) -> int | None:
    indices = signed_indices(part, 6, -4)
    return -(1 + 3 * indices[0]) if indices else None


def stat_weight(kind: WeightKind | str, k: int | None = None, z: int | None = None) -> WeightRule:
    """
    Weight rule whose product over parts reproduces a named statistic.

    Args:
        kind: Statistic name
        k: Odd polygonal order for ``star``
        z: Per-part weight for ``length-z``

    Returns:
        Rule for ``length`` (every part -1), ``length-z`` (every part z),
        ``star`` (-1 on ``P*_k``, +1 on the rest of ``P_k``), ``hat``
        (-1 on even-index pentagonal numbers, +1 on the rest of ``P_5``),
        or the integer weights ``p3``, ``r``, ``s``. Parts outside the
        family a rule is defined on weigh 0.

    Raises:
        InvalidParameterError: If the kind is unknown or a parameter is missing
    """
    try:
        weight_kind = WeightKind(kind)
    except ValueError as e:
        raise InvalidParameterError(f"Unknown weight kind: {kind}") from e

    match weight_kind:
        case WeightKind.LENGTH:
            return WeightRule(name="length", default=-1)
        case WeightKind.LENGTH_Z:
            if z is None:
                raise InvalidParameterError("length-z weight needs z")
            return WeightRule(name=f"length-z({z})", default=z)
        case WeightKind.STAR:
            if k is None or k < 5 or k % 2 == 0:
                raise InvalidParameterError(f"star weight needs odd k >= 5, got {k}")
            return _star_resolver(k)
        case WeightKind.HAT:
            return WeightRule(name="hat", default=0, resolver=_hat_resolve)
        case WeightKind.P3:
            return WeightRule(name="p3", default=0, resolver=_p3_resolve)
        case WeightKind.R:
            return WeightRule(name="r", default=0, resolver=_r_resolve)
        case WeightKind.S:
            return WeightRule(name="s", default=0, resolver=_s_resolve)


def lemma_weight(series: TruncatedSeries) -> WeightRule:
    """Weights ``-a_m / a_0`` on the support of ``series``.

    The coefficient of ``q^n`` in ``series_recip(series)`` is ``a_0`` times the
    weighted sum over compositions of ``n`` into the non-constant support.
    """
    a0 = series.coeffs[0]
    if a0 not in (1, -1):
        raise InvalidParameterError(f"Constant term must be a unit, got {a0}")
    overrides = {m: -a * a0 for m, a in series.nonzero_terms() if m}
    return WeightRule(name="lemma", default=0, overrides=overrides)


def lemma_coefficients(series: TruncatedSeries, max_n: int) -> list[int]:
    """Reciprocal coefficients evaluated as brute-force composition sums."""
    if max_n > series.order:
        raise BoundTooSmallError(f"Series known to q^{series.order}, asked for q^{max_n}")
    rule = lemma_weight(series)
    a0 = series.coeffs[0]
    if not rule.overrides:
        return [a0] + [0] * max_n
    support = explicit_set(rule.overrides, name="support")
    return [a0 * value for value in weighted_sums_brute(support, rule, max_n)]


def multinomial_count(composition: Composition) -> int:
    """Number of distinct rearrangements of the parts."""
    denominator = prod(factorial(m) for m in composition.multiplicities().values())
    return factorial(composition.length) // denominator


def symm_transfer_check(weights: Mapping[int, int], bound: int) -> bool:
    """
    Compare a multiplicative partition sum with its composition transfer.

    With ``g(lambda) = prod weights[part]`` (unlisted parts weigh 0) and
    ``g_hat(c) = g(c) * prod m_i! / length!``, checks
    ``sum_{|lambda| <= bound} g(lambda) == sum_{|c| <= bound} g_hat(c)``
    after multiplying both sides by ``bound!``.
    """
    if bound < 0:
        raise InvalidParameterError(f"Size bound must be >= 0, got {bound}")
    scale = factorial(bound)
    rule = WeightRule(name="transfer", default=0, overrides=dict(weights))

    partition_side = 0
    for n in range(bound + 1):
        for partition in enumerate_partitions(n):
            partition_side += prod(rule.weight(part) for part in partition.parts)

    composition_side = 0
    naturals = naturals_set(max(bound, 1))
    for n in range(bound + 1):
        for composition in enumerate_compositions(naturals, n):
            g = composition_weight(composition, rule)
            if not g:
                continue
            numerator = prod(factorial(m) for m in composition.multiplicities().values())
            composition_side += g * numerator * (scale // factorial(composition.length))

    logger.debug(f"Transfer check at bound {bound}: {partition_side * scale} vs {composition_side}")
    return partition_side * scale == composition_side


def ordered_factorizations(n: int) -> Iterator[Composition]:
    """
    Yield every ordered factorization of ``n`` into factors ``>= 2``.

    ``n = 1`` yields only the empty composition.

    Raises:
        InvalidParameterError: If ``n < 1``
    """
    if n < 1:
        raise InvalidParameterError(f"Ordered factorizations need n >= 1, got {n}")
    prefix: list[int] = []

    def descend(remaining: int) -> Iterator[Composition]:
        if remaining == 1:
            yield Composition(tuple(prefix))
            return
        for divisor in sympy.divisors(remaining)[1:]:
            prefix.append(int(divisor))
            yield from descend(remaining // divisor)
            prefix.pop()

    yield from descend(n)


@lru_cache(maxsize=None)
def signed_factorization_count(n: int, z: int = -1) -> int:
    """``sum over ordered factorizations of n of z^length``, memoized."""
    if n < 1:
        raise InvalidParameterError(f"Ordered factorizations need n >= 1, got {n}")
    if n == 1:
        return 1
    return z * sum(signed_factorization_count(n // d, z) for d in sympy.divisors(n)[1:])


def index_sign_weight(alpha: int, beta: int) -> WeightRule:
    """``-(-1)^j`` on the part with signed index ``j`` in ``R*_{alpha,beta}``.

    These are the weights ``-a_m`` read off ``f(-q^alpha, -q^beta)``;
    ``(1, 2)`` gives the ``hat`` rule.
    """
    d, e = alpha + beta, beta - alpha

    def resolve(part: int) -> int | None:
        indices = signed_indices(part, d, e)
        if not indices:
            return None
        return 1 if indices[0] % 2 else -1

    return WeightRule(name=f"index-sign({alpha},{beta})", default=0, resolver=resolve)
