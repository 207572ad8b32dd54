"""Truncated Dirichlet series: composition zeta functions, Euler products and the Moebius function.

Coefficients are exact integers. Only ``comp_zeta_value`` and
``partition_zeta_value`` evaluate numerically, under ``mpmath`` at the
configured precision, and every value they report comes with a bound.
"""

import logging

import sympy
from mpmath import mp, mpf

from compoq.core.domain.exceptions import (
    BoundTooSmallError,
    DivergentSeriesError,
    InvalidParameterError,
)
from compoq.core.domain.models import DirichletCoeffs, PartSet, PartSetKind, ZetaEvaluation
from compoq.core.services.compositions import ordered_factorizations, signed_factorization_count

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 50
# sigma candidates per Rankin bound
RANKIN_GRID = 24


def _require_bound(bound: int) -> None:
    if bound < 1:
        raise InvalidParameterError(f"Dirichlet bound must be >= 1, got {bound}")


def _require_parts(part_set: PartSet, bound: int) -> None:
    if 1 in part_set:
        raise DivergentSeriesError(
            f"{part_set.name} contains 1: diverges, unbounded 1-multiplicity"
        )
    if not part_set.covers(bound):
        raise BoundTooSmallError(
            f"{part_set.name} is materialized to {part_set.bound}, Dirichlet bound is {bound}"
        )


def unit(bound: int) -> DirichletCoeffs:
    _require_bound(bound)
    return DirichletCoeffs((1,) + (0,) * (bound - 1))


def ones(bound: int) -> DirichletCoeffs:
    """Coefficients of the Riemann zeta function."""
    _require_bound(bound)
    return DirichletCoeffs((1,) * bound)


def dirichlet_mul(e: DirichletCoeffs, f: DirichletCoeffs) -> DirichletCoeffs:
    """Dirichlet convolution through the smaller of the two bounds."""
    bound = min(e.bound, f.bound)
    out = [0] * (bound + 1)
    for j in range(1, bound + 1):
        ej = e[j]
        if not ej:
            continue
        for k in range(1, bound // j + 1):
            out[j * k] += ej * f[k]
    return DirichletCoeffs(tuple(out[1:]))


def comp_zeta_coeffs(part_set: PartSet, z: int, bound: int) -> DirichletCoeffs:
    """
    Coefficients of ``1 / (1 - z * sum_{n in T} n^-s)`` through ``bound``.

    ``d(1) = 1`` and ``d(n) = z * sum_{k in T, k | n} d(n / k)``; pushing
    ``d(j)`` forward to every multiple ``j*k`` in increasing ``j`` keeps each
    ``d(j)`` final before it is used.

    Raises:
        DivergentSeriesError: If 1 is an allowed part
        BoundTooSmallError: If ``part_set`` is not materialized through ``bound``
    """
    _require_bound(bound)
    _require_parts(part_set, bound)
    d = [0] * (bound + 1)
    d[1] = 1
    parts = part_set.up_to(bound)
    for j in range(1, bound + 1):
        if not d[j]:
            continue
        step = z * d[j]
        for k in parts:
            if j * k > bound:
                break
            d[j * k] += step
    return DirichletCoeffs(tuple(d[1:]))


def comp_zeta_brute(part_set: PartSet, z: int, bound: int) -> DirichletCoeffs:
    """Same coefficients by enumerating ordered factorizations with factors in ``part_set``."""
    _require_bound(bound)
    _require_parts(part_set, bound)
    values = []
    for n in range(1, bound + 1):
        total = 0
        for factorization in ordered_factorizations(n):
            if all(part in part_set for part in factorization.parts):
                total += z**factorization.length
        values.append(total)
    return DirichletCoeffs(tuple(values))


def mobius_via_compositions(n: int) -> int:
    """``sum (-1)^length`` over ordered factorizations of ``n``."""
    return sum((-1) ** c.length for c in ordered_factorizations(n))


def mobius_by_factorization(n: int) -> int:
    """Moebius function from the prime factorization."""
    if n < 1:
        raise InvalidParameterError(f"Moebius function needs n >= 1, got {n}")
    exponents = sympy.factorint(n)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def mobius_table(max_n: int) -> list[tuple[int, int, int]]:
    """Rows ``(n, mu from signed factorization counts, mu from factoring)``."""
    _require_bound(max_n)
    return [
        (n, signed_factorization_count(n, -1), mobius_by_factorization(n))
        for n in range(1, max_n + 1)
    ]


def partition_norm_counts(part_set: PartSet, bound: int) -> DirichletCoeffs:
    """Number of partitions into parts of ``part_set`` with each norm ``1..bound``."""
    _require_bound(bound)
    _require_parts(part_set, bound)
    counts = [0] * (bound + 1)
    counts[1] = 1
    for t in part_set.up_to(bound):
        for m in range(1, bound // t + 1):
            counts[m * t] += counts[m]
    return DirichletCoeffs(tuple(counts[1:]))


def integral_tail(sigma: mpf, bound: int) -> mpf:
    """``int_bound^inf x^-sigma dx``, bounding ``sum_{n > bound} n^-sigma``."""
    return mp.power(bound, 1 - sigma) / (sigma - 1)


def _set_tail(part_set: PartSet, sigma: mpf, bound: int) -> mpf:
    if part_set.finite and part_set.bound <= bound:
        return mpf(0)
    return integral_tail(sigma, bound)


def _power_sum(part_set: PartSet, sigma: mpf, bound: int) -> mpf:
    """``sum_{n in T, n <= bound} n^-sigma``."""
    if part_set.kind is PartSetKind.NATURALS_STAR:
        return mp.zeta(sigma) - 1 - mp.zeta(sigma, bound + 1)
    return mp.fsum(mp.power(n, -sigma) for n in part_set.up_to(bound))


def _euler_product(part_set: PartSet, sigma: mpf, bound: int) -> mpf:
    return mp.fprod(1 / (1 - mp.power(n, -sigma)) for n in part_set.up_to(bound))


def _sigma_grid(s: mpf) -> list[mpf]:
    return [1 + (s - 1) * i / RANKIN_GRID for i in range(1, RANKIN_GRID + 1)]


def _rankin_composition(part_set: PartSet, abs_z: int, s: mpf, bound: int) -> mpf:
    """Bound on compositions with parts ``<= bound`` and norm above ``bound``.

    For any ``1 < sigma <= s`` with ``|z| h(sigma) < 1``, the omitted mass is
    at most ``bound^(sigma - s) / (1 - |z| h(sigma))``.
    """
    best = mp.inf
    for sigma in _sigma_grid(s):
        mass = abs_z * _power_sum(part_set, sigma, bound)
        if mass < 1:
            best = min(best, mp.power(bound, sigma - s) / (1 - mass))
    return best


def _rankin_partition(part_set: PartSet, s: mpf, bound: int) -> mpf:
    return min(
        mp.power(bound, sigma - s) * _euler_product(part_set, sigma, bound)
        for sigma in _sigma_grid(s)
    )


def _dirichlet_partial(coeffs: DirichletCoeffs, s: mpf) -> mpf:
    return mp.fsum(
        d * mp.power(n, -s) for n, d in enumerate(coeffs.values, start=1) if d
    )


def _check_s(s: float) -> None:
    if s <= 1:
        raise DivergentSeriesError(f"Dirichlet series need s > 1, got {s}")


def comp_zeta_value(
    part_set: PartSet, z: int, s: float, bound: int, digits: int = DEFAULT_DIGITS
) -> ZetaEvaluation:
    """
    Evaluate ``1 / (1 - z sum_{n in T} n^-s)`` two ways at truncation ``bound``.

    Args:
        part_set: Allowed factors, all ``>= 2``
        z: Weight per factor
        s: Real exponent ``> 1``
        bound: Truncation bound B for both the closed form and the Dirichlet sum
        digits: Working decimal precision

    Returns:
        Closed form over parts ``<= B``, partial Dirichlet sum over norms ``<= B``,
        their difference and its bound; when the full part-set sum is known in
        closed form (finite sets, ``N*``, primes) also the untruncated value

    Raises:
        DivergentSeriesError: If ``|z| sum n^-s`` may reach 1, if ``s <= 1`` or
            if 1 is an allowed part
    """
    _check_s(s)
    _require_bound(bound)
    _require_parts(part_set, bound)
    with mp.workdps(digits):
        s_mp = mpf(s)
        abs_z = abs(z)
        head = _power_sum(part_set, s_mp, bound)
        tail = _set_tail(part_set, s_mp, bound)
        if abs_z * (head + tail) >= 1:
            raise DivergentSeriesError(
                f"|z| * sum n^-s over {part_set.name} reaches {mp.nstr(abs_z * (head + tail), 8)}"
                f" at s={s}, z={z}: no convergent closed form"
            )
        closed = 1 / (1 - z * head)
        partial = _dirichlet_partial(comp_zeta_coeffs(part_set, z, bound), s_mp)
        difference = abs(closed - partial)
        tail_bound = _rankin_composition(part_set, abs_z, s_mp, bound)

        reference: mpf | None = None
        reference_error: mpf | None = None
        full_sum: mpf | None = None
        if part_set.finite and part_set.bound <= bound:
            full_sum = head
        elif part_set.kind is PartSetKind.NATURALS_STAR:
            full_sum = mp.zeta(s_mp) - 1
        elif part_set.kind is PartSetKind.PRIMES:
            full_sum = mp.primezeta(s_mp)
        if full_sum is not None:
            reference = 1 / (1 - z * full_sum)
            reference_error = abs_z * tail / ((1 - abs_z * head) * (1 - abs_z * (head + tail)))

        logger.info(
            f"comp zeta over {part_set.name}, z={z}, s={s}, B={bound}: "
            f"closed={mp.nstr(closed, 15)} partial={mp.nstr(partial, 15)}"
        )
        return ZetaEvaluation(
            bound=bound,
            s=s,
            closed_form=float(closed),
            partial_sum=float(partial),
            difference=float(difference),
            tail_bound=float(tail_bound),
            series_tail_bound=float(tail),
            reference=None if reference is None else float(reference),
            reference_error=None if reference_error is None else float(reference_error),
        )


def partition_zeta_value(
    part_set: PartSet, s: float, bound: int, digits: int = DEFAULT_DIGITS
) -> ZetaEvaluation:
    """
    Evaluate the Euler product ``prod_{n in T} (1 - n^-s)^-1`` at truncation ``bound``.

    The partial sum runs over partition norms ``<= bound`` from the
    multiplicative coin DP. For primes the untruncated value is ``zeta(s)``.

    Raises:
        DivergentSeriesError: If ``s <= 1`` or 1 is an allowed part
    """
    _check_s(s)
    _require_bound(bound)
    _require_parts(part_set, bound)
    with mp.workdps(digits):
        s_mp = mpf(s)
        closed = _euler_product(part_set, s_mp, bound)
        partial = _dirichlet_partial(partition_norm_counts(part_set, bound), s_mp)
        difference = abs(closed - partial)
        tail_bound = _rankin_partition(part_set, s_mp, bound)
        tail = _set_tail(part_set, s_mp, bound)

        reference: mpf | None = None
        reference_error: mpf | None = None
        if part_set.finite and part_set.bound <= bound:
            reference, reference_error = closed, mpf(0)
        elif part_set.kind is PartSetKind.PRIMES:
            reference = mp.zeta(s_mp)
            # sum_{p > B} -log(1 - p^-s) <= tail / (1 - B^-s)
            reference_error = closed * (mp.exp(tail / (1 - mp.power(bound, -s_mp))) - 1)

        logger.info(
            f"partition zeta over {part_set.name}, s={s}, B={bound}: "
            f"closed={mp.nstr(closed, 15)} partial={mp.nstr(partial, 15)}"
        )
        return ZetaEvaluation(
            bound=bound,
            s=s,
            closed_form=float(closed),
            partial_sum=float(partial),
            difference=float(difference),
            tail_bound=float(tail_bound),
            series_tail_bound=float(tail),
            reference=None if reference is None else float(reference),
            reference_error=None if reference_error is None else float(reference_error),
        )
