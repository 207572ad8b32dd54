"""Leading-order asymptotics of restricted partition counts and exact/asymptotic ratios."""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from mpmath import mp, mpf

from compoq.core.domain.exceptions import (
    InfeasibleComputationError,
    InvalidParameterError,
    UnknownNameError,
)
from compoq.core.domain.models import AsymptoticId, RatioRow
from compoq.core.services.partitions import colored_counts, partition_counts, rr_counts
from compoq.core.services.partsets import naturals_set, residue_set_sk
from compoq.core.services.qgen import named_gf

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 50
MAX_FEASIBLE_N = 100_000
RATIO_DIGITS = 6


@dataclass(frozen=True)
class AsymptoticFormula:
    """Closed-form leading term, positive and increasing for ``n >= monotone_from``."""

    identifier: AsymptoticId
    k: int | None
    evaluator: Callable[[mpf], mpf]
    monotone_from: int = 10


def _p_sk(k: int) -> Callable[[mpf], mpf]:
    m = k - 2

    def evaluate(n: mpf) -> mpf:
        return mp.csc(mp.pi / m) / (8 * n) * mp.exp(mp.pi * mp.sqrt(2 * n / m))

    return evaluate


def _partition(n: mpf) -> mpf:
    return mp.exp(mp.pi * mp.sqrt(2 * n / 3)) / (4 * n * mp.sqrt(3))


def _p3(n: mpf) -> mpf:
    return mp.exp(mp.pi * mp.sqrt(2 * n)) / (8 * mp.sqrt(2) * mp.power(n, mpf(3) / 2))


def _r(n: mpf) -> mpf:
    return mp.exp(2 * mp.pi * mp.sqrt(2 * n / 3)) / (12 * mp.sqrt(2) * mp.power(n, mpf(3) / 2))


def _s(n: mpf) -> mpf:
    return mp.exp(2 * mp.pi * mp.sqrt(n / 3)) / (6 * mp.power(n, mpf(3) / 2))


def _rr(n: mpf) -> mpf:
    # Lehner's constant, transcribed as published
    constant = 4 * mp.root(15, 4) * mp.sqrt((5 - mp.sqrt(5)) / 8)
    return mp.exp(2 * mp.pi * mp.sqrt(n / 15)) / (constant * mp.power(n, mpf(3) / 4))


def get_formula(identifier: AsymptoticId | str, k: int | None = None) -> AsymptoticFormula:
    """
    Look up an asymptotic formula.

    Raises:
        UnknownNameError: If the identifier is unknown
        InvalidParameterError: If ``p-sk`` is requested without ``k >= 5``
    """
    try:
        asymptotic_id = AsymptoticId(identifier)
    except ValueError as e:
        raise UnknownNameError(f"Unknown asymptotic formula: {identifier}") from e

    match asymptotic_id:
        case AsymptoticId.P_SK:
            if k is None or k < 5:
                raise InvalidParameterError(f"p-sk asymptotic needs k >= 5, got {k}")
            return AsymptoticFormula(asymptotic_id, k, _p_sk(k))
        case AsymptoticId.PARTITION:
            return AsymptoticFormula(asymptotic_id, None, _partition)
        case AsymptoticId.P3:
            return AsymptoticFormula(asymptotic_id, None, _p3)
        case AsymptoticId.R:
            return AsymptoticFormula(asymptotic_id, None, _r)
        case AsymptoticId.S:
            return AsymptoticFormula(asymptotic_id, None, _s)
        case AsymptoticId.RR:
            return AsymptoticFormula(asymptotic_id, None, _rr)


def asymptotic_value(
    identifier: AsymptoticId | str, n: int, k: int | None = None, digits: int = DEFAULT_DIGITS
) -> mpf:
    """Evaluate the leading term at ``n >= 1``."""
    if n < 1:
        raise InvalidParameterError(f"Asymptotic formulas need n >= 1, got {n}")
    formula = get_formula(identifier, k)
    with mp.workdps(digits):
        return formula.evaluator(mpf(n))


def exact_values(identifier: AsymptoticId | str, max_n: int, k: int | None = None) -> list[int]:
    """Exact counts ``0..max_n`` for the function an asymptotic formula describes."""
    formula = get_formula(identifier, k)
    match formula.identifier:
        case AsymptoticId.P_SK:
            assert formula.k is not None
            return partition_counts(residue_set_sk(formula.k, max(max_n, 1)), max_n)
        case AsymptoticId.PARTITION:
            return partition_counts(naturals_set(max(max_n, 1)), max_n)
        case AsymptoticId.P3:
            return colored_counts(max_n, 3)
        case AsymptoticId.R:
            return list(named_gf("r", max_n).coeffs)
        case AsymptoticId.S:
            return list(named_gf("s", max_n).coeffs)
        case AsymptoticId.RR:
            return rr_counts(max_n)


def ratio_report(
    identifier: AsymptoticId | str,
    n_values: Sequence[int],
    k: int | None = None,
    digits: int = DEFAULT_DIGITS,
    max_feasible_n: int = MAX_FEASIBLE_N,
) -> list[RatioRow]:
    """
    Exact value, asymptotic value and their ratio (6 significant figures) at each ``n``.

    Raises:
        InfeasibleComputationError: If an ``n`` exceeds ``max_feasible_n``
        InvalidParameterError: If an ``n`` is below 1 or the list is empty
    """
    if not n_values:
        raise InvalidParameterError("Need at least one n")
    if min(n_values) < 1:
        raise InvalidParameterError(f"Asymptotic ratios need n >= 1, got {min(n_values)}")
    top = max(n_values)
    if top > max_feasible_n:
        raise InfeasibleComputationError(
            f"Exact counts up to n={top} exceed the feasible limit {max_feasible_n}"
        )
    formula = get_formula(identifier, k)
    logger.info(f"Computing exact {formula.identifier.value} values through n={top}")
    exact = exact_values(identifier, top, k)
    rows = []
    with mp.workdps(digits):
        for n in n_values:
            approx = formula.evaluator(mpf(n))
            ratio = mpf(exact[n]) / approx
            rows.append(
                RatioRow(
                    n=n,
                    exact=exact[n],
                    asymptotic=float(approx),
                    ratio=float(mp.nstr(ratio, RATIO_DIGITS)),
                )
            )
    return rows
