"""Partition-side counts: coin-style DP and direct enumeration of decorated partitions."""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

from compoq.core.domain.exceptions import (
    BoundTooSmallError,
    InvalidParameterError,
    UnknownNameError,
)
from compoq.core.domain.models import PartitionMultiset, PartSet
from compoq.core.services.partsets import naturals_set, residue_set_sk
from compoq.core.services.qgen import named_gf

logger = logging.getLogger(__name__)

OVERPARTITION_ENUMERATION_LIMIT = 30


@dataclass(frozen=True)
class ColorClass:
    """One colour of a decorated partition."""

    name: str
    overlinable: bool = False
    modulus: int = 1


P3_PALETTE = (ColorClass("red"), ColorClass("yellow"), ColorClass("blue"))
OVERPARTITION_PALETTE = (ColorClass("plain", overlinable=True),)
# three-coloured overpartitions, blue parts never overlined
R_PALETTE = (
    ColorClass("red", overlinable=True),
    ColorClass("yellow", overlinable=True),
    ColorClass("blue"),
)
# yellow and blue parts are plain multiples of 4
S_PALETTE = (
    ColorClass("red", overlinable=True),
    ColorClass("yellow", modulus=4),
    ColorClass("blue", modulus=4),
)


def _require_size(n: int) -> None:
    if n < 0:
        raise InvalidParameterError(f"Size must be >= 0, got {n}")


def partition_counts(part_set: PartSet, max_n: int) -> list[int]:
    """
    ``p_S(n)`` for ``0 <= n <= max_n`` by one-dimensional coin DP.

    Raises:
        BoundTooSmallError: If ``part_set`` is not materialized through ``max_n``
    """
    _require_size(max_n)
    if not part_set.covers(max_n):
        raise BoundTooSmallError(
            f"{part_set.name} is materialized to {part_set.bound}, counting needs {max_n}"
        )
    counts = [1] + [0] * max_n
    for m in part_set.up_to(max_n):
        for n in range(m, max_n + 1):
            counts[n] += counts[n - m]
    return counts


def count_ps(part_set: PartSet, n: int) -> int:
    """Number of partitions of ``n`` with every part in ``part_set``."""
    return partition_counts(part_set, n)[n]


def enumerate_partitions(
    n: int, parts: Sequence[int] | None = None
) -> Iterator[PartitionMultiset]:
    """Partitions of ``n`` (into ``parts`` if given), largest part first."""
    _require_size(n)
    candidates = parts if parts is not None else range(1, n + 1)
    allowed = sorted({p for p in candidates if 1 <= p <= n}, reverse=True)
    prefix: list[int] = []

    def descend(remaining: int, start: int) -> Iterator[PartitionMultiset]:
        if remaining == 0:
            yield PartitionMultiset(tuple(prefix))
            return
        for index in range(start, len(allowed)):
            part = allowed[index]
            if part > remaining:
                continue
            prefix.append(part)
            yield from descend(remaining - part, index)
            prefix.pop()

    yield from descend(n, 0)


def pod_counts(max_n: int) -> list[int]:
    """Partitions with distinct odd parts: odd parts used at most once."""
    _require_size(max_n)
    counts = [1] + [0] * max_n
    for m in range(1, max_n + 1):
        if m % 2:
            for n in range(max_n, m - 1, -1):
                counts[n] += counts[n - m]
        else:
            for n in range(m, max_n + 1):
                counts[n] += counts[n - m]
    return counts


def count_pod(n: int) -> int:
    return pod_counts(n)[n]


def enumerate_pod(n: int) -> Iterator[PartitionMultiset]:
    """Partitions of ``n`` whose odd parts are pairwise distinct."""
    for partition in enumerate_partitions(n):
        odd = [p for p in partition.parts if p % 2]
        if len(odd) == len(set(odd)):
            yield partition


def enumerate_decorated(
    n: int, palette: Sequence[ColorClass]
) -> Iterator[PartitionMultiset]:
    """
    Colour-decorated partitions of ``n``.

    Each part carries a colour from ``palette``; a colour only takes multiples
    of its modulus, and in overlinable colours the first occurrence of each
    part value may be overlined.
    """
    _require_size(n)
    slots = [
        (value, color)
        for value in range(n, 0, -1)
        for color, cls in enumerate(palette)
        if value % cls.modulus == 0
    ]
    parts: list[int] = []
    overlined: list[bool] = []
    colors: list[int] = []

    def descend(remaining: int, index: int) -> Iterator[PartitionMultiset]:
        if remaining == 0:
            yield PartitionMultiset(tuple(parts), tuple(overlined), tuple(colors))
            return
        if index == len(slots):
            return
        value, color = slots[index]
        options = (False, True) if palette[color].overlinable else (False,)
        for multiplicity in range(remaining // value, 0, -1):
            for bar in options:
                parts.extend([value] * multiplicity)
                overlined.extend([bar] + [False] * (multiplicity - 1))
                colors.extend([color] * multiplicity)
                yield from descend(remaining - value * multiplicity, index + 1)
                del parts[-multiplicity:]
                del overlined[-multiplicity:]
                del colors[-multiplicity:]
        yield from descend(remaining, index + 1)

    yield from descend(n, 0)


def decorated_count(n: int, palette: Sequence[ColorClass]) -> int:
    return sum(1 for _ in enumerate_decorated(n, palette))


def count_overpartitions(n: int) -> int:
    """Overpartitions of ``n``: direct enumeration up to 30, the product form beyond."""
    _require_size(n)
    if n <= OVERPARTITION_ENUMERATION_LIMIT:
        return decorated_count(n, OVERPARTITION_PALETTE)
    return named_gf("overpartition", n)[n]


def colored_counts(max_n: int, colors: int) -> list[int]:
    """Coefficients of ``1/(q;q)^colors`` by repeated coin DP."""
    _require_size(max_n)
    if colors < 1:
        raise InvalidParameterError(f"Need at least one colour, got {colors}")
    counts = [1] + [0] * max_n
    for m in range(1, max_n + 1):
        for _ in range(colors):
            for n in range(m, max_n + 1):
                counts[n] += counts[n - m]
    return counts


def count_colored(n: int, colors: int) -> int:
    """Partitions of ``n`` with each part in one of ``colors`` colours."""
    return colored_counts(n, colors)[n]


def rr_counts(max_n: int) -> list[int]:
    """Partitions into parts congruent to 1 or 4 mod 5."""
    _require_size(max_n)
    counts = [1] + [0] * max_n
    for m in range(1, max_n + 1):
        if m % 5 in (1, 4):
            for n in range(m, max_n + 1):
                counts[n] += counts[n - m]
    return counts


def count_rr(n: int) -> int:
    return rr_counts(n)[n]


def enumerate_gap_partitions(n: int, gap: int = 2) -> Iterator[PartitionMultiset]:
    """Partitions of ``n`` into parts that pairwise differ by at least ``gap``."""
    _require_size(n)
    prefix: list[int] = []

    def descend(remaining: int, ceiling: int) -> Iterator[PartitionMultiset]:
        if remaining == 0:
            yield PartitionMultiset(tuple(prefix))
            return
        for part in range(min(remaining, ceiling), 0, -1):
            prefix.append(part)
            yield from descend(remaining - part, part - gap)
            prefix.pop()

    yield from descend(n, n)


def count_gap_partitions(n: int, gap: int = 2) -> int:
    return sum(1 for _ in enumerate_gap_partitions(n, gap))


class PartitionFunction(str, Enum):
    """Counting functions available as ``(n, value)`` tables."""

    PARTITION = "partition"
    PS = "ps"
    P_SK = "p-sk"
    POD = "pod"
    OVERPARTITION = "overpartition"
    COLORED = "colored"
    P3 = "p3"
    R = "r"
    S = "s"
    RR = "rr"
    GAP = "gap"


def partition_table(
    function: PartitionFunction | str,
    max_n: int,
    *,
    k: int | None = None,
    colors: int = 3,
    part_set: PartSet | None = None,
) -> list[int]:
    """
    Values ``0..max_n`` of a named counting function.

    Args:
        function: Counting function name
        max_n: Largest n
        k: Polygonal order for ``p-sk``
        colors: Number of colours for ``colored``
        part_set: Allowed parts for ``ps``

    Raises:
        UnknownNameError: If the function is unknown
        InvalidParameterError: If a required parameter is missing
    """
    try:
        kind = PartitionFunction(function)
    except ValueError as e:
        raise UnknownNameError(f"Unknown counting function: {function}") from e
    _require_size(max_n)
    logger.debug(f"Tabulating {kind.value} through n={max_n}")

    match kind:
        case PartitionFunction.PARTITION:
            return partition_counts(naturals_set(max(max_n, 1)), max_n)
        case PartitionFunction.PS:
            if part_set is None:
                raise InvalidParameterError("ps table needs a part set")
            return partition_counts(part_set, max_n)
        case PartitionFunction.P_SK:
            if k is None:
                raise InvalidParameterError("p-sk table needs k")
            return partition_counts(residue_set_sk(k, max(max_n, 1)), max_n)
        case PartitionFunction.POD:
            return pod_counts(max_n)
        case PartitionFunction.OVERPARTITION:
            return list(named_gf("overpartition", max_n).coeffs)
        case PartitionFunction.COLORED:
            return colored_counts(max_n, colors)
        case PartitionFunction.P3:
            return colored_counts(max_n, 3)
        case PartitionFunction.R | PartitionFunction.S:
            return list(named_gf(kind.value, max_n).coeffs)
        case PartitionFunction.RR:
            return rr_counts(max_n)
        case PartitionFunction.GAP:
            return [count_gap_partitions(n) for n in range(max_n + 1)]
