"""Part sets: generalized polygonal numbers, residue classes and their signed subsets.

Every quadratic family here is the image of ``j -> j*(d*j - e)/2`` over the
non-zero integers (possibly restricted to some indices). Generation walks
``j = 1, -1, 2, -2, ...`` outwards until both branches pass the bound;
membership inverts the quadratic with an integer square root.
"""

import logging
from collections.abc import Callable, Iterable
from math import isqrt

import sympy

from compoq.core.domain.exceptions import InvalidParameterError, UnknownNameError
from compoq.core.domain.models import PartSet, PartSetKind

logger = logging.getLogger(__name__)

IndexFilter = Callable[[int], bool]


def quadratic_value(j: int, d: int, e: int) -> int:
    """``j*(d*j - e)/2``; the families used here keep the numerator even."""
    return j * (d * j - e) // 2


def signed_indices(value: int, d: int, e: int) -> list[int]:
    """All non-zero integers ``j`` with ``j*(d*j - e)/2 == value``."""
    if value < 1:
        return []
    disc = e * e + 8 * d * value
    root = isqrt(disc)
    if root * root != disc:
        return []
    return [num // (2 * d) for num in (e + root, e - root) if num != 0 and num % (2 * d) == 0]


def _quadratic_members(d: int, e: int, bound: int, keep: IndexFilter) -> tuple[int, ...]:
    values: set[int] = set()
    j = 1
    while True:
        plus, minus = quadratic_value(j, d, e), quadratic_value(-j, d, e)
        if plus > bound and minus > bound:
            break
        for index, value in ((j, plus), (-j, minus)):
            if 1 <= value <= bound and keep(index):
                values.add(value)
        j += 1
    return tuple(sorted(values))


def _quadratic_predicate(d: int, e: int, keep: IndexFilter) -> Callable[[int], bool]:
    def predicate(value: int) -> bool:
        return any(keep(j) for j in signed_indices(value, d, e))

    return predicate


def _any_index(_: int) -> bool:
    return True


def _star_index(j: int) -> bool:
    return j % 4 in (0, 1)


def _even_index(j: int) -> bool:
    return j % 2 == 0


def _positive_index(j: int) -> bool:
    return j > 0


def _require_bound(bound: int) -> None:
    if bound < 1:
        raise InvalidParameterError(f"Bound must be >= 1, got {bound}")


def _require_k(k: int, minimum: int) -> None:
    if k < minimum:
        raise InvalidParameterError(f"Polygonal order k must be >= {minimum}, got {k}")


def _require_pair(alpha: int, beta: int) -> None:
    if not 1 <= alpha < beta:
        raise InvalidParameterError(f"Need 1 <= alpha < beta, got ({alpha}, {beta})")
    if (alpha - beta) % 2:
        raise InvalidParameterError(f"alpha and beta must share parity, got ({alpha}, {beta})")


def _quadratic_set(
    name: str,
    kind: PartSetKind,
    d: int,
    e: int,
    bound: int,
    keep: IndexFilter = _any_index,
    params: tuple[int, ...] = (),
) -> PartSet:
    members = _quadratic_members(d, e, bound, keep)
    logger.debug(f"Materialized {name} up to {bound}: {len(members)} members")
    return PartSet(
        name=name,
        kind=kind,
        bound=bound,
        members=members,
        predicate=_quadratic_predicate(d, e, keep),
        params=params,
    )


def polygonal_set(k: int, bound: int) -> PartSet:
    """Generalized k-gonal numbers ``n((k-2)n - (k-4))/2``, n non-zero, up to ``bound``.

    Raises:
        InvalidParameterError: If ``k < 3`` or ``bound < 1``
    """
    _require_k(k, 3)
    _require_bound(bound)
    return _quadratic_set(f"P_{k}", PartSetKind.POLYGONAL, k - 2, k - 4, bound, params=(k,))


def polygonal_star_set(k: int, bound: int) -> PartSet:
    """Members of ``P_k`` whose signed index is ``0`` or ``1`` mod 4 (k odd, k >= 5).

    These are exactly the exponents with coefficient ``+1`` in ``f(q, -q^(k-3))``;
    every other member of ``P_k`` carries ``-1``.
    """
    _require_k(k, 5)
    if k % 2 == 0:
        raise InvalidParameterError(f"Starred polygonal sets need odd k, got {k}")
    _require_bound(bound)
    return _quadratic_set(
        f"P*_{k}", PartSetKind.POLYGONAL_STAR, k - 2, k - 4, bound, _star_index, (k,)
    )


def residue_set(modulus: int, residues: Iterable[int], bound: int, name: str = "") -> PartSet:
    """Positive integers ``<= bound`` lying in the given residue classes."""
    if modulus < 1:
        raise InvalidParameterError(f"Modulus must be >= 1, got {modulus}")
    _require_bound(bound)
    classes = frozenset(r % modulus for r in residues)
    members = tuple(n for n in range(1, bound + 1) if n % modulus in classes)
    return PartSet(
        name=name or f"{sorted(classes)} mod {modulus}",
        kind=PartSetKind.RESIDUE,
        bound=bound,
        members=members,
        predicate=lambda n: n >= 1 and n % modulus in classes,
        params=(modulus, *sorted(classes)),
    )


def residue_set_sk(k: int, bound: int) -> PartSet:
    """``n > 0`` with ``n = 0, 1, k-3 (mod k-2)``; parts counted by ``p_{S_k}``."""
    _require_k(k, 5)
    base = residue_set(k - 2, (0, 1, k - 3), bound, name=f"S_{k}")
    return PartSet(
        name=base.name,
        kind=PartSetKind.RESIDUE_SK,
        bound=bound,
        members=base.members,
        predicate=base.predicate,
        params=(k,),
    )


def pentagonal_hat_set(bound: int) -> PartSet:
    """Pentagonal numbers ``m(3m +- 1)/2`` with ``m`` even and positive."""
    _require_bound(bound)
    return _quadratic_set("P^_5", PartSetKind.PENTAGONAL_HAT, 3, 1, bound, _even_index)


def general_r_set(alpha: int, beta: int, bound: int) -> PartSet:
    """``n((alpha+beta)n + (alpha-beta))/2`` for non-zero ``n``; exponents of ``f(q^a, q^b)``."""
    _require_pair(alpha, beta)
    _require_bound(bound)
    return _quadratic_set(
        f"R*_{alpha},{beta}", PartSetKind.GENERAL_R, alpha + beta, beta - alpha, bound,
        params=(alpha, beta),
    )


def general_t_set(alpha: int, beta: int, bound: int) -> PartSet:
    """``n > 0`` with ``n = 0, +-alpha (mod alpha+beta)``."""
    _require_pair(alpha, beta)
    base = residue_set(alpha + beta, (0, alpha, -alpha), bound, name=f"T_{alpha},{beta}")
    return PartSet(
        name=base.name,
        kind=PartSetKind.GENERAL_T,
        bound=bound,
        members=base.members,
        predicate=base.predicate,
        params=(alpha, beta),
    )


def second_hexagonal_set(bound: int) -> PartSet:
    """Second hexagonal numbers ``n(2n+1)``, ``n >= 1``."""
    _require_bound(bound)
    return _quadratic_set("H2", PartSetKind.SECOND_HEXAGONAL, 4, -2, bound, _positive_index)


def u_set(bound: int) -> PartSet:
    """``j(3j+2)`` for non-zero ``j``: 1, 5, 8, 16, 21, 33, 40, ..."""
    _require_bound(bound)
    return _quadratic_set("U", PartSetKind.U, 6, -4, bound)


def naturals_set(bound: int, minimum: int = 1) -> PartSet:
    """All integers in ``[minimum, bound]``; ``minimum=2`` gives the Dirichlet part set."""
    _require_bound(bound)
    if minimum not in (1, 2):
        raise InvalidParameterError(f"Natural-number sets start at 1 or 2, got {minimum}")
    return PartSet(
        name="N" if minimum == 1 else "N*",
        kind=PartSetKind.NATURALS if minimum == 1 else PartSetKind.NATURALS_STAR,
        bound=bound,
        members=tuple(range(minimum, bound + 1)),
        predicate=lambda n: n >= minimum,
    )


def primes_set(bound: int) -> PartSet:
    """Primes up to ``bound``."""
    _require_bound(bound)
    return PartSet(
        name="primes",
        kind=PartSetKind.PRIMES,
        bound=bound,
        members=tuple(int(p) for p in sympy.primerange(2, bound + 1)),
        predicate=lambda n: n >= 2 and bool(sympy.isprime(n)),
    )


def explicit_set(values: Iterable[int], name: str = "") -> PartSet:
    """Finite part set, possibly empty; it covers every size."""
    members = tuple(sorted(set(values)))
    if members and members[0] < 1:
        raise InvalidParameterError(f"Parts must be positive, got {members[0]}")
    lookup = frozenset(members)
    return PartSet(
        name=name or "{" + ",".join(map(str, members)) + "}",
        kind=PartSetKind.EXPLICIT,
        bound=members[-1] if members else 0,
        members=members,
        predicate=lambda n: n in lookup,
        finite=True,
    )


def get_part_set(
    name: str,
    bound: int,
    *,
    k: int | None = None,
    alpha: int | None = None,
    beta: int | None = None,
    values: Iterable[int] | None = None,
) -> PartSet:
    """
    Build a part set by its registry name.

    Args:
        name: One of the ``PartSetKind`` values, or ``rr`` for ``+-1 mod 5``
        bound: Materialization bound
        k: Polygonal order for ``polygonal``, ``polygonal-star``, ``s-k``
        alpha: First exponent for ``r-ab`` and ``t-ab``
        beta: Second exponent for ``r-ab`` and ``t-ab``
        values: Members of an ``explicit`` set

    Raises:
        UnknownNameError: If the name is not registered
        InvalidParameterError: If a required parameter is missing or invalid
    """

    def need(value: int | None, label: str) -> int:
        if value is None:
            raise InvalidParameterError(f"Part set '{name}' needs --{label}")
        return value

    if name == "rr":
        return residue_set(5, (1, 4), bound, name="RR")
    try:
        kind = PartSetKind(name)
    except ValueError as e:
        raise UnknownNameError(f"Unknown part set: {name}") from e

    match kind:
        case PartSetKind.POLYGONAL:
            return polygonal_set(need(k, "k"), bound)
        case PartSetKind.POLYGONAL_STAR:
            return polygonal_star_set(need(k, "k"), bound)
        case PartSetKind.RESIDUE_SK:
            return residue_set_sk(need(k, "k"), bound)
        case PartSetKind.PENTAGONAL_HAT:
            return pentagonal_hat_set(bound)
        case PartSetKind.GENERAL_R:
            return general_r_set(need(alpha, "alpha"), need(beta, "beta"), bound)
        case PartSetKind.GENERAL_T:
            return general_t_set(need(alpha, "alpha"), need(beta, "beta"), bound)
        case PartSetKind.SECOND_HEXAGONAL:
            return second_hexagonal_set(bound)
        case PartSetKind.U:
            return u_set(bound)
        case PartSetKind.NATURALS:
            return naturals_set(bound)
        case PartSetKind.NATURALS_STAR:
            return naturals_set(bound, minimum=2)
        case PartSetKind.PRIMES:
            return primes_set(bound)
        case PartSetKind.EXPLICIT:
            if values is None:
                raise InvalidParameterError("Explicit part set needs --values")
            return explicit_set(values)
        case PartSetKind.RESIDUE:
            raise InvalidParameterError("Residue sets are built with residue_set()")
