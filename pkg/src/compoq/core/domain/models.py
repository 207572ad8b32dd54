"""compoq domain models."""

from bisect import bisect_right
from collections import Counter
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from math import prod


class PartSetKind(str, Enum):
    """Families of part sets."""

    POLYGONAL = "polygonal"
    POLYGONAL_STAR = "polygonal-star"
    RESIDUE_SK = "s-k"
    PENTAGONAL_HAT = "pentagonal-hat"
    GENERAL_R = "r-ab"
    GENERAL_T = "t-ab"
    SECOND_HEXAGONAL = "second-hexagonal"
    U = "u"
    RESIDUE = "residue"
    NATURALS = "naturals"
    NATURALS_STAR = "naturals-star"
    PRIMES = "primes"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class PartSet:
    """Ascending set of positive integers materialized up to ``bound``.

    ``members`` lists every element of the set that is ``<= bound``.
    ``finite`` marks sets with no elements above ``bound`` at all, which
    can then serve any size. ``predicate`` answers membership for any
    integer independently of the materialized list.
    """

    name: str
    kind: PartSetKind
    bound: int
    members: tuple[int, ...]
    predicate: Callable[[int], bool] = field(compare=False, repr=False)
    params: tuple[int, ...] = ()
    finite: bool = False

    def __post_init__(self) -> None:
        """Validate ordering and range."""
        if self.bound < 0:
            raise ValueError(f"Bound must be non-negative, got {self.bound}")
        previous = 0
        for value in self.members:
            if value <= previous:
                raise ValueError(f"Members of {self.name} must be strictly increasing and >= 1")
            previous = value
        if self.members and self.members[-1] > self.bound:
            raise ValueError(f"Member {self.members[-1]} of {self.name} exceeds bound {self.bound}")

    def __contains__(self, value: object) -> bool:
        return isinstance(value, int) and self.predicate(value)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def covers(self, n: int) -> bool:
        """Whether every member ``<= n`` is materialized."""
        return self.finite or n <= self.bound

    def up_to(self, n: int) -> tuple[int, ...]:
        """Materialized members not exceeding ``n``."""
        return self.members[: bisect_right(self.members, n)]


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series with integer coefficients, known through ``q^order``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("A truncated series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"Coefficient q^{n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: list[int] | tuple[int, ...], order: int) -> "TruncatedSeries":
        """Pad with zeros or cut to exactly ``order + 1`` coefficients."""
        values = list(coeffs[: order + 1])
        values.extend([0] * (order + 1 - len(values)))
        return cls(tuple(values))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"Cannot extend a series known to q^{self.order} up to q^{order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def nonzero_terms(self) -> list[tuple[int, int]]:
        """``(exponent, coefficient)`` pairs with non-zero coefficient."""
        return [(n, c) for n, c in enumerate(self.coeffs) if c]

    def to_sparse_text(self) -> str:
        """Render as ``1 - q - q^2 + q^5 ...`` listing only non-zero terms."""
        pieces: list[str] = []
        for exponent, coefficient in self.nonzero_terms():
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class ProductFactor:
    """Infinite factor ``prod_{n>=0} (1 - coefficient * ratio^n * q^(first + n*step))^power``."""

    coefficient: int
    first: int
    step: int
    ratio: int = 1
    power: int = 1

    def __post_init__(self) -> None:
        if self.step < 1:
            raise ValueError(f"Product step must be >= 1, got {self.step}")
        if self.first < 0:
            raise ValueError(f"Product exponent must be >= 0, got {self.first}")


@dataclass(frozen=True)
class ProductSpec:
    """Finite list of infinite q-Pochhammer factors raised to an overall integer power."""

    factors: tuple[ProductFactor, ...]
    power: int = 1


@dataclass(frozen=True)
class ThetaSpec:
    """Ramanujan theta function ``f(a_sign*q^alpha, b_sign*q^beta)``."""

    alpha: int
    beta: int
    a_sign: int = 1
    b_sign: int = 1

    def __post_init__(self) -> None:
        if self.alpha < 1 or self.beta < 1:
            raise ValueError(f"Theta exponents must be >= 1, got ({self.alpha}, {self.beta})")
        if self.a_sign not in (1, -1) or self.b_sign not in (1, -1):
            raise ValueError("Theta signs must be +1 or -1")

    @property
    def label(self) -> str:
        a = "+" if self.a_sign == 1 else "-"
        b = "+" if self.b_sign == 1 else "-"
        return f"f({a}q^{self.alpha}, {b}q^{self.beta})"


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(part < 1 for part in self.parts):
            raise ValueError(f"Composition parts must be positive: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def norm(self) -> int:
        """Product of parts; the empty composition has norm 1."""
        return prod(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))


@dataclass(frozen=True)
class PartitionMultiset:
    """Partition with optional overlines and colours per part.

    Parts are stored non-increasing. ``overlined`` and ``colors`` are either
    empty or aligned with ``parts``.
    """

    parts: tuple[int, ...]
    overlined: tuple[bool, ...] = ()
    colors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(part < 1 for part in self.parts):
            raise ValueError(f"Partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:], strict=False)):
            raise ValueError(f"Partition parts must be non-increasing: {self.parts}")
        for label, decoration in (("overlined", self.overlined), ("colors", self.colors)):
            if decoration and len(decoration) != len(self.parts):
                raise ValueError(f"{label} must align with parts")

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class WeightRule:
    """Per-part integer weight.

    Lookup order: explicit ``overrides``, then ``resolver`` (which may
    decline with ``None``), then ``default``.
    """

    name: str
    default: int = 0
    overrides: Mapping[int, int] = field(default_factory=dict)
    resolver: Callable[[int], int | None] | None = field(default=None, compare=False, repr=False)

    def weight(self, part: int) -> int:
        if part in self.overrides:
            return self.overrides[part]
        if self.resolver is not None:
            resolved = self.resolver(part)
            if resolved is not None:
                return resolved
        return self.default


@dataclass(frozen=True)
class DirichletCoeffs:
    """Integer Dirichlet coefficients ``d(1), ..., d(bound)``."""

    values: tuple[int, ...]

    @property
    def bound(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.bound:
            raise IndexError(f"Dirichlet index {n} outside 1..{self.bound}")
        return self.values[n - 1]


class OracleMode(str, Enum):
    """Which composition oracles an identity check runs."""

    BRUTE = "brute"
    DP = "dp"
    BOTH = "both"


class IdentityId(str, Enum):
    """Verifiable identities."""

    EVEN_K = "even-k"
    ODD_K = "odd-k"
    POD = "pod"
    OVERPARTITION = "overpartition"
    POFN2 = "pofn2"
    GENERAL_AB = "general-ab"
    P3 = "p3"
    R = "r"
    S = "s"
    RR = "rr"
    JACOBI = "jacobi"
    TRIPLE_PRODUCT = "triple-product"
    ONO_ROBINS_7 = "ono-robins-7"
    ONO_ROBINS_9 = "ono-robins-9"
    MOBIUS = "mobius"


@dataclass(frozen=True)
class IdentityCase:
    """One identity at fixed parameters over ``0 <= n <= max_n``."""

    identity: IdentityId
    max_n: int
    brute_max_n: int
    oracle: OracleMode = OracleMode.BOTH
    k: int | None = None
    alpha: int | None = None
    beta: int | None = None

    def __post_init__(self) -> None:
        if self.max_n < 0 or self.brute_max_n < 0:
            raise ValueError("Verification ranges must be non-negative")


@dataclass(frozen=True)
class CellResult:
    """Values of every computation path at one ``n``."""

    n: int
    values: dict[str, int]
    tag: str = ""

    @property
    def passed(self) -> bool:
        return len(set(self.values.values())) <= 1


@dataclass
class IdentityReport:
    """Outcome of one identity check."""

    case: IdentityCase
    paths: list[str]
    cells: list[CellResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells)

    @property
    def failures(self) -> list[CellResult]:
        return [cell for cell in self.cells if not cell.passed]


class AsymptoticId(str, Enum):
    """Counting functions with a closed-form leading asymptotic."""

    P_SK = "p-sk"
    PARTITION = "partition"
    P3 = "p3"
    R = "r"
    S = "s"
    RR = "rr"


@dataclass(frozen=True)
class RatioRow:
    """Exact value against its asymptotic at one ``n``."""

    n: int
    exact: int
    asymptotic: float
    ratio: float


@dataclass(frozen=True)
class ZetaEvaluation:
    """Real evaluation of a truncated Dirichlet series against its closed form.

    ``tail_bound`` bounds ``|closed_form - partial_sum|`` when both are
    built from parts ``<= bound``. ``series_tail_bound`` bounds the
    contribution of parts above ``bound`` to the underlying part-set sum.
    ``reference`` is the untruncated closed form when one is available,
    within ``reference_error`` of ``closed_form``.
    """

    bound: int
    s: float
    closed_form: float
    partial_sum: float
    difference: float
    tail_bound: float
    series_tail_bound: float
    reference: float | None = None
    reference_error: float | None = None

    @property
    def within_bound(self) -> bool:
        return self.difference <= self.tail_bound
