"""Сервис проверки тождеств между разбиениями, рядами и композициями."""

import asyncio
import logging
from collections.abc import Callable, Sequence
from itertools import product
from typing import Any

from compoq.core.domain.exceptions import InvalidParameterError
from compoq.core.domain.models import (
    CellResult,
    IdentityCase,
    IdentityId,
    IdentityReport,
    OracleMode,
    PartSet,
    ProductSpec,
    ThetaSpec,
    TruncatedSeries,
    WeightRule,
)
from compoq.core.domain.ports import ICompositionOracle
from compoq.core.services.compositions import (
    WeightKind,
    index_sign_weight,
    lemma_weight,
    signed_factorization_count,
    stat_weight,
)
from compoq.core.services.dirichlet import (
    comp_zeta_coeffs,
    mobius_by_factorization,
    mobius_via_compositions,
)
from compoq.core.services.partitions import (
    OVERPARTITION_PALETTE,
    P3_PALETTE,
    R_PALETTE,
    S_PALETTE,
    colored_counts,
    count_gap_partitions,
    decorated_count,
    enumerate_pod,
    partition_counts,
    pod_counts,
    rr_counts,
)
from compoq.core.services.partsets import (
    explicit_set,
    general_r_set,
    general_t_set,
    naturals_set,
    polygonal_set,
    residue_set_sk,
    u_set,
)
from compoq.core.services.powerseries import pochhammer_factor, product_expand, series_recip
from compoq.core.services.qgen import (
    EULER,
    EULER_CUBE,
    PHI_PRODUCT,
    POD_CLASSICAL,
    PSI_PRODUCT,
    RR_DENOMINATOR,
    GeneratingFunction,
    jacobi_cube,
    named_gf,
    ono_robins_product,
    ono_robins_sum,
    rogers_ramanujan_sum,
    rr_theta_factor,
    signed_sk_spec,
    theta_product,
    theta_sum,
)

logger = logging.getLogger(__name__)

Paths = dict[str, list[int]]

DEFAULT_EVEN_K = (6, 8, 10, 12)
DEFAULT_ODD_K = (5, 7, 9)
DEFAULT_AB_PAIRS = ((1, 3), (1, 5), (2, 4), (3, 5))


def _signed(values: Sequence[int]) -> list[int]:
    """Multiply entry ``n`` by ``(-1)^n``."""
    return [-v if n % 2 else v for n, v in enumerate(values)]


def _reciprocal(series: TruncatedSeries) -> list[int]:
    return list(series_recip(series).coeffs)


def _cells(paths: Paths, start: int, stop: int, tag: str = "") -> list[CellResult]:
    return [
        CellResult(
            n=n,
            values={name: values[n] for name, values in paths.items() if n < len(values)},
            tag=tag,
        )
        for n in range(start, stop + 1)
    ]


class IdentityVerificationService:
    """
    Сервис проверки тождеств.

    Каждое тождество считается несколькими независимыми путями:
    1. Подсчёт разбиений (DP или прямой перебор)
    2. Коэффициенты производящей функции (произведение)
    3. Обращение тета-функции
    4. Взвешенные суммы по композициям (рекуррентный и переборный оракулы)

    Ячейка (тождество, n) проходит, только если все пути дают одно и то же целое.
    """

    def __init__(
        self,
        brute_oracle: ICompositionOracle,
        dp_oracle: ICompositionOracle,
        *,
        brute_max_n: int = 25,
        enumeration_max_n: int = 30,
        decorated_max_n: int = 15,
        factorization_brute_max_n: int = 500,
        oracle: OracleMode = OracleMode.BOTH,
    ) -> None:
        """
        Инициализация сервиса.

        Args:
            brute_oracle: Оракул полного перебора композиций
            dp_oracle: Рекуррентный оракул
            brute_max_n: Граница перебора композиций по умолчанию
            enumeration_max_n: Граница прямого перебора разбиений и надразбиений
            decorated_max_n: Граница перебора раскрашенных разбиений
            factorization_brute_max_n: Граница перебора упорядоченных разложений
            oracle: Режим оракулов по умолчанию
        """
        self.brute_oracle = brute_oracle
        self.dp_oracle = dp_oracle
        self.brute_max_n = brute_max_n
        self.enumeration_max_n = enumeration_max_n
        self.decorated_max_n = decorated_max_n
        self.factorization_brute_max_n = factorization_brute_max_n
        self.oracle = oracle
        self._handlers: dict[IdentityId, Callable[[IdentityCase], IdentityReport]] = {
            IdentityId.EVEN_K: self._even_k,
            IdentityId.ODD_K: self._odd_k,
            IdentityId.POD: self._pod,
            IdentityId.OVERPARTITION: self._overpartition,
            IdentityId.POFN2: self._pofn2,
            IdentityId.GENERAL_AB: self._general_ab,
            IdentityId.P3: self._p3,
            IdentityId.R: self._r,
            IdentityId.S: self._s,
            IdentityId.RR: self._rr,
            IdentityId.JACOBI: self._jacobi,
            IdentityId.TRIPLE_PRODUCT: self._triple_product,
            IdentityId.ONO_ROBINS_7: self._ono_robins_7,
            IdentityId.ONO_ROBINS_9: self._ono_robins_9,
            IdentityId.MOBIUS: self._mobius,
        }

    @property
    def supported(self) -> frozenset[IdentityId]:
        return frozenset(self._handlers)

    def case(
        self,
        identity: IdentityId | str,
        max_n: int,
        *,
        k: int | None = None,
        alpha: int | None = None,
        beta: int | None = None,
        brute_max_n: int | None = None,
        oracle: OracleMode | str | None = None,
    ) -> IdentityCase:
        """
        Собрать описание проверки с параметрами сервиса по умолчанию.

        Raises:
            InvalidParameterError: Неизвестное тождество, режим или диапазон
        """
        try:
            return IdentityCase(
                identity=IdentityId(identity),
                max_n=max_n,
                brute_max_n=self.brute_max_n if brute_max_n is None else brute_max_n,
                oracle=self.oracle if oracle is None else OracleMode(oracle),
                k=k,
                alpha=alpha,
                beta=beta,
            )
        except ValueError as e:
            logger.error(f"Invalid identity case: {e}")
            raise InvalidParameterError(str(e)) from e

    def verify(self, case: IdentityCase) -> IdentityReport:
        """
        Проверить одно тождество на диапазоне ``0..max_n``.

        Args:
            case: Тождество и его параметры

        Returns:
            Отчёт со значениями всех путей для каждого n

        Raises:
            InvalidParameterError: Параметры вне области определения
        """
        logger.info(
            f"Verifying {case.identity.value} (k={case.k}, alpha={case.alpha}, "
            f"beta={case.beta}) up to n={case.max_n}, oracle={case.oracle.value}"
        )
        try:
            report = self._handlers[case.identity](case)
        except ValueError as e:
            logger.error(f"Invalid parameters for {case.identity.value}: {e}")
            raise InvalidParameterError(str(e)) from e
        if report.passed:
            logger.info(f"{case.identity.value}: {len(report.cells)} cells passed")
        else:
            logger.warning(
                f"{case.identity.value}: {len(report.failures)} of {len(report.cells)} failed, "
                f"first at n={report.failures[0].n}"
            )
        return report

    async def verify_async(self, case: IdentityCase) -> IdentityReport:
        return await asyncio.to_thread(self.verify, case)

    async def verify_many(self, cases: Sequence[IdentityCase]) -> list[IdentityReport]:
        """Проверить независимые случаи параллельно, сохраняя порядок отчётов."""
        return list(await asyncio.gather(*(self.verify_async(case) for case in cases)))

    def default_suite(
        self, max_n: int, brute_max_n: int | None = None, oracle: OracleMode | str | None = None
    ) -> list[IdentityCase]:
        """Все тождества с параметрами по умолчанию, в фиксированном порядке."""
        options = {"brute_max_n": brute_max_n, "oracle": oracle}
        cases = [self.case(IdentityId.EVEN_K, max_n, k=k, **options) for k in DEFAULT_EVEN_K]
        cases += [self.case(IdentityId.ODD_K, max_n, k=k, **options) for k in DEFAULT_ODD_K]
        cases += [
            self.case(identity, max_n, **options)
            for identity in (IdentityId.POD, IdentityId.OVERPARTITION, IdentityId.POFN2)
        ]
        cases += [
            self.case(IdentityId.GENERAL_AB, max_n, alpha=a, beta=b, **options)
            for a, b in DEFAULT_AB_PAIRS
        ]
        cases += [
            self.case(identity, max_n, **options)
            for identity in (
                IdentityId.P3,
                IdentityId.R,
                IdentityId.S,
                IdentityId.RR,
                IdentityId.JACOBI,
                IdentityId.TRIPLE_PRODUCT,
                IdentityId.ONO_ROBINS_7,
                IdentityId.ONO_ROBINS_9,
                IdentityId.MOBIUS,
            )
        ]
        return cases

    async def verify_all(
        self, max_n: int, brute_max_n: int | None = None, oracle: OracleMode | str | None = None
    ) -> list[IdentityReport]:
        return await self.verify_many(self.default_suite(max_n, brute_max_n, oracle))

    # Shorthands for single identities

    def verify_even_k(self, k: int, max_n: int, **options: Any) -> IdentityReport:
        return self.verify(self.case(IdentityId.EVEN_K, max_n, k=k, **options))

    def verify_odd_k(self, k: int, max_n: int, **options: Any) -> IdentityReport:
        return self.verify(self.case(IdentityId.ODD_K, max_n, k=k, **options))

    def verify_general_ab(
        self, alpha: int, beta: int, max_n: int, **options: Any
    ) -> IdentityReport:
        return self.verify(
            self.case(IdentityId.GENERAL_AB, max_n, alpha=alpha, beta=beta, **options)
        )

    def verify_named(
        self, identity: IdentityId | str, max_n: int, **options: Any
    ) -> IdentityReport:
        """Тождество без параметров (``pod``, ``p3``, ``rr``, ``jacobi`` и т. п.)."""
        return self.verify(self.case(identity, max_n, **options))

    # Composition paths

    def _composition_paths(
        self,
        case: IdentityCase,
        part_set: Callable[[int], PartSet],
        rule: WeightRule,
        *,
        signed: bool,
        prefix: str = "",
    ) -> Paths:
        paths: Paths = {}
        if case.oracle in (OracleMode.DP, OracleMode.BOTH):
            values = self.dp_oracle.weighted_sums(part_set(max(case.max_n, 1)), rule, case.max_n)
            paths[prefix + self.dp_oracle.name] = _signed(values) if signed else values
        if case.oracle in (OracleMode.BRUTE, OracleMode.BOTH):
            limit = min(case.brute_max_n, case.max_n)
            values = self.brute_oracle.weighted_sums(part_set(max(limit, 1)), rule, limit)
            paths[prefix + self.brute_oracle.name] = _signed(values) if signed else values
        return paths

    def _report(
        self, case: IdentityCase, paths: Paths, notes: Sequence[str] = (), start: int = 0
    ) -> IdentityReport:
        return IdentityReport(
            case=case,
            paths=list(paths),
            cells=_cells(paths, start, case.max_n),
            notes=list(notes),
        )

    def _enumerated(self, limit: int, counter: Callable[[int], int], max_n: int) -> list[int]:
        return [counter(n) for n in range(min(limit, max_n) + 1)]

    # Handlers

    @staticmethod
    def _require_k(case: IdentityCase, parity: int, minimum: int) -> int:
        k = case.k
        if k is None or k < minimum or k % 2 != parity:
            kind = "even" if parity == 0 else "odd"
            raise InvalidParameterError(
                f"{case.identity.value} needs {kind} k >= {minimum}, got {k}"
            )
        return k

    def _even_k(self, case: IdentityCase) -> IdentityReport:
        k = self._require_k(case, 0, 6)
        n = case.max_n
        paths: Paths = {
            "partition_dp": partition_counts(residue_set_sk(k, max(n, 1)), n),
            "series": list(named_gf(GeneratingFunction.P_SK, n, k).coeffs),
            "signed_product": _signed(product_expand(signed_sk_spec(k), n).coeffs),
            "theta_reciprocal": _signed(_reciprocal(theta_sum(ThetaSpec(1, k - 3), n))),
        }
        paths.update(
            self._composition_paths(
                case, lambda b: polygonal_set(k, b), stat_weight(WeightKind.LENGTH), signed=True
            )
        )
        return self._report(case, paths)

    def _odd_k(self, case: IdentityCase) -> IdentityReport:
        k = self._require_k(case, 1, 5)
        n = case.max_n
        paths: Paths = {
            "partition_dp": partition_counts(residue_set_sk(k, max(n, 1)), n),
            "series": list(named_gf(GeneratingFunction.P_SK, n, k).coeffs),
            "signed_product": _signed(product_expand(signed_sk_spec(k), n).coeffs),
            "theta_reciprocal": _signed(
                _reciprocal(theta_sum(ThetaSpec(1, k - 3, b_sign=-1), n))
            ),
        }
        if k == 5:
            paths["partition_function"] = partition_counts(naturals_set(max(n, 1)), n)
        paths.update(
            self._composition_paths(
                case, lambda b: polygonal_set(k, b), stat_weight(WeightKind.STAR, k=k), signed=True
            )
        )
        return self._report(case, paths)

    def _pod(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        paths: Paths = {
            "pod_dp": pod_counts(n),
            "series": list(named_gf(GeneratingFunction.POD, n).coeffs),
            "series_classical": list(product_expand(POD_CLASSICAL, n).coeffs),
            "theta_reciprocal": _signed(_reciprocal(theta_sum(ThetaSpec(1, 3), n))),
            "enumeration": self._enumerated(
                self.enumeration_max_n, lambda m: sum(1 for _ in enumerate_pod(m)), n
            ),
        }
        paths.update(
            self._composition_paths(
                case, lambda b: polygonal_set(3, b), stat_weight(WeightKind.LENGTH), signed=True
            )
        )
        return self._report(case, paths)

    def _overpartition(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        paths: Paths = {
            "series": list(named_gf(GeneratingFunction.OVERPARTITION, n).coeffs),
            "theta_reciprocal": _signed(_reciprocal(theta_sum(ThetaSpec(1, 1), n))),
            "enumeration": self._enumerated(
                self.decorated_max_n, lambda m: decorated_count(m, OVERPARTITION_PALETTE), n
            ),
        }
        paths.update(
            self._composition_paths(
                case,
                lambda b: polygonal_set(4, b),
                stat_weight(WeightKind.LENGTH_Z, z=-2),
                signed=True,
            )
        )
        return self._report(case, paths)

    def _pofn2(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        paths: Paths = {
            "partition_dp": partition_counts(naturals_set(max(n, 1)), n),
            "series": list(named_gf(GeneratingFunction.PARTITION, n).coeffs),
            "euler_reciprocal": _reciprocal(product_expand(EULER, n)),
            "theta_reciprocal": _reciprocal(theta_sum(ThetaSpec(1, 2, -1, -1), n)),
        }
        paths.update(
            self._composition_paths(
                case, lambda b: polygonal_set(5, b), stat_weight(WeightKind.HAT), signed=False
            )
        )
        return self._report(case, paths)

    def _general_ab(self, case: IdentityCase) -> IdentityReport:
        if case.alpha is None or case.beta is None:
            raise InvalidParameterError("general-ab needs alpha and beta")
        alpha, beta = case.alpha, case.beta
        n = case.max_n
        step = alpha + beta
        paths: Paths = {
            "partition_dp": partition_counts(general_t_set(alpha, beta, max(n, 1)), n),
            "series": list(
                product_expand(
                    ProductSpec(
                        factors=(
                            pochhammer_factor(alpha, step),
                            pochhammer_factor(beta, step),
                            pochhammer_factor(step, step),
                        ),
                        power=-1,
                    ),
                    n,
                ).coeffs
            ),
            "theta_reciprocal": _reciprocal(theta_sum(ThetaSpec(alpha, beta, -1, -1), n)),
        }

        def r_set(bound: int) -> PartSet:
            return general_r_set(alpha, beta, bound)

        paths.update(
            self._composition_paths(case, r_set, index_sign_weight(alpha, beta), signed=False)
        )
        notes: list[str] = []
        if alpha % 2:
            paths.update(
                self._composition_paths(
                    case, r_set, stat_weight(WeightKind.LENGTH), signed=True, prefix="length_"
                )
            )
        else:
            notes.append(
                "alpha and beta even: the (-1)^n sum (-1)^length form does not hold here; "
                "checked the index-signed composition sum instead"
            )
        return self._report(case, paths, notes)

    def _p3(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        paths: Paths = {
            "colored_dp": colored_counts(n, 3),
            "series": list(named_gf(GeneratingFunction.P3, n).coeffs),
            "jacobi_reciprocal": _reciprocal(jacobi_cube(n)),
            "decorated_enumeration": self._enumerated(
                self.decorated_max_n, lambda m: decorated_count(m, P3_PALETTE), n
            ),
        }
        paths.update(
            self._composition_paths(
                case, lambda b: polygonal_set(3, b), stat_weight(WeightKind.P3), signed=False
            )
        )
        return self._report(case, paths)

    def _r(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        paths: Paths = {
            "series": list(named_gf(GeneratingFunction.R, n).coeffs),
            "eta_quotient": _reciprocal(ono_robins_product(7, n)),
            "theta_reciprocal": _reciprocal(ono_robins_sum(7, n)),
            "decorated_enumeration": self._enumerated(
                self.decorated_max_n, lambda m: decorated_count(m, R_PALETTE), n
            ),
        }
        paths.update(
            self._composition_paths(
                case, lambda b: polygonal_set(5, b), stat_weight(WeightKind.R), signed=False
            )
        )
        return self._report(case, paths)

    def _s(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        paths: Paths = {
            "series": list(named_gf(GeneratingFunction.S, n).coeffs),
            "eta_quotient": _reciprocal(ono_robins_product(9, n)),
            "theta_reciprocal": _reciprocal(ono_robins_sum(9, n)),
            "decorated_enumeration": self._enumerated(
                self.decorated_max_n, lambda m: decorated_count(m, S_PALETTE), n
            ),
        }
        paths.update(self._composition_paths(case, u_set, stat_weight(WeightKind.S), signed=False))
        return self._report(case, paths)

    def _rr(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        denominator = product_expand(RR_DENOMINATOR, n)
        paths: Paths = {
            "partition_dp": rr_counts(n),
            "series": list(named_gf(GeneratingFunction.RR, n).coeffs),
            "reciprocal_product": _reciprocal(denominator),
            "gap_enumeration": self._enumerated(
                self.enumeration_max_n, count_gap_partitions, n
            ),
            "rogers_ramanujan_sum": list(rogers_ramanujan_sum(n).coeffs),
        }
        rule = lemma_weight(denominator)
        support = explicit_set(rule.overrides, name="supp")
        paths.update(
            self._composition_paths(case, lambda b: support, rule, signed=False, prefix="lemma_")
        )
        a = rr_theta_factor(n).coeffs
        hat_sums = self._composition_paths(
            case, lambda b: polygonal_set(5, b), stat_weight(WeightKind.HAT), signed=False
        )
        for name, sums in hat_sums.items():
            # Cauchy product with the theta factor
            paths[f"cauchy_{name}"] = [
                sum(a[i] * sums[m - i] for i in range(m + 1)) for m in range(len(sums))
            ]
        return self._report(case, paths)

    def _jacobi(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        paths: Paths = {
            "sum": list(jacobi_cube(n).coeffs),
            "product": list(product_expand(EULER_CUBE, n).coeffs),
        }
        return self._report(case, paths)

    def _triple_product(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        if case.alpha is not None and case.beta is not None:
            pairs = [(case.alpha, case.beta)]
        else:
            pairs = [(a, b) for a in range(1, 5) for b in range(1, 5)]
        cells: list[CellResult] = []
        for (alpha, beta), (a_sign, b_sign) in product(pairs, product((1, -1), repeat=2)):
            spec = ThetaSpec(alpha, beta, a_sign, b_sign)
            paths = {
                "sum": list(theta_sum(spec, n).coeffs),
                "product": list(theta_product(spec, n).coeffs),
            }
            cells.extend(_cells(paths, 0, n, tag=spec.label))
        for label, spec, classical in (
            ("psi", ThetaSpec(1, 3), PSI_PRODUCT),
            ("phi", ThetaSpec(1, 1), PHI_PRODUCT),
        ):
            paths = {
                "sum": list(theta_sum(spec, n).coeffs),
                "product": list(product_expand(classical, n).coeffs),
            }
            cells.extend(_cells(paths, 0, n, tag=label))
        return IdentityReport(case=case, paths=["sum", "product"], cells=cells)

    def _ono_robins(self, case: IdentityCase, modulus: int) -> IdentityReport:
        n = case.max_n
        paths: Paths = {
            "sum": list(ono_robins_sum(modulus, n).coeffs),
            "product": list(ono_robins_product(modulus, n).coeffs),
        }
        return self._report(case, paths)

    def _ono_robins_7(self, case: IdentityCase) -> IdentityReport:
        return self._ono_robins(case, 7)

    def _ono_robins_9(self, case: IdentityCase) -> IdentityReport:
        return self._ono_robins(case, 9)

    def _mobius(self, case: IdentityCase) -> IdentityReport:
        n = case.max_n
        if n < 1:
            return self._report(case, {}, start=1)
        # index 0 is a placeholder; cells start at n = 1
        paths: Paths = {
            "factorization": [0] + [mobius_by_factorization(m) for m in range(1, n + 1)],
            "compositions_memo": [0] + [signed_factorization_count(m, -1) for m in range(1, n + 1)],
            "compositions_recurrence": [0]
            + list(comp_zeta_coeffs(naturals_set(max(n, 2), minimum=2), -1, n).values),
        }
        if case.oracle in (OracleMode.BRUTE, OracleMode.BOTH):
            limit = min(n, self.factorization_brute_max_n)
            paths["compositions_brute"] = [0] + [
                mobius_via_compositions(m) for m in range(1, limit + 1)
            ]
        return self._report(case, paths, start=1)
