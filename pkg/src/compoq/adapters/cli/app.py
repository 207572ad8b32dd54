"""CLI приложение: разбор аргументов, запуск операций и коды выхода."""

import argparse
import asyncio
import logging
import sys
from collections.abc import Callable, Sequence
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from pydantic import BaseModel, ValidationError

from compoq.adapters.cli.dependencies import get_brute_oracle, get_dp_oracle, get_identity_service
from compoq.adapters.cli.schemas import (
    AsymptoticResponse,
    CompositionsResponse,
    ErrorResponse,
    IdentityReportResponse,
    MobiusResponse,
    MobiusRow,
    RatioResponse,
    RunConfig,
    SeriesResponse,
    TableResponse,
    VerifyResponse,
    ZetaResponse,
)
from compoq.adapters.output.writers import DirectoryReportWriter, StreamReportWriter, dump_json
from compoq.config.settings import Settings, get_settings
from compoq.core.domain.exceptions import (
    CompoqError,
    InfeasibleComputationError,
    InvalidParameterError,
    NonInvertibleSeriesError,
)
from compoq.core.domain.models import AsymptoticId, IdentityId, OracleMode, PartSet, WeightRule
from compoq.core.services.asymptotics import ratio_report
from compoq.core.services.compositions import (
    WeightKind,
    enumerate_compositions,
    index_sign_weight,
    stat_weight,
)
from compoq.core.services.dirichlet import comp_zeta_value, mobius_table, partition_zeta_value
from compoq.core.services.partitions import PartitionFunction, partition_table
from compoq.core.services.partsets import get_part_set
from compoq.core.services.powerseries import series_recip
from compoq.core.services.qgen import series_by_name, series_names

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

INDEX_SIGN_WEIGHT = "index-sign"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass
class CommandResult:
    """Payload of one subcommand in both document and table form."""

    name: str
    document: BaseModel
    header: tuple[str, ...]
    rows: list[tuple[object, ...]]
    exit_code: int = EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(value) for value in text.split(",") if value.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from e


def _add_part_set_options(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--set", dest="set_name", required=required, help="Part set name")
    parser.add_argument("--values", type=_int_list, help="Members of an explicit part set")
    parser.add_argument("--alpha", type=int)
    parser.add_argument("--beta", type=int)
    parser.add_argument("--k", type=int, help="Polygonal order")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    """Argument parser with defaults taken from ``settings``."""
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Exact composition-theoretic q-series and identity verification",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {settings.app_version}"
    )
    parser.add_argument(
        "--format", dest="output_format", choices=("json", "csv"), default=settings.output_format
    )
    parser.add_argument("--output", type=Path, help="Write the payload here instead of stdout")
    parser.add_argument(
        "--seed-corpus", type=Path, help="Also dump golden files into this directory"
    )
    parser.add_argument(
        "--log-level", type=str.upper, choices=LOG_LEVELS, default=settings.log_level.upper()
    )
    commands = parser.add_subparsers(dest="command", required=True)

    series = commands.add_parser("series", help="Expand a named series")
    series.add_argument("name", choices=series_names())
    series.add_argument("--order", type=int, default=settings.order)
    series.add_argument("--k", type=int)
    series.add_argument("--sparse", action="store_true", help="Add sparse text form")

    verify = commands.add_parser("verify", help="Verify an identity, or all of them")
    verify.add_argument("name", choices=[identity.value for identity in IdentityId] + ["all"])
    verify.add_argument("--k", type=int)
    verify.add_argument("--alpha", type=int)
    verify.add_argument("--beta", type=int)
    verify.add_argument("--max-n", type=int, default=settings.max_n)
    verify.add_argument("--brute-max-n", type=int, default=settings.brute_max_n)
    verify.add_argument(
        "--oracle", choices=[mode.value for mode in OracleMode], default=settings.oracle
    )

    table = commands.add_parser("table", help="Tabulate a counting function")
    table.add_argument("name", choices=[function.value for function in PartitionFunction])
    table.add_argument("--max-n", type=int, default=settings.max_n)
    table.add_argument("--colors", type=int, default=3)
    _add_part_set_options(table, required=False)

    compositions = commands.add_parser("compositions", help="Enumerate or weigh compositions")
    _add_part_set_options(compositions, required=True)
    compositions.add_argument("--n", type=int, required=True)
    compositions.add_argument(
        "--weight", choices=[kind.value for kind in WeightKind] + [INDEX_SIGN_WEIGHT]
    )
    compositions.add_argument("--z", type=int)
    compositions.add_argument("--brute-max-n", type=int, default=settings.brute_max_n)

    mu = commands.add_parser("mu", help="Moebius function two ways")
    mu.add_argument("--max-n", type=int, default=settings.max_n)

    zeta = commands.add_parser("zeta", help="Evaluate a composition or partition zeta function")
    _add_part_set_options(zeta, required=True)
    zeta.add_argument("--z", type=int, default=1)
    zeta.add_argument("--s", type=float, required=True)
    zeta.add_argument("--bound", type=int, default=settings.zeta_bound)
    zeta.add_argument("--kind", choices=("composition", "partition"), default="composition")

    asymptotic = commands.add_parser("asymptotic", help="Exact against asymptotic values")
    asymptotic.add_argument("name", choices=[formula.value for formula in AsymptoticId])
    asymptotic.add_argument("--n", dest="n_values", type=_int_list, required=True)
    asymptotic.add_argument("--k", type=int)

    return parser


def _config_from(namespace: argparse.Namespace) -> RunConfig:
    payload = {key: value for key, value in vars(namespace).items() if value is not None}
    payload.pop("log_level", None)
    return RunConfig.model_validate(payload)


def _check_feasible(config: RunConfig, settings: Settings) -> None:
    limit = settings.max_feasible_n
    brute_limit = settings.max_feasible_brute_n
    requested = {
        "series": config.order,
        "verify": config.max_n,
        "table": config.max_n,
        "mu": config.max_n,
        "compositions": config.n or 0,
        "zeta": config.bound or 0,
    }.get(config.command, 0)
    if requested > limit:
        raise InfeasibleComputationError(
            f"{config.command}: size {requested} exceeds the feasible limit {limit}"
        )
    brute_n = min(config.brute_max_n, config.max_n)
    if config.command == "verify" and config.oracle is not OracleMode.DP and brute_n > brute_limit:
        raise InfeasibleComputationError(
            f"Brute-force bound {config.brute_max_n} exceeds the limit {brute_limit}"
        )
    listing = config.command == "compositions" and config.weight is None
    if listing and (config.n or 0) > brute_limit:
        raise InfeasibleComputationError(
            f"Listing compositions of {config.n} exceeds the enumeration limit {brute_limit}"
        )


def _part_set(config: RunConfig, bound: int) -> PartSet:
    assert config.set_name is not None
    return get_part_set(
        config.set_name,
        bound,
        k=config.k,
        alpha=config.alpha,
        beta=config.beta,
        values=config.values,
    )


def _weight_rule(config: RunConfig) -> WeightRule:
    assert config.weight is not None
    if config.weight == INDEX_SIGN_WEIGHT:
        if config.alpha is None or config.beta is None:
            raise InvalidParameterError("index-sign weight needs --alpha and --beta")
        return index_sign_weight(config.alpha, config.beta)
    return stat_weight(config.weight, k=config.k, z=config.z)


# Subcommands


def _series(config: RunConfig, settings: Settings) -> CommandResult:
    assert config.name is not None
    series = series_by_name(config.name, config.order, config.k)
    try:
        reciprocal: list[int] | None = list(series_recip(series).coeffs)
    except NonInvertibleSeriesError:
        reciprocal = None
    document = SeriesResponse(
        name=config.name,
        order=config.order,
        k=config.k,
        coefficients=list(series.coeffs),
        reciprocal=reciprocal,
        sparse=series.to_sparse_text() if config.sparse else None,
    )
    rows: list[tuple[object, ...]] = [
        (n, c, "" if reciprocal is None else reciprocal[n]) for n, c in enumerate(series.coeffs)
    ]
    suffix = "" if config.k is None else f"-k{config.k}"
    return CommandResult(
        name=f"series-{config.name}{suffix}-order{config.order}",
        document=document,
        header=("n", "coefficient", "reciprocal"),
        rows=rows,
    )


def _verify(config: RunConfig, settings: Settings) -> CommandResult:
    assert config.name is not None
    service = get_identity_service(settings)
    if config.name == "all":
        reports = asyncio.run(service.verify_all(config.max_n, config.brute_max_n, config.oracle))
    else:
        case = service.case(
            config.name,
            config.max_n,
            k=config.k,
            alpha=config.alpha,
            beta=config.beta,
            brute_max_n=config.brute_max_n,
            oracle=config.oracle,
        )
        reports = [service.verify(case)]

    responses = [IdentityReportResponse.from_report(report) for report in reports]
    passed = all(response.passed for response in responses)
    document: BaseModel = (
        VerifyResponse(passed=passed, reports=responses) if config.name == "all" else responses[0]
    )
    rows: list[tuple[object, ...]] = [
        (
            response.identity,
            cell.tag,
            cell.n,
            "pass" if cell.passed else "FAIL",
            ";".join(f"{path}={value}" for path, value in cell.values.items()),
        )
        for response in responses
        for cell in response.cells
    ]
    parameters = "".join(
        f"-{label}{value}"
        for label, value in (("k", config.k), ("a", config.alpha), ("b", config.beta))
        if value is not None and config.name != "all"
    )
    return CommandResult(
        name=f"verify-{config.name}{parameters}-n{config.max_n}",
        document=document,
        header=("identity", "tag", "n", "status", "values"),
        rows=rows,
        exit_code=EXIT_OK if passed else EXIT_FAILURE,
    )


def _table(config: RunConfig, settings: Settings) -> CommandResult:
    assert config.name is not None
    part_set = _part_set(config, max(config.max_n, 1)) if config.set_name else None
    values = partition_table(
        config.name, config.max_n, k=config.k, colors=config.colors, part_set=part_set
    )
    return CommandResult(
        name=f"table-{config.name}-n{config.max_n}",
        document=TableResponse(function=config.name, max_n=config.max_n, values=values),
        header=("n", "value"),
        rows=list(enumerate(values)),
    )


def _compositions(config: RunConfig, settings: Settings) -> CommandResult:
    assert config.n is not None
    n = config.n
    part_set = _part_set(config, max(n, 1))
    name = f"compositions-{config.set_name}-n{n}"

    if config.weight is None:
        found = list(enumerate_compositions(part_set, n))
        return CommandResult(
            name=name,
            document=CompositionsResponse(
                part_set=part_set.name,
                n=n,
                count=len(found),
                compositions=[list(c.parts) for c in found],
            ),
            header=("index", "parts", "length", "norm"),
            rows=[
                (index, "+".join(map(str, c.parts)), c.length, c.norm)
                for index, c in enumerate(found)
            ],
        )

    rule = _weight_rule(config)
    dp_oracle = get_dp_oracle()
    sums = {dp_oracle.name: dp_oracle.weighted_sums(part_set, rule, n)[n]}
    if n <= config.brute_max_n:
        brute_oracle = get_brute_oracle(settings)
        sums[brute_oracle.name] = brute_oracle.weighted_sums(part_set, rule, n)[n]
    agree = len(set(sums.values())) == 1
    if not agree:
        logger.warning(f"Composition oracles disagree at n={n}: {sums}")
    return CommandResult(
        name=f"{name}-{config.weight}",
        document=CompositionsResponse(
            part_set=part_set.name, n=n, weight=rule.name, weighted_sums=sums
        ),
        header=("oracle", "weighted_sum"),
        rows=list(sums.items()),
        exit_code=EXIT_OK if agree else EXIT_FAILURE,
    )


def _mu(config: RunConfig, settings: Settings) -> CommandResult:
    if config.max_n < 1:
        raise InvalidParameterError(f"mu needs --max-n >= 1, got {config.max_n}")
    rows = [
        MobiusRow(
            n=n,
            mu_compositions=via_compositions,
            mu_factorization=via_factoring,
            status="ok" if via_compositions == via_factoring else "MISMATCH",
        )
        for n, via_compositions, via_factoring in mobius_table(config.max_n)
    ]
    passed = all(row.status == "ok" for row in rows)
    return CommandResult(
        name=f"mu-n{config.max_n}",
        document=MobiusResponse(max_n=config.max_n, passed=passed, rows=rows),
        header=("n", "mu_compositions", "mu_factorization", "status"),
        rows=[(r.n, r.mu_compositions, r.mu_factorization, r.status) for r in rows],
        exit_code=EXIT_OK if passed else EXIT_FAILURE,
    )


def _zeta(config: RunConfig, settings: Settings) -> CommandResult:
    assert config.s is not None
    bound = config.bound or settings.zeta_bound
    part_set = _part_set(config, bound)
    digits = settings.precision_digits
    z: int | None
    if config.kind == "partition":
        z = None
        evaluation = partition_zeta_value(part_set, config.s, bound, digits)
    else:
        z = 1 if config.z is None else config.z
        evaluation = comp_zeta_value(part_set, z, config.s, bound, digits)
    document = ZetaResponse.from_evaluation(part_set.name, config.kind, z, evaluation)
    dumped = document.model_dump()
    return CommandResult(
        name=f"zeta-{config.kind}-{config.set_name}-z{z}-s{config.s}-B{bound}",
        document=document,
        header=tuple(dumped),
        rows=[tuple(dumped.values())],
        exit_code=EXIT_OK if evaluation.within_bound else EXIT_FAILURE,
    )


def _asymptotic(config: RunConfig, settings: Settings) -> CommandResult:
    assert config.name is not None
    rows = ratio_report(
        config.name,
        config.n_values,
        k=config.k,
        digits=settings.precision_digits,
        max_feasible_n=settings.max_feasible_n,
    )
    suffix = "" if config.k is None else f"-k{config.k}"
    return CommandResult(
        name=f"asymptotic-{config.name}{suffix}",
        document=AsymptoticResponse(
            identifier=config.name,
            k=config.k,
            rows=[
                RatioResponse(n=r.n, exact=r.exact, asymptotic=r.asymptotic, ratio=r.ratio)
                for r in rows
            ],
        ),
        header=("n", "exact", "asymptotic", "ratio"),
        rows=[(r.n, r.exact, r.asymptotic, r.ratio) for r in rows],
    )


HANDLERS: dict[str, Callable[[RunConfig, Settings], CommandResult]] = {
    "series": _series,
    "verify": _verify,
    "table": _table,
    "compositions": _compositions,
    "mu": _mu,
    "zeta": _zeta,
    "asymptotic": _asymptotic,
}


def _emit(result: CommandResult, output_format: str, stream: TextIO) -> None:
    writer = StreamReportWriter(stream, output_format)
    if output_format == "csv":
        writer.write_table(result.name, result.header, result.rows)
    else:
        writer.write_document(result.name, result.document)


def _fail(stream: TextIO, error: str, detail: str, code: int) -> int:
    logger.error(f"{error}: {detail}")
    stream.write(dump_json(ErrorResponse(error=error, detail=detail)))
    stream.write("\n")
    return code


def _validation_detail(error: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in item['loc']) or 'arguments'}: {item['msg']}"
        for item in error.errors()
    )


def configure_logging(level: str, stream: TextIO) -> None:
    """Настройка логирования; логи идут в stderr, данные в stdout."""
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=stream,
        force=True,
    )


def run(
    argv: Sequence[str] | None = None,
    *,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
    settings: Settings | None = None,
) -> int:
    """
    Выполнить одну команду CLI.

    Args:
        argv: Аргументы без имени программы
        stdout: Поток для данных
        stderr: Поток для логов и ошибок
        settings: Настройки (по умолчанию из окружения)

    Returns:
        Код выхода: 0 успех, 1 расхождение, 2 неверные параметры, 3 слишком большой размер
    """
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    if settings is None:
        settings = get_settings()

    parser = build_parser(settings)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            namespace = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(namespace.log_level, err)

    try:
        config = _config_from(namespace)
    except ValidationError as e:
        return _fail(err, "ValidationError", _validation_detail(e), EXIT_USAGE)

    logger.info(f"Running {config.command} {config.name or ''}".rstrip())
    try:
        _check_feasible(config, settings)
        result = HANDLERS[config.command](config, settings)
    except InfeasibleComputationError as e:
        return _fail(err, type(e).__name__, str(e), EXIT_INFEASIBLE)
    except CompoqError as e:
        return _fail(err, type(e).__name__, str(e), EXIT_USAGE)

    output_format = config.resolved_format
    if config.output is not None:
        with config.output.open("w", encoding="utf-8", newline="") as handle:
            _emit(result, output_format, handle)
        logger.info(f"Output written to {config.output}")
    else:
        _emit(result, output_format, out)

    if config.seed_corpus is not None:
        corpus = DirectoryReportWriter(config.seed_corpus)
        corpus.write_document(result.name, result.document)
        corpus.write_table(result.name, result.header, result.rows)

    if result.exit_code:
        logger.warning(f"{result.name}: finished with exit code {result.exit_code}")
    return result.exit_code
