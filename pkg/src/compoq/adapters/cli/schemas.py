"""Pydantic models for CLI input and output payloads."""

from pathlib import Path
from typing import TYPE_CHECKING, Literal

if TYPE_CHECKING:
    from typing_extensions import Self

from pydantic import BaseModel, Field, model_validator

from compoq.core.domain.models import (
    CellResult,
    IdentityId,
    IdentityReport,
    OracleMode,
    ZetaEvaluation,
)

Command = Literal["series", "verify", "table", "compositions", "mu", "zeta", "asymptotic"]

TABLE_COMMANDS = frozenset({"table", "mu", "asymptotic"})


class RunConfig(BaseModel):
    """Validated command line. Built before any computation starts."""

    command: Command
    name: str | None = None

    order: int = Field(default=200, ge=0, description="Truncation order N")
    max_n: int = Field(default=60, ge=0, description="Largest n to verify or tabulate")
    brute_max_n: int = Field(default=25, ge=0, description="Largest n for brute-force oracles")
    oracle: OracleMode = OracleMode.BOTH

    k: int | None = Field(default=None, ge=3)
    alpha: int | None = Field(default=None, ge=1)
    beta: int | None = Field(default=None, ge=1)
    colors: int = Field(default=3, ge=1)

    set_name: str | None = None
    values: list[int] | None = None
    weight: str | None = None
    z: int | None = None
    n: int | None = Field(default=None, ge=0)

    s: float | None = Field(default=None, gt=1)
    bound: int | None = Field(default=None, ge=1)
    kind: Literal["composition", "partition"] = "composition"

    n_values: list[int] = Field(default_factory=list)
    sparse: bool = False

    output_format: Literal["json", "csv"] | None = None
    output: Path | None = None
    seed_corpus: Path | None = None

    @model_validator(mode="after")
    def check_parameters(self) -> "Self":
        """Parameter combinations that argparse cannot express."""
        if (self.alpha is None) != (self.beta is None):
            raise ValueError("--alpha and --beta go together")
        if self.alpha is not None and self.beta is not None:
            if self.alpha >= self.beta:
                raise ValueError(f"Need alpha < beta, got ({self.alpha}, {self.beta})")
            if (self.alpha - self.beta) % 2:
                raise ValueError(
                    f"alpha and beta must share parity, got ({self.alpha}, {self.beta})"
                )

        if self.command == "verify":
            if self.name == IdentityId.EVEN_K.value and (
                self.k is None or self.k < 6 or self.k % 2
            ):
                raise ValueError(f"even-k needs even --k >= 6, got {self.k}")
            if self.name == IdentityId.ODD_K.value and (
                self.k is None or self.k < 5 or self.k % 2 == 0
            ):
                raise ValueError(f"odd-k needs odd --k >= 5, got {self.k}")
            if self.name == IdentityId.GENERAL_AB.value and self.alpha is None:
                raise ValueError("general-ab needs --alpha and --beta")
        if self.command in ("compositions", "zeta") and self.set_name is None:
            raise ValueError(f"{self.command} needs --set")
        if self.command == "compositions" and self.n is None:
            raise ValueError("compositions needs --n")
        if self.command == "zeta" and self.s is None:
            raise ValueError("zeta needs --s")
        if self.command == "asymptotic" and not self.n_values:
            raise ValueError("asymptotic needs --n")
        return self

    @property
    def resolved_format(self) -> str:
        if self.output_format is not None:
            return self.output_format
        return "csv" if self.command in TABLE_COMMANDS else "json"


class ErrorResponse(BaseModel):
    """Ответ с ошибкой."""

    error: str
    detail: str


class SeriesResponse(BaseModel):
    name: str
    order: int
    k: int | None = None
    coefficients: list[int]
    reciprocal: list[int] | None = None
    sparse: str | None = None


class CellResponse(BaseModel):
    n: int
    tag: str = ""
    passed: bool
    values: dict[str, int]

    @classmethod
    def from_cell(cls, cell: CellResult) -> "CellResponse":
        return cls(n=cell.n, tag=cell.tag, passed=cell.passed, values=cell.values)


class IdentityReportResponse(BaseModel):
    """Отчёт о проверке одного тождества."""

    identity: str
    k: int | None = None
    alpha: int | None = None
    beta: int | None = None
    max_n: int
    brute_max_n: int
    oracle: str
    passed: bool
    paths: list[str]
    failures: list[int]
    notes: list[str] = Field(default_factory=list)
    cells: list[CellResponse]

    @classmethod
    def from_report(cls, report: IdentityReport) -> "IdentityReportResponse":
        case = report.case
        return cls(
            identity=case.identity.value,
            k=case.k,
            alpha=case.alpha,
            beta=case.beta,
            max_n=case.max_n,
            brute_max_n=case.brute_max_n,
            oracle=case.oracle.value,
            passed=report.passed,
            paths=report.paths,
            failures=[cell.n for cell in report.failures],
            notes=report.notes,
            cells=[CellResponse.from_cell(cell) for cell in report.cells],
        )


class VerifyResponse(BaseModel):
    passed: bool
    reports: list[IdentityReportResponse]


class TableResponse(BaseModel):
    function: str
    max_n: int
    values: list[int]


class CompositionsResponse(BaseModel):
    part_set: str
    n: int
    weight: str | None = None
    count: int | None = None
    compositions: list[list[int]] | None = None
    weighted_sums: dict[str, int] | None = None


class ZetaResponse(BaseModel):
    part_set: str
    kind: str
    z: int | None
    s: float
    bound: int
    closed_form: float
    partial_sum: float
    difference: float
    tail_bound: float
    series_tail_bound: float
    within_bound: bool
    reference: float | None = None
    reference_error: float | None = None

    @classmethod
    def from_evaluation(
        cls, part_set: str, kind: str, z: int | None, evaluation: ZetaEvaluation
    ) -> "ZetaResponse":
        return cls(
            part_set=part_set,
            kind=kind,
            z=z,
            s=evaluation.s,
            bound=evaluation.bound,
            closed_form=evaluation.closed_form,
            partial_sum=evaluation.partial_sum,
            difference=evaluation.difference,
            tail_bound=evaluation.tail_bound,
            series_tail_bound=evaluation.series_tail_bound,
            within_bound=evaluation.within_bound,
            reference=evaluation.reference,
            reference_error=evaluation.reference_error,
        )


class MobiusRow(BaseModel):
    n: int
    mu_compositions: int
    mu_factorization: int
    status: Literal["ok", "MISMATCH"]


class MobiusResponse(BaseModel):
    max_n: int
    passed: bool
    rows: list[MobiusRow]


class RatioResponse(BaseModel):
    n: int
    exact: int
    asymptotic: float
    ratio: float


class AsymptoticResponse(BaseModel):
    identifier: str
    k: int | None = None
    rows: list[RatioResponse]
