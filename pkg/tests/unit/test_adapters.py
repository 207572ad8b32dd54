"""Тесты адаптеров: оракулы и запись отчётов."""

import json
from io import StringIO
from pathlib import Path

import pytest
from pydantic import BaseModel

from compoq.adapters.cli.dependencies import (
    get_dp_oracle,
    get_identity_service,
    reset_caches,
)
from compoq.adapters.oracles import BruteForceCompositionOracle, RecurrenceCompositionOracle
from compoq.adapters.output import DirectoryReportWriter, StreamReportWriter
from compoq.adapters.output.writers import to_jsonable
from compoq.config.settings import Settings
from compoq.core.domain.exceptions import InfeasibleComputationError
from compoq.core.domain.models import OracleMode
from compoq.core.services.compositions import stat_weight
from compoq.core.services.partsets import polygonal_set


class Sample(BaseModel):
    name: str
    values: list[int]


class TestOracles:
    """Тесты для оракулов композиций."""

    def test_oracles_agree(self) -> None:
        parts = polygonal_set(6, 20)
        rule = stat_weight("length")
        brute = BruteForceCompositionOracle().weighted_sums(parts, rule, 20)
        assert brute == RecurrenceCompositionOracle().weighted_sums(parts, rule, 20)

    def test_brute_force_limit(self) -> None:
        oracle = BruteForceCompositionOracle(max_feasible_n=10)
        with pytest.raises(InfeasibleComputationError, match="limit 10"):
            oracle.weighted_sums(polygonal_set(5, 11), stat_weight("length"), 11)

    def test_names_are_distinct(self) -> None:
        assert BruteForceCompositionOracle.name != RecurrenceCompositionOracle.name


class TestStreamReportWriter:
    """Тесты для StreamReportWriter."""

    def test_document(self) -> None:
        stream = StringIO()
        StreamReportWriter(stream).write_document("x", Sample(name="rr", values=[1, 1]))
        assert json.loads(stream.getvalue()) == {"name": "rr", "values": [1, 1]}

    def test_csv_table(self) -> None:
        stream = StringIO()
        writer = StreamReportWriter(stream, "csv")
        writer.write_table("t", ["n", "value"], [(0, 1), (1, -1)])
        assert stream.getvalue() == "n,value\n0,1\n1,-1\n"

    def test_json_table(self) -> None:
        stream = StringIO()
        StreamReportWriter(stream).write_table("t", ["n", "value"], [(0, 1)])
        assert json.loads(stream.getvalue()) == [{"n": 0, "value": 1}]

    def test_unknown_format(self) -> None:
        with pytest.raises(ValueError, match="format"):
            StreamReportWriter(StringIO(), "xml")

    def test_nested_models(self) -> None:
        payload = {"items": (Sample(name="a", values=[]),), 3: None}
        assert to_jsonable(payload) == {"items": [{"name": "a", "values": []}], "3": None}


class TestDirectoryReportWriter:
    """Тесты для DirectoryReportWriter."""

    def test_writes_files(self, tmp_path: Path) -> None:
        writer = DirectoryReportWriter(tmp_path / "corpus")
        writer.write_document("series-rr-order10", {"ok": True})
        writer.write_table("table rr/n10", ["n", "value"], [(0, 1)])
        assert json.loads((tmp_path / "corpus" / "series-rr-order10.json").read_text()) == {
            "ok": True
        }
        assert (tmp_path / "corpus" / "table-rr-n10.csv").read_text() == "n,value\n0,1\n"

    def test_rewrite_overwrites(self, tmp_path: Path) -> None:
        writer = DirectoryReportWriter(tmp_path)
        writer.write_document("a", [1])
        writer.write_document("a", [2])
        assert json.loads((tmp_path / "a.json").read_text()) == [2]

    def test_file_stem(self) -> None:
        assert DirectoryReportWriter.file_stem("zeta comp/N*") == "zeta-comp-N"
        with pytest.raises(ValueError, match="file name"):
            DirectoryReportWriter.file_stem("///")


class TestDependencies:
    """Тесты для сборки зависимостей CLI."""

    def test_oracle_fallback(self) -> None:
        reset_caches()
        service = get_identity_service(Settings(oracle="quantum"))
        assert service.oracle is OracleMode.BOTH

    def test_settings_reach_service(self) -> None:
        reset_caches()
        service = get_identity_service(
            Settings(oracle="dp", brute_max_n=7, max_feasible_brute_n=9)
        )
        assert service.oracle is OracleMode.DP
        assert service.brute_max_n == 7
        assert isinstance(service.brute_oracle, BruteForceCompositionOracle)
        assert service.brute_oracle.max_feasible_n == 9
        reset_caches()

    def test_oracles_are_cached(self) -> None:
        reset_caches()
        assert get_dp_oracle() is get_dp_oracle()
