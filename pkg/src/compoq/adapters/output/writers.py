"""JSON and CSV report writers."""

import csv
import json
import logging
import re
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any, TextIO

from pydantic import BaseModel

from compoq.core.domain.ports import IReportWriter

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv")


def to_jsonable(payload: Any) -> Any:
    """Plain JSON structure for pydantic models and nested containers."""
    if isinstance(payload, BaseModel):
        return payload.model_dump(mode="json")
    if isinstance(payload, dict):
        return {str(key): to_jsonable(value) for key, value in payload.items()}
    if isinstance(payload, list | tuple):
        return [to_jsonable(value) for value in payload]
    return payload


def dump_json(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), indent=2, ensure_ascii=False)


def _write_csv(stream: TextIO, header: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


class StreamReportWriter(IReportWriter):
    """
    Writes each result to one text stream in a fixed format.

    Documents go out as indented JSON. Tables go out as CSV, or as a JSON
    list of row objects when the format is ``json``.
    """

    def __init__(self, stream: TextIO, output_format: str = "json") -> None:
        if output_format not in FORMATS:
            raise ValueError(f"Unknown output format: {output_format}")
        self.stream = stream
        self.output_format = output_format

    def write_document(self, name: str, payload: Any) -> None:
        logger.debug(f"Writing document {name}")
        self.stream.write(dump_json(payload))
        self.stream.write("\n")

    def write_table(
        self, name: str, header: Sequence[str], rows: Iterable[Sequence[object]]
    ) -> None:
        logger.debug(f"Writing table {name} as {self.output_format}")
        if self.output_format == "csv":
            _write_csv(self.stream, header, rows)
            return
        self.write_document(name, [dict(zip(header, row, strict=True)) for row in rows])


class DirectoryReportWriter(IReportWriter):
    """
    Golden corpus: one file per result under ``directory``.

    File names are derived from result names only, so rerunning a command
    overwrites its own fixture and nothing else.
    """

    def __init__(self, directory: Path | str) -> None:
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def file_stem(name: str) -> str:
        stem = re.sub(r"[^A-Za-z0-9_.-]+", "-", name).strip("-")
        if not stem:
            raise ValueError(f"Cannot derive a file name from {name!r}")
        return stem

    def path_for(self, name: str, suffix: str) -> Path:
        return self.directory / f"{self.file_stem(name)}.{suffix}"

    def write_document(self, name: str, payload: Any) -> None:
        path = self.path_for(name, "json")
        path.write_text(dump_json(payload) + "\n", encoding="utf-8")
        logger.info(f"Corpus document written: {path}")

    def write_table(
        self, name: str, header: Sequence[str], rows: Iterable[Sequence[object]]
    ) -> None:
        path = self.path_for(name, "csv")
        with path.open("w", encoding="utf-8", newline="") as handle:
            _write_csv(handle, header, rows)
        logger.info(f"Corpus table written: {path}")
