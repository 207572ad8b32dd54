"""Вывод результатов: JSON/CSV в поток и эталонный корпус в каталог."""

from compoq.adapters.output.writers import DirectoryReportWriter, StreamReportWriter

__all__ = ["DirectoryReportWriter", "StreamReportWriter"]
