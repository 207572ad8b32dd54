"""Интерфейс командной строки."""

from compoq.adapters.cli.app import run

__all__ = ["run"]
