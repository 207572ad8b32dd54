"""Тесты для compoq."""
