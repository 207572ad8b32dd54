"""Unit тесты."""

