"""Integration тесты."""

