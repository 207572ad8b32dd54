"""Адаптеры: оракулы, вывод результатов и CLI."""
