"""Ядро: доменные модели и вычислительные сервисы."""
