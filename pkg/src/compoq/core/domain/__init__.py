"""Доменный слой: модели, исключения и порты."""
