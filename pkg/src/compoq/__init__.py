"""compoq - композиции, q-ряды и проверка тождеств в точной арифметике."""

__version__ = "0.1.0"
