"""Вычислительные сервисы: ряды, композиции, разбиения, ряды Дирихле и проверка тождеств."""
