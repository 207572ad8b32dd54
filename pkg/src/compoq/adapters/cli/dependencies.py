"""Dependency injection для CLI."""

import logging

from compoq.adapters.oracles import BruteForceCompositionOracle, RecurrenceCompositionOracle
from compoq.config.settings import Settings, get_settings
from compoq.core.domain.models import OracleMode
from compoq.core.domain.ports import ICompositionOracle
from compoq.core.services.identity_verifier import IdentityVerificationService

logger = logging.getLogger(__name__)

# Кэш для оракулов (без Settings в аргументах)
_brute_oracle_cache: ICompositionOracle | None = None
_dp_oracle_cache: ICompositionOracle | None = None


def get_brute_oracle(settings: Settings | None = None) -> ICompositionOracle:
    """Получить переборный оракул композиций."""
    global _brute_oracle_cache

    if _brute_oracle_cache is not None:
        return _brute_oracle_cache

    if settings is None:
        settings = get_settings()

    _brute_oracle_cache = BruteForceCompositionOracle(
        max_feasible_n=settings.max_feasible_brute_n
    )
    return _brute_oracle_cache


def get_dp_oracle() -> ICompositionOracle:
    """Получить рекуррентный оракул композиций."""
    global _dp_oracle_cache

    if _dp_oracle_cache is None:
        _dp_oracle_cache = RecurrenceCompositionOracle()
    return _dp_oracle_cache


def reset_caches() -> None:
    """Сбросить кэши (тесты меняют настройки через окружение)."""
    global _brute_oracle_cache, _dp_oracle_cache
    _brute_oracle_cache = None
    _dp_oracle_cache = None


def get_identity_service(settings: Settings | None = None) -> IdentityVerificationService:
    """Получить сервис проверки тождеств."""
    if settings is None:
        settings = get_settings()

    try:
        oracle = OracleMode(settings.oracle)
    except ValueError:
        logger.warning(f"Unknown oracle mode: {settings.oracle}, falling back to both")
        oracle = OracleMode.BOTH

    return IdentityVerificationService(
        brute_oracle=get_brute_oracle(settings),
        dp_oracle=get_dp_oracle(),
        brute_max_n=settings.brute_max_n,
        enumeration_max_n=settings.enumeration_max_n,
        decorated_max_n=settings.decorated_max_n,
        factorization_brute_max_n=settings.factorization_brute_max_n,
        oracle=oracle,
    )
