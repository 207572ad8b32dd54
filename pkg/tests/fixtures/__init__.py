"""Тестовые фикстуры и данные."""

from compoq.adapters.oracles import BruteForceCompositionOracle, RecurrenceCompositionOracle
from compoq.core.services.identity_verifier import IdentityVerificationService

# Coefficients of (q, q^4; q^5)_inf through q^30
RR_PRODUCT_30 = (
    1, -1, 0, 0, -1, 1, -1, 1, 0, -1,
    2, -2, 1, 1, -2, 3, -3, 2, 0, -3,
    5, -5, 3, 1, -5, 7, -7, 4, 1, -7,
    11,
)  # fmt: skip

PARTITIONS_10 = (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def build_identity_service(
    brute_max_n: int = 12, enumeration_max_n: int = 12, decorated_max_n: int = 8
) -> IdentityVerificationService:
    """Сервис с небольшими границами перебора для быстрых тестов."""
    return IdentityVerificationService(
        brute_oracle=BruteForceCompositionOracle(),
        dp_oracle=RecurrenceCompositionOracle(),
        brute_max_n=brute_max_n,
        enumeration_max_n=enumeration_max_n,
        decorated_max_n=decorated_max_n,
        factorization_brute_max_n=60,
    )
