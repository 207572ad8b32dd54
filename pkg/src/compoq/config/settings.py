"""Application configuration via pydantic settings."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings.

    Every field can be overridden through a ``COMPOQ_``-prefixed environment
    variable or a ``.env`` file; CLI flags take precedence over both.
    """

    model_config = SettingsConfigDict(
        env_prefix="COMPOQ_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Main settings
    app_name: str = "compoq"
    app_version: str = "0.1.0"

    # Truncation and verification ranges
    order: int = Field(default=200, ge=0, description="Default truncation order N for series")
    max_n: int = Field(default=60, ge=0, description="Default upper n for identity verification")
    brute_max_n: int = Field(
        default=25, ge=0, description="Upper n for the exponential brute-force composition oracle"
    )
    oracle: str = Field(default="both", description="Composition oracle: brute, dp, both")
    enumeration_max_n: int = Field(
        default=30, ge=0, description="Upper n for direct partition/overpartition enumeration"
    )
    decorated_max_n: int = Field(
        default=15, ge=0, description="Upper n for direct colour-decorated enumeration"
    )
    factorization_brute_max_n: int = Field(
        default=500, ge=1, description="Upper n for enumerating ordered factorizations"
    )

    # Feasibility limits
    max_feasible_n: int = Field(
        default=100_000, ge=1, description="Largest order or index accepted before refusing"
    )
    max_feasible_brute_n: int = Field(
        default=40, ge=0, description="Largest brute-force bound accepted before refusing"
    )

    # Real evaluation
    precision_digits: int = Field(
        default=50, ge=15, description="Decimal digits for mpmath evaluations"
    )
    zeta_bound: int = Field(
        default=10_000, ge=1, description="Default Dirichlet truncation bound B"
    )

    # Output
    output_format: str | None = Field(
        default=None, description="Output format: json, csv; unset picks per command"
    )

    # Logging
    log_level: str = Field(default="INFO", description="Logging level")


def get_settings() -> Settings:
    """Get application settings."""
    return Settings()
