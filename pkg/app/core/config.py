"""
Application configuration using Pydantic Settings
Every enumeration guard lives here so it can be raised from the environment
"""
from pydantic_settings import BaseSettings
from pydantic import Field, field_validator, model_validator


LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables
    """

    # Project
    PROJECT_NAME: str = Field(default="SigmaK", description="Project name")
    LOG_LEVEL: str = Field(default="INFO", description="Root log level")

    # Enumeration guards
    BRUTE_FORCE_MAX_N: int = Field(
        default=25,
        ge=1,
        le=30,
        description="Largest order accepted by the subset-enumeration oracle"
    )
    CANONICAL_MAX_N: int = Field(
        default=10,
        ge=1,
        le=16,
        description="Largest order accepted by canonical labeling"
    )
    MASK_ENUMERATION_MAX_N: int = Field(
        default=6,
        ge=1,
        le=7,
        description="Largest order enumerated by scanning every upper-triangle mask"
    )
    ENUMERATE_ALL_MAX_N: int = Field(default=8, ge=1, description="Guard for enumerating all graphs")
    ENUMERATE_CONNECTED_MAX_N: int = Field(default=9, ge=1, description="Guard for enumerating connected graphs")
    H_GENERATE_MAX_ORDER: int = Field(default=10, ge=1, description="Guard for the good-graph closure")
    H_VERIFY_MAX_ORDER: int = Field(default=8, ge=1, description="Guard for the good-graph characterization check")
    MIN_BOUND_MAX_N: int = Field(default=8, ge=1, description="Guard for the lower-bound check")
    MAX_BOUND_MIN_N: int = Field(default=6, ge=6, description="Smallest order of the upper-bound check")
    MAX_BOUND_MAX_N: int = Field(default=8, ge=6, description="Largest order of the upper-bound check")
    TABLE_MAX_N: int = Field(default=8, ge=1, description="Guard for distribution tables")

    # Arithmetic
    COUNT_BITS: int = Field(
        default=128,
        ge=64,
        description="Width of the checked Count type in bits"
    )

    # Execution
    JOBS: int = Field(default=1, ge=1, description="Default worker processes for enumeration")
    PORT: int = Field(default=8000, description="HTTP server port")

    @property
    def count_limit(self) -> int:
        """Exclusive upper bound for a Count value"""
        return 1 << self.COUNT_BITS

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Unknown LOG_LEVEL: {v}")
        return level

    @model_validator(mode='after')
    def validate_ranges(self):
        """Max-bound range must be non-empty and enumeration guards consistent"""
        if self.MAX_BOUND_MIN_N > self.MAX_BOUND_MAX_N:
            raise ValueError(
                f"MAX_BOUND_MIN_N ({self.MAX_BOUND_MIN_N}) exceeds MAX_BOUND_MAX_N ({self.MAX_BOUND_MAX_N})"
            )
        if self.MASK_ENUMERATION_MAX_N > self.ENUMERATE_ALL_MAX_N:
            raise ValueError("MASK_ENUMERATION_MAX_N cannot exceed ENUMERATE_ALL_MAX_N")
        return self

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True
        extra = "ignore"


# Global settings instance
settings = Settings()
