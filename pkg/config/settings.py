"""Configuration settings for the plateaued-code toolkit"""

from functools import lru_cache

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Main application settings"""

    # Logging
    PLATEAU_LOG_LEVEL: str = "WARNING"

    # Desk-scale caps
    PLATEAU_MAX_ENUM: int = 100_000_000  # p^k * n symbols per enumeration, q^2 Walsh cells
    PLATEAU_MAX_FIELD: int = 2 ** 16
    PLATEAU_MAX_BINARY_M: int = 12

    # Execution
    PLATEAU_WORKERS: int = 1
    PLATEAU_ENUM_CHUNK: int = 4096  # messages per enumeration chunk

    class Config:
        env_file = ".env"
        case_sensitive = True


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
