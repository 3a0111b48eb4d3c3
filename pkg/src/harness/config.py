"""
Runtime Settings
Defaults for randomized checks and parallelism, read from TWISTLOOP_* environment
variables after loading a .env file when one exists.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

ENV_PREFIX = "TWISTLOOP_"


class Settings(BaseModel):
    """Per-process configuration; CLI flags override individual fields per invocation"""

    seed: int = 20250710
    trials: int = Field(24, ge=1)
    order_cap: int = Field(24, ge=1)
    n_jobs: int = 1
    image_bound: int = Field(3, ge=0)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def known_level(cls, v: str) -> str:
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level '{v}'")
        return level

    @classmethod
    def from_env(cls) -> "Settings":
        values = {}
        for name in cls.model_fields:
            raw = os.getenv(ENV_PREFIX + name.upper())
            if raw is not None:
                values[name] = raw
        return cls.model_validate(values)


# Global settings instance
settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the global settings, loading them on first use"""
    if settings is None:
        return initialize_settings()
    return settings


def initialize_settings(env_file: Optional[str] = None) -> Settings:
    """(Re)load settings from the environment and an optional .env file"""
    global settings
    load_dotenv(env_file)
    settings = Settings.from_env()
    logger.debug(f"settings loaded: {settings.model_dump()}")
    return settings
