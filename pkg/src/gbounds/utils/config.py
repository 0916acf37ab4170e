"""
Configuration management for gbounds.

This module handles loading configuration from environment variables,
.env files, and provides defaults for the application.
"""

import os
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Optional

try:
    from dotenv import load_dotenv
except ImportError:
    load_dotenv = None


@dataclass
class AppConfig:
    """Main application configuration."""

    # Logging
    log_level: str = "INFO"
    log_file: Optional[str] = None
    enable_debug: bool = False

    # Parallelism
    workers: Optional[int] = None

    # Oracle limits
    oracle_max_n: int = 12
    gamma_limit: int = 24
    alpha_limit: int = 40
    enumeration_limit: int = 10_000_000

    # Random graphs
    rejection_cap: int = 10_000
    default_seed: int = 7

    # Development
    environment: str = "development"

    def resolved_workers(self) -> int:
        """Worker count with the CPU-count fallback applied."""
        return self.workers or os.cpu_count() or 1

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def _optional_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    return _env_int(name, 0)


def load_config(env_file: Optional[str] = None) -> AppConfig:
    """
    Load configuration from environment variables and .env file.

    Args:
        env_file: Path to .env file (defaults to .env in current directory)

    Returns:
        AppConfig instance with loaded configuration
    """
    if load_dotenv and env_file is None:
        env_file = ".env"

    if load_dotenv and env_file and Path(env_file).exists():
        load_dotenv(env_file)

    return AppConfig(
        # Logging
        log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
        log_file=os.getenv("LOG_FILE"),
        enable_debug=os.getenv("DEBUG", "false").lower() == "true",
        # Parallelism
        workers=_optional_int("GBOUNDS_WORKERS"),
        # Oracle limits
        oracle_max_n=_env_int("GBOUNDS_ORACLE_MAX_N", 12),
        gamma_limit=_env_int("GBOUNDS_GAMMA_LIMIT", 24),
        alpha_limit=_env_int("GBOUNDS_ALPHA_LIMIT", 40),
        enumeration_limit=_env_int("GBOUNDS_ENUMERATION_LIMIT", 10_000_000),
        # Random graphs
        rejection_cap=_env_int("GBOUNDS_REJECTION_CAP", 10_000),
        default_seed=_env_int("GBOUNDS_SEED", 7),
        # Development
        environment=os.getenv("ENVIRONMENT", "development"),
    )


def validate_config(config: AppConfig) -> None:
    """
    Validate configuration and raise errors for invalid settings.

    Args:
        config: Application configuration to validate

    Raises:
        ValueError: If a setting is out of range
    """
    if config.workers is not None and config.workers < 1:
        raise ValueError("GBOUNDS_WORKERS must be at least 1")

    if config.oracle_max_n < 0:
        raise ValueError("GBOUNDS_ORACLE_MAX_N must be non-negative")

    if config.gamma_limit < 1 or config.alpha_limit < 1:
        raise ValueError("GBOUNDS_GAMMA_LIMIT and GBOUNDS_ALPHA_LIMIT must be positive")

    if config.enumeration_limit < 1:
        raise ValueError("GBOUNDS_ENUMERATION_LIMIT must be positive")

    if config.rejection_cap < 1:
        raise ValueError("GBOUNDS_REJECTION_CAP must be positive")

    if not 0 <= config.default_seed < 2**64:
        raise ValueError("GBOUNDS_SEED must be a 64-bit non-negative integer")
