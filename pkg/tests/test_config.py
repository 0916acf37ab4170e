"""
Tests for configuration loading and logging setup.
"""

import logging
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from gbounds.utils.config import AppConfig, load_config, validate_config
from gbounds.utils.logging import TqdmStderrHandler, setup_logging


class TestLoadConfig:
    """Test cases for environment-driven configuration."""

    def test_defaults(self, tmp_path, monkeypatch):
        """Test the defaults with no environment and no .env file."""
        monkeypatch.chdir(tmp_path)
        config = load_config()
        assert config.log_level == "INFO"
        assert config.workers is None
        assert config.oracle_max_n == 12
        assert config.gamma_limit == 24
        assert config.rejection_cap == 10_000
        assert config.default_seed == 7

    def test_environment_overrides(self, tmp_path, monkeypatch):
        """Test that GBOUNDS_* variables are read."""
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("LOG_LEVEL", "debug")
        monkeypatch.setenv("GBOUNDS_WORKERS", "3")
        monkeypatch.setenv("GBOUNDS_ORACLE_MAX_N", "9")
        monkeypatch.setenv("GBOUNDS_SEED", "123")
        config = load_config()
        assert config.log_level == "DEBUG"
        assert config.workers == 3
        assert config.oracle_max_n == 9
        assert config.default_seed == 123

    def test_env_file(self, tmp_path, monkeypatch):
        """Test reading a .env file."""
        monkeypatch.chdir(tmp_path)
        # Registers the variable so the value loaded from the file is undone.
        monkeypatch.setenv("GBOUNDS_REJECTION_CAP", "1")
        monkeypatch.delenv("GBOUNDS_REJECTION_CAP")
        env_file = tmp_path / "custom.env"
        env_file.write_text("GBOUNDS_REJECTION_CAP=50\n", encoding="utf-8")
        config = load_config(str(env_file))
        assert config.rejection_cap == 50

    def test_blank_workers(self, tmp_path, monkeypatch):
        """Test that an empty worker count means 'use all CPUs'."""
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("GBOUNDS_WORKERS", " ")
        config = load_config()
        assert config.workers is None
        assert config.resolved_workers() >= 1

    def test_non_integer(self, tmp_path, monkeypatch):
        """Test that a malformed number names its variable."""
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("GBOUNDS_GAMMA_LIMIT", "many")
        with pytest.raises(ValueError, match="GBOUNDS_GAMMA_LIMIT"):
            load_config()


class TestValidateConfig:
    """Test cases for configuration validation."""

    def test_valid(self):
        """Test that the defaults validate."""
        validate_config(AppConfig())

    @pytest.mark.parametrize(
        "overrides",
        [
            {"workers": 0},
            {"oracle_max_n": -1},
            {"gamma_limit": 0},
            {"enumeration_limit": 0},
            {"rejection_cap": 0},
            {"default_seed": 2**64},
        ],
    )
    def test_invalid(self, overrides):
        """Test each out-of-range setting."""
        with pytest.raises(ValueError):
            validate_config(AppConfig(**overrides))

    def test_resolved_workers(self):
        """Test an explicit worker count."""
        assert AppConfig(workers=2).resolved_workers() == 2


class TestSetupLogging:
    """Test cases for logging setup."""

    def test_file_handler(self, tmp_path):
        """Test that a log file is created and written."""
        log_file = tmp_path / "logs" / "gbounds.log"
        setup_logging(level="DEBUG", log_file=str(log_file))
        logging.getLogger("gbounds.test").info("hello")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "hello" in log_file.read_text()

    def test_level(self):
        """Test that the package logger follows the requested level."""
        setup_logging(level="warning")
        assert logging.getLogger("gbounds").level == logging.WARNING

    def test_console_on_stderr(self, capsys):
        """Test that console records go to stderr through the tqdm-aware handler."""
        setup_logging(level="INFO")
        assert isinstance(logging.getLogger().handlers[0], TqdmStderrHandler)
        logging.getLogger("gbounds.test").warning("boom")
        captured = capsys.readouterr()
        assert "boom" in captured.err
        assert "boom" not in captured.out

    def test_repeated_setup(self):
        """Test that a second call replaces the handlers instead of adding more."""
        setup_logging(level="INFO")
        setup_logging(level="INFO")
        assert len(logging.getLogger().handlers) == 1
