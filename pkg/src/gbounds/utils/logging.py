"""
Logging configuration for gbounds.

Records go to stderr so stdout stays machine-readable (graph6 lines, JSON
reports, CSV). Console output is routed through ``tqdm.write`` so that log
lines emitted during a batch or a protocol run do not tear the progress bar.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

from tqdm import tqdm

PACKAGE_LOGGER = "gbounds"

_PLAIN_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"
_DEBUG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"


class TqdmStderrHandler(logging.StreamHandler):
    """Console handler that writes above any active tqdm bar."""

    def __init__(self) -> None:
        super().__init__(sys.stderr)

    def emit(self, record: logging.LogRecord) -> None:
        try:
            tqdm.write(self.format(record), file=self.stream)
            self.flush()
        except Exception:
            self.handleError(record)


def setup_logging(
    level: str = "INFO",
    log_file: Optional[str] = None,
    enable_debug: bool = False,
) -> None:
    """
    Configure the root logger for a command-line run.

    Previous root handlers are removed, so calling this twice does not
    duplicate output.

    Args:
        level: Logging level name, case-insensitive
        log_file: Optional file that receives the same records
        enable_debug: Use the verbose format with logger name and file:line
    """
    numeric_level = getattr(logging, level.upper(), logging.INFO)
    formatter = logging.Formatter(_DEBUG_FORMAT if enable_debug else _PLAIN_FORMAT)

    root_logger = logging.getLogger()
    root_logger.setLevel(numeric_level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handlers: list[logging.Handler] = [TqdmStderrHandler()]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    for handler in handlers:
        handler.setLevel(numeric_level)
        handler.setFormatter(formatter)
        root_logger.addHandler(handler)

    logging.getLogger(PACKAGE_LOGGER).setLevel(numeric_level)
    get_logger(__name__).debug(
        f"Logging configured: level={level}, file={log_file}, debug={enable_debug}"
    )


def get_logger(name: str) -> logging.Logger:
    """Logger for a gbounds module (pass ``__name__``)."""
    return logging.getLogger(name)
