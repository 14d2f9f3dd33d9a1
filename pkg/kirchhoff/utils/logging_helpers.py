"""
Logging utilities.
"""
import logging
import sys
from typing import Optional

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def log_error(e: Exception, context: str = "") -> None:
    """
    Log exception with full traceback.
    """
    prefix = f"{context}: " if context else ""
    logger.error(f"❌ {prefix}{e}", exc_info=(type(e), e, e.__traceback__))


def setup_logging(level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """
    Setup logging configuration.

    Console output goes to stderr; stdout carries reports only.

    Args:
        level: Console log level name
        log_file: Optional path of an ERROR-level log file
    """
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, level.upper(), logging.WARNING))
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handlers = [console_handler]

    if log_file:
        try:
            file_handler = logging.FileHandler(log_file, encoding="utf-8")
        except OSError as ex:
            logger.warning(f"⚠️  Cannot open log file {log_file}: {ex}")
        else:
            file_handler.setLevel(logging.ERROR)
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            handlers.append(file_handler)

    logging.basicConfig(
        level=min(h.level for h in handlers),
        handlers=handlers,
        force=True
    )
