import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

# ============ Configuration ============

env_path = Path(__file__).resolve().parent / ".env"
load_dotenv(dotenv_path=env_path)

from kirchhoff.cli import run  # noqa: E402
from kirchhoff.config.settings import LOG_FILE, LOG_LEVEL  # noqa: E402
from kirchhoff.utils.logging_helpers import setup_logging  # noqa: E402

setup_logging(LOG_LEVEL, LOG_FILE or None)
logger = logging.getLogger(__name__)

logger.debug(f"📁 Loading .env from: {env_path}")


# ============ Entry Point ============
if __name__ == "__main__":
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        logger.info("👋 Interrupted by user (Ctrl+C)")
        sys.exit(130)
    except Exception as e:
        logger.critical(f"❌ Fatal error: {e}", exc_info=True)
        sys.exit(1)
