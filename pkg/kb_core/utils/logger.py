import logging
import os

logging.basicConfig(
    level=os.getenv("KB_LOG_LEVEL", "WARNING").upper(),
    format="[%(asctime)s] %(levelname)s: %(message)s"
)

logger = logging.getLogger("KB_Engine")


def get_logger(name: str) -> logging.Logger:
    """Child logger under the engine logger, e.g. KB_Engine.kb_core.autgroup.search."""
    return logger.getChild(name)
