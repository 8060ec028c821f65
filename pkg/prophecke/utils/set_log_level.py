from loguru import logger
import sys

_current_level = {"name": "WARNING"}


def set_log_level(log_level: str):
    """Set the log level for the logger.
    The preset log level when initialising prophecke is the value of the PROP_HECKE_LOG_LEVEL environment variable, or 'WARNING' if the environment variable is unset.

    Args:
        log_level (str): The log level to set. Options are 'TRACE','DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL'
    """
    logger.remove()
    logger.add(
        sys.stderr,
        level=log_level,
        format="<green>{time:HH:mm:ss}</green>|PH-<blue>{level}</blue>| <level>{message}</level>",
    )
    _current_level["name"] = log_level
    logger.debug(f"Setting LogLevel to {log_level}")


def _progress_enabled():
    """Return True if tqdm progress bars should be shown, i.e. if INFO messages are emitted."""
    return logger.level(_current_level["name"]).no <= logger.level("INFO").no
