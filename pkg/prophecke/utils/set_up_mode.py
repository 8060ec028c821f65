from loguru import logger
import os

from .errors import ConfigurationError

_MODES = ("generic", "charp")


def _get_default_mode():
    """Get the latest coefficient mode which was passed to set_up_mode.
    If set_up_mode has never been executed, return the value of PROP_HECKE_DEFAULT_MODE or "generic".
    """
    mode = os.environ.get("PROP_HECKE_DEFAULT_MODE", "generic")
    if mode not in _MODES:
        raise ConfigurationError(
            f"PROP_HECKE_DEFAULT_MODE is {mode!r}, expected one of {_MODES}."
        )
    return mode


def _get_cache_dir():
    """Directory for persisted cocycle tables, or None if PROP_HECKE_CACHE_DIR is unset."""
    return os.environ.get("PROP_HECKE_CACHE_DIR") or None


def set_up_mode(mode):
    """Configure the default coefficient mode of newly created Hecke algebras.

    Args:
        mode (string): "generic" for Laurent polynomial coefficients in v = q^(1/2), "charp" for coefficients in F_q.

    Raises:
        ConfigurationError: if the mode is unknown.
    """
    if mode not in _MODES:
        raise ConfigurationError(f"Unknown coefficient mode {mode!r}, use one of {_MODES}.")
    logger.info(f"Setting default coefficient mode to {mode}")
    os.environ["PROP_HECKE_DEFAULT_MODE"] = mode
