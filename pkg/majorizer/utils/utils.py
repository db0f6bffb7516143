"""
utils.py
Shared helpers: logger factory, JSON files and environment-backed settings.
"""

import os
import json
import logging
from typing import Optional

# **********************************
# Constants and parameters
# **********************************

FORMAT = (
    "%(asctime)s - %(name)-10s - %(filename)-18s - %(funcName)-12s - "
    "%(levelname)-8s - %(message)s"
)  # noqa

ENV_PREFIX = "MAJORIZER_"
DEFAULT_LEVEL = "WARNING"


# **********************************
# Functions definition
# **********************************


def _level_from_env(default=DEFAULT_LEVEL):
    """Resolve the logging level from ``MAJORIZER_LOG_LEVEL``."""
    name = os.environ.get(f"{ENV_PREFIX}LOG_LEVEL", default).upper()
    return getattr(logging, name, logging.WARNING)


def get_logger(name=None, level=None, format=FORMAT):
    """Return a logger of the specified name and level.

    Args:
        name : the name of the logger. If no name is specified, root logger is returned.
        level : logging level; defaults to ``MAJORIZER_LOG_LEVEL`` or WARNING.
        format : format for the logger.

    Returns:
        A configured ``logging.Logger`` instance.

    Multiple calls to get_logger() with the same name return a reference to the same logger
    object. Handlers write to stderr so command output on stdout stays machine-readable.

    """

    if not name:
        return logging.getLogger()

    logger = logging.getLogger(name)
    if len(logger.handlers) != 0:
        return logger

    logger.setLevel(level if level is not None else _level_from_env())
    formatter = logging.Formatter(format)

    ch = logging.StreamHandler()
    ch.setFormatter(formatter)
    logger.addHandler(ch)

    # set propagate to False to prevent the logger from propagating to the root logger
    logger.propagate = False
    return logger


def env_float(key: str, default: float) -> float:
    """Read a float setting ``MAJORIZER_<key>`` from the environment.

    Args:
        key : Setting name without the prefix.
        default : Value used when the variable is unset or empty.

    Returns:
        The parsed float.

    """
    raw = os.environ.get(f"{ENV_PREFIX}{key}")
    if raw is None or not raw.strip():
        return default
    return float(raw)


def env_int(key: str, default: int) -> int:
    """Read an integer setting ``MAJORIZER_<key>`` from the environment."""
    raw = os.environ.get(f"{ENV_PREFIX}{key}")
    if raw is None or not raw.strip():
        return default
    return int(raw)


def read_json(path):
    """Read JSON from a file and return the parsed object.

    Args:
        path : Path to the JSON file to read.

    Returns:
        The parsed Python object from the JSON file.

    """
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def write_json(path, data, indent: Optional[int] = 2):
    """Write a Python object to a JSON file, creating parent directories.

    Args:
        path : Destination file path.
        data : The Python object to serialize as JSON.
        indent : Pretty-printing indentation (default: 2).

    Returns:
        None

    """
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=indent)
