"""Load config from environment. Tolerance, default reduction method and output precision."""
import logging
import os

from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, str(default)).strip())
    except (ValueError, TypeError):
        return default


def _float_env(name: str, default: float) -> float:
    try:
        return float(os.environ.get(name, str(default)).strip())
    except (ValueError, TypeError):
        return default


METHODS = ("matrix", "involution", "both")

# Default tolerance for quaternion equality, form equivalence and `--tol`
TOLERANCE = _float_env("LQF_TOLERANCE", 1e-12)
if not TOLERANCE >= 0:
    TOLERANCE = 1e-12

DEFAULT_METHOD = os.environ.get("LQF_METHOD", "matrix").strip().lower()
if DEFAULT_METHOD not in METHODS:
    DEFAULT_METHOD = "matrix"

# Significant digits when printing numbers; 12 keeps golden output stable
SIGNIFICANT_DIGITS = _int_env("LQF_SIGNIFICANT_DIGITS", 12)
if not 1 <= SIGNIFICANT_DIGITS <= 17:
    SIGNIFICANT_DIGITS = 12

# Partitioned reduction of long term lists (1 worker = sequential)
REDUCE_WORKERS = max(1, _int_env("LQF_REDUCE_WORKERS", 1))
PARTITION_SIZE = max(1, _int_env("LQF_PARTITION_SIZE", 64))

_log_level = os.environ.get("LOG_LEVEL", "INFO").strip().upper()
LOG_LEVEL = getattr(logging, _log_level, None) or logging.INFO
if not isinstance(LOG_LEVEL, int):
    LOG_LEVEL = logging.INFO
