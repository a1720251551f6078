"""Resource ceilings and cache location, overridable from the environment."""

import os
from pathlib import Path

CACHE_ENV = "GCTKIT_CACHE_DIR"
DEFAULT_CACHE_DIR = Path.home() / ".cache" / "gctkit"


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return int(raw)


def cache_dir():
    """Directory holding on-disk tables. ``GCTKIT_CACHE_DIR=""`` is not allowed."""
    raw = os.environ.get(CACHE_ENV)
    return Path(raw) if raw else DEFAULT_CACHE_DIR


def caching_enabled():
    return os.environ.get("GCTKIT_NO_CACHE", "") in ("", "0")


# Largest n for which a full S_n character table is generated.
def max_table_n():
    return _env_int("GCTKIT_MAX_TABLE_N", 18)


# Largest length of the partition indexing the alternating sum in kron_lr.
def max_klr_length():
    return _env_int("GCTKIT_MAX_KLR_LENGTH", 6)


# Largest size n*delta accepted by plethysm decompositions and gct sets.
def max_plethysm_size():
    return _env_int("GCTKIT_MAX_PLETHYSM_SIZE", 16)


def max_gct_size():
    return _env_int("GCTKIT_MAX_GCT_SIZE", 14)


# Stanley's formula sums over (delta*n)! products.
def max_stanley_size():
    return _env_int("GCTKIT_MAX_STANLEY_SIZE", 7)
