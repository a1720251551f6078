"""On-disk JSON cache, one file per (kind, n), with a format-version header."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import shutil
import tempfile
from pathlib import Path

from . import config

log = logging.getLogger(__name__)

FORMAT_VERSION = 1


def _path(kind: str, n: int) -> Path:
    return config.cache_dir() / f"{kind}_n{n}.json"


def load(kind: str, n: int):
    """Return the cached payload, or None when absent, disabled or stale."""
    if not config.caching_enabled():
        return None
    path = _path(kind, n)
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        return None
    except (OSError, json.JSONDecodeError) as exc:
        log.warning("ignoring unreadable cache file %s: %s", path, exc)
        return None
    if doc.get("format_version") != FORMAT_VERSION or doc.get("kind") != kind or doc.get("n") != n:
        log.warning("ignoring cache file %s with mismatched header", path)
        return None
    return doc["payload"]


def store(kind: str, n: int, payload) -> None:
    if not config.caching_enabled():
        return
    path = _path(kind, n)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {"format_version": FORMAT_VERSION, "kind": kind, "n": n, "payload": payload}
    text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    # atomic replace so concurrent readers never see a torn file
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def clear() -> int:
    """Remove every cache file; returns how many were removed."""
    root = config.cache_dir()
    if not root.exists():
        return 0
    count = sum(1 for p in root.iterdir() if p.is_file())
    shutil.rmtree(root)
    root.mkdir(parents=True, exist_ok=True)
    return count


def files() -> list[Path]:
    root = config.cache_dir()
    if not root.exists():
        return []
    return sorted(p for p in root.iterdir() if p.is_file() and p.suffix == ".json")


def state_digest() -> str:
    """SHA-256 over the names and contents of all cache files."""
    h = hashlib.sha256()
    for p in files():
        h.update(p.name.encode())
        h.update(p.read_bytes())
    return h.hexdigest()
