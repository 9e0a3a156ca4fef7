"""Append-only JSON-lines cache for search results.

Each line holds {"key", "created_at", "record"}; the record is the search's
JSON body and is returned verbatim on a hit.  Timestamps live outside the
record so cached and fresh payloads compare equal.  Corrupt lines are never
silently trusted: they trigger a warning and a compacting rewrite.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import time
from typing import Callable

ENV_VAR = "TURANMATCH_CACHE"

try:
    import fcntl

    def _lock(handle):
        fcntl.flock(handle.fileno(), fcntl.LOCK_EX)

    def _unlock(handle):
        fcntl.flock(handle.fileno(), fcntl.LOCK_UN)
except ImportError:  # pragma: no cover - non-POSIX
    def _lock(handle):
        pass

    def _unlock(handle):
        pass


def default_cache_path() -> str:
    return os.environ.get(
        ENV_VAR,
        os.path.join(os.path.expanduser("~"), ".cache", "turanmatch", "searches.jsonl"),
    )


def search_key(n: int, r: int, forbidden_graph6: list[str], s: int | None) -> str:
    body = json.dumps(
        {"n": n, "r": r, "forbidden": sorted(forbidden_graph6), "s": s},
        sort_keys=True,
    )
    return hashlib.sha256(body.encode()).hexdigest()


_RECORD_FIELDS = ("n", "r", "forbidden", "s", "value", "witnesses", "nodes", "millis")


def _valid_entry(entry) -> bool:
    return (
        isinstance(entry, dict)
        and isinstance(entry.get("key"), str)
        and isinstance(entry.get("record"), dict)
        and all(field in entry["record"] for field in _RECORD_FIELDS)
    )


def _read_entries(path: str) -> tuple[list[dict], bool]:
    entries: list[dict] = []
    corrupt = False
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError:
                    corrupt = True
                    continue
                if _valid_entry(entry):
                    entries.append(entry)
                else:
                    corrupt = True
    except FileNotFoundError:
        pass
    return entries, corrupt


def lookup(path: str, key: str) -> dict | None:
    entries, corrupt = _read_entries(path)
    if corrupt:
        print(f"warning: cache file {path} has corrupt lines; rebuilding", file=sys.stderr)
        _rewrite(path, entries)
    for entry in entries:
        if entry["key"] == key:
            return entry["record"]
    return None


def _rewrite(path: str, entries: list[dict]) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "a+", encoding="utf-8") as handle:
        _lock(handle)
        try:
            handle.seek(0)
            handle.truncate()
            for entry in entries:
                handle.write(json.dumps(entry) + "\n")
        finally:
            _unlock(handle)


def append(path: str, key: str, record: dict) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    entry = {"key": key, "created_at": int(time.time()), "record": record}
    with open(path, "a", encoding="utf-8") as handle:
        _lock(handle)
        try:
            handle.write(json.dumps(entry) + "\n")
        finally:
            _unlock(handle)


def lookup_or_compute(path: str, key: str, compute: Callable[[], dict]) -> tuple[dict, bool]:
    """Cached record if the key matches, else compute-and-persist."""
    record = lookup(path, key)
    if record is not None:
        return record, True
    record = compute()
    append(path, key, record)
    return record, False
