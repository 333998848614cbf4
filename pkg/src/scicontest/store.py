"""Embedded transactional store.

A small document store over sqlite: one keyed table for current state and
one append-only table for ordered logs (metric samples, events, audit).
Tests run it on ":memory:"; `serve` points it at a file. A single
connection guarded by a re-entrant lock serializes writers, which is what
the one-finalize-per-account invariant relies on.
"""

from __future__ import annotations

import json
import sqlite3
import threading
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator


class DocumentStore:
    def __init__(self, path: str | Path = ":memory:"):
        self.path = str(path)
        self._conn = sqlite3.connect(self.path, check_same_thread=False)
        self._conn.isolation_level = None  # explicit transaction control
        self._lock = threading.RLock()
        self._depth = 0
        with self.transaction():
            self._conn.execute(
                "CREATE TABLE IF NOT EXISTS kv ("
                " coll TEXT NOT NULL, key TEXT NOT NULL, doc TEXT NOT NULL,"
                " PRIMARY KEY (coll, key))"
            )
            self._conn.execute(
                "CREATE TABLE IF NOT EXISTS log ("
                " seq INTEGER PRIMARY KEY AUTOINCREMENT,"
                " coll TEXT NOT NULL, doc TEXT NOT NULL)"
            )
            self._conn.execute("CREATE INDEX IF NOT EXISTS log_coll ON log (coll, seq)")

    @contextmanager
    def transaction(self) -> Iterator[None]:
        """Atomic read-modify-write scope; re-entrant within a thread."""
        with self._lock:
            if self._depth == 0:
                self._conn.execute("BEGIN IMMEDIATE")
            self._depth += 1
            try:
                yield
            except BaseException:
                self._depth -= 1
                if self._depth == 0:
                    self._conn.execute("ROLLBACK")
                raise
            else:
                self._depth -= 1
                if self._depth == 0:
                    self._conn.execute("COMMIT")

    def put(self, coll: str, key: str, doc: dict[str, Any]) -> None:
        with self.transaction():
            self._conn.execute(
                "INSERT INTO kv (coll, key, doc) VALUES (?, ?, ?)"
                " ON CONFLICT (coll, key) DO UPDATE SET doc = excluded.doc",
                (coll, key, json.dumps(doc, sort_keys=True)),
            )

    def get(self, coll: str, key: str) -> dict[str, Any] | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT doc FROM kv WHERE coll = ? AND key = ?", (coll, key)
            ).fetchone()
        return json.loads(row[0]) if row else None

    def delete(self, coll: str, key: str) -> bool:
        with self.transaction():
            cursor = self._conn.execute(
                "DELETE FROM kv WHERE coll = ? AND key = ?", (coll, key)
            )
            return cursor.rowcount > 0

    def items(self, coll: str) -> list[tuple[str, dict[str, Any]]]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT key, doc FROM kv WHERE coll = ? ORDER BY key", (coll,)
            ).fetchall()
        return [(key, json.loads(doc)) for key, doc in rows]

    def values(self, coll: str) -> list[dict[str, Any]]:
        return [doc for _key, doc in self.items(coll)]

    def count(self, coll: str) -> int:
        with self._lock:
            (n,) = self._conn.execute(
                "SELECT COUNT(*) FROM kv WHERE coll = ?", (coll,)
            ).fetchone()
        return n

    def append(self, coll: str, doc: dict[str, Any]) -> None:
        with self.transaction():
            self._conn.execute(
                "INSERT INTO log (coll, doc) VALUES (?, ?)",
                (coll, json.dumps(doc, sort_keys=True)),
            )

    def log_entries(self, coll: str) -> list[dict[str, Any]]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT doc FROM log WHERE coll = ? ORDER BY seq", (coll,)
            ).fetchall()
        return [json.loads(doc) for (doc,) in rows]

    def close(self) -> None:
        with self._lock:
            self._conn.close()
