"""Persist-then-deliver outbox.

Posts are stored PENDING and drained later: at-least-once delivery, failed
posts retried on a capped exponential backoff schedule. The shipped
delivery adapter is a file sink; live network adapters plug in behind the
same interface.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from datetime import datetime, timedelta
from pathlib import Path
from typing import Protocol

from ..store import DocumentStore
from .posts import OutboxPost, PostState, post_from_doc, post_to_doc

OUTBOX = "outbox"

DEFAULT_BACKOFF_BASE_S = 60
DEFAULT_BACKOFF_CAP_S = 3600


class DeliveryAdapter(Protocol):
    adapter_id: str

    def deliver(self, post: OutboxPost) -> None:
        """Publish the post; raise on failure."""
        ...


class FileSinkAdapter:
    """Appends delivered posts to a local file, one per line."""

    def __init__(self, path: str | Path):
        self.adapter_id = "file-sink"
        self.path = Path(path)

    def deliver(self, post: OutboxPost) -> None:
        with self.path.open("a", encoding="utf-8") as sink:
            sink.write(f"{post.channel_id}\t{post.post_id}\t{post.body}\n")


class MemorySinkAdapter:
    def __init__(self, fail: bool = False):
        self.adapter_id = "memory-sink"
        self.delivered: list[OutboxPost] = []
        self.fail = fail

    def deliver(self, post: OutboxPost) -> None:
        if self.fail:
            raise RuntimeError("adapter down")
        self.delivered.append(post)


@dataclass
class DrainReport:
    delivered: list[str] = field(default_factory=list)
    failed: list[tuple[str, str]] = field(default_factory=list)  # (post_id, error)
    skipped: int = 0  # not yet due for retry


class Outbox:
    def __init__(
        self,
        store: DocumentStore,
        backoff_base_s: int = DEFAULT_BACKOFF_BASE_S,
        backoff_cap_s: int = DEFAULT_BACKOFF_CAP_S,
    ):
        self.store = store
        self.backoff_base_s = backoff_base_s
        self.backoff_cap_s = backoff_cap_s

    def enqueue(self, post: OutboxPost) -> None:
        self.store.put(OUTBOX, post.post_id, post_to_doc(post))

    def posts(self) -> list[OutboxPost]:
        return [post_from_doc(doc) for doc in self.store.values(OUTBOX)]

    def pending(self, now: datetime) -> list[OutboxPost]:
        return [
            post
            for post in self.posts()
            if post.state is not PostState.DELIVERED
            and (post.next_attempt_at is None or post.next_attempt_at <= now)
        ]

    def drain(self, adapter: DeliveryAdapter, limit: int, now: datetime) -> DrainReport:
        """Attempt up to `limit` due posts; adapter failures never abort."""
        if limit <= 0:
            raise ValueError("drain limit must be positive")
        report = DrainReport()
        due = self.pending(now)
        report.skipped = max(len(due) - limit, 0)
        for post in due[:limit]:
            claimed = self._claim(post.post_id)
            if claimed is None:
                continue  # another drainer took it
            try:
                adapter.deliver(claimed)
            except Exception as err:
                failed = self._schedule_retry(claimed, now, str(err))
                report.failed.append((failed.post_id, str(err)))
            else:
                self._mark(claimed, state=PostState.DELIVERED, last_error=None)
                report.delivered.append(claimed.post_id)
        return report

    def _claim(self, post_id: str) -> OutboxPost | None:
        # Claim-by-update: bump the attempt counter atomically so a
        # concurrent drain in this process cannot pick the same post twice.
        with self.store.transaction():
            doc = self.store.get(OUTBOX, post_id)
            if doc is None or doc["state"] == PostState.DELIVERED.value:
                return None
            post = post_from_doc(doc)
            claimed = replace(post, attempts=post.attempts + 1)
            self.store.put(OUTBOX, post_id, post_to_doc(claimed))
            return claimed

    def _schedule_retry(self, post: OutboxPost, now: datetime, error: str) -> OutboxPost:
        delay = min(self.backoff_base_s * 2 ** (post.attempts - 1), self.backoff_cap_s)
        failed = replace(
            post,
            state=PostState.FAILED,
            last_error=error,
            next_attempt_at=now + timedelta(seconds=delay),
        )
        self.store.put(OUTBOX, post.post_id, post_to_doc(failed))
        return failed

    def _mark(self, post: OutboxPost, state: PostState, last_error: str | None) -> None:
        self.store.put(
            OUTBOX,
            post.post_id,
            post_to_doc(replace(post, state=state, last_error=last_error, next_attempt_at=None)),
        )
