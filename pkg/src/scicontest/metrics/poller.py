"""Metrics collection from a pluggable provider.

A poll cycle asks the provider for current counters of every live
submission and appends one sample per reachable one. Unreachable entries
are skipped for the cycle and flagged once they fail too many cycles in a
row; a failing provider never aborts the cycle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import Iterable, Protocol

from ..submissions.media import MediaLink
from ..submissions.model import Submission
from .samples import MetricsSample

log = logging.getLogger(__name__)

DEFAULT_FAILURE_FLAG_THRESHOLD = 5


@dataclass(frozen=True)
class MetricCounts:
    views: int
    likes: int
    shares: int


class MetricsProvider(Protocol):
    """Read-only metrics source for one or more hosting platforms."""

    provider_id: str

    def fetch(self, media_link: MediaLink) -> MetricCounts | None:
        """Current counters, or None when the link is unavailable."""
        ...


class StubProvider:
    """Inert stand-in for a live platform adapter.

    Always unavailable; keeps the system degrading loudly instead of
    silently when no real adapter is configured.
    """

    def __init__(self, platform_name: str):
        self.provider_id = f"{platform_name}-stub"
        self._warned = False

    def fetch(self, media_link: MediaLink) -> MetricCounts | None:
        if not self._warned:
            log.warning(
                "no live %s adapter configured; metrics unavailable", self.provider_id
            )
            self._warned = True
        return None


@dataclass
class PollOutcome:
    samples: list[MetricsSample] = field(default_factory=list)
    failures: list[tuple[str, str]] = field(default_factory=list)  # (submission_id, reason)
    newly_flagged: list[str] = field(default_factory=list)


@dataclass
class PollTracker:
    """Consecutive-failure bookkeeping across cycles."""

    flag_threshold: int = DEFAULT_FAILURE_FLAG_THRESHOLD
    consecutive_failures: dict[str, int] = field(default_factory=dict)
    flagged: set[str] = field(default_factory=set)

    def record_success(self, submission_id: str) -> None:
        self.consecutive_failures.pop(submission_id, None)
        self.flagged.discard(submission_id)

    def record_failure(self, submission_id: str) -> bool:
        count = self.consecutive_failures.get(submission_id, 0) + 1
        self.consecutive_failures[submission_id] = count
        if count >= self.flag_threshold and submission_id not in self.flagged:
            self.flagged.add(submission_id)
            return True
        return False


def poll_cycle(
    submissions: Iterable[Submission],
    provider: MetricsProvider,
    now: datetime,
    tracker: PollTracker | None = None,
) -> PollOutcome:
    """One collection pass over the live submissions.

    Never mutates submissions or prior samples; per-submission provider
    errors are recorded and the cycle continues.
    """
    tracker = tracker if tracker is not None else PollTracker()
    outcome = PollOutcome()
    for submission in submissions:
        if not submission.is_live:
            continue
        try:
            counts = provider.fetch(submission.media_link)
        except Exception as err:  # provider bugs must not abort the cycle
            log.warning("provider error for %s: %s", submission.submission_id, err)
            outcome.failures.append((submission.submission_id, f"PROVIDER_ERROR: {err}"))
            if tracker.record_failure(submission.submission_id):
                outcome.newly_flagged.append(submission.submission_id)
            continue
        if counts is None:
            outcome.failures.append((submission.submission_id, "UNAVAILABLE"))
            if tracker.record_failure(submission.submission_id):
                outcome.newly_flagged.append(submission.submission_id)
            continue
        tracker.record_success(submission.submission_id)
        outcome.samples.append(
            MetricsSample(
                submission_id=submission.submission_id,
                observed_at=now,
                views=counts.views,
                likes=counts.likes,
                shares=counts.shares,
                provider_id=provider.provider_id,
            )
        )
    return outcome
