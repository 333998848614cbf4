"""Metric samples and the frozen snapshot the rating engine consumes.

Sample history is append-only; rankings are computed exclusively from the
snapshot taken at the freeze instant, so late or retro-corrected platform
numbers can never move a result afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from typing import Any, Iterable, Mapping

from ..errors import ContestError
from ..submissions.model import Submission
from ..timeutil import parse_rfc3339, rfc3339

NO_DATA = "NO_DATA"


@dataclass(frozen=True)
class MetricsSample:
    submission_id: str
    observed_at: datetime
    views: int
    likes: int
    shares: int
    provider_id: str

    def __post_init__(self):
        if min(self.views, self.likes, self.shares) < 0:
            raise ContestError("INVALID_SAMPLE", "metric counters must be non-negative")


@dataclass(frozen=True)
class MetricsSnapshot:
    frozen_at: datetime
    entries: Mapping[str, MetricsSample]  # submission_id -> latest pre-freeze sample
    no_data: frozenset[str]  # submissions frozen with a synthetic zero-sample

    def sample_for(self, submission_id: str) -> MetricsSample:
        return self.entries[submission_id]


def freeze_snapshot(
    sample_history: Iterable[MetricsSample],
    submissions: Iterable[Submission],
    freeze_at: datetime,
) -> MetricsSnapshot:
    """Pick, per live submission, the latest sample observed at or before
    the freeze; submissions without one get a zero-sample flagged NO_DATA.

    Pure function: same history, same submissions, same instant, same
    snapshot.
    """
    live = [s for s in submissions if s.is_live]
    latest: dict[str, MetricsSample] = {}
    for sample in sample_history:
        if sample.observed_at > freeze_at:
            continue
        current = latest.get(sample.submission_id)
        if current is None or sample.observed_at >= current.observed_at:
            latest[sample.submission_id] = sample

    entries: dict[str, MetricsSample] = {}
    missing: set[str] = set()
    for submission in live:
        sample = latest.get(submission.submission_id)
        if sample is None:
            sample = MetricsSample(
                submission.submission_id, freeze_at, 0, 0, 0, provider_id="none"
            )
            missing.add(submission.submission_id)
        entries[submission.submission_id] = sample
    return MetricsSnapshot(freeze_at, entries, frozenset(missing))


def sample_to_doc(sample: MetricsSample) -> dict[str, Any]:
    return {
        "submission_id": sample.submission_id,
        "observed_at": rfc3339(sample.observed_at),
        "views": sample.views,
        "likes": sample.likes,
        "shares": sample.shares,
        "provider_id": sample.provider_id,
    }


def sample_from_doc(doc: dict[str, Any]) -> MetricsSample:
    return MetricsSample(
        submission_id=doc["submission_id"],
        observed_at=parse_rfc3339(doc["observed_at"]),
        views=doc["views"],
        likes=doc["likes"],
        shares=doc["shares"],
        provider_id=doc["provider_id"],
    )


def snapshot_to_doc(snapshot: MetricsSnapshot) -> dict[str, Any]:
    return {
        "frozen_at": rfc3339(snapshot.frozen_at),
        "entries": {
            sid: sample_to_doc(sample) for sid, sample in sorted(snapshot.entries.items())
        },
        "no_data": sorted(snapshot.no_data),
    }


def snapshot_from_doc(doc: dict[str, Any]) -> MetricsSnapshot:
    return MetricsSnapshot(
        frozen_at=parse_rfc3339(doc["frozen_at"]),
        entries={sid: sample_from_doc(d) for sid, d in doc["entries"].items()},
        no_data=frozenset(doc["no_data"]),
    )
