"""Delimited exports: rankings, winners, sample history, outbox.

Every export is sorted by content, not by insertion order, so identical
contest state always serializes to identical bytes.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from ..domain.config import ContestConfig
from ..metrics.samples import MetricsSample, MetricsSnapshot
from ..rating.ranking import GroupBy, rank
from ..rating.scores import community_score, format_score
from ..rating.winners import WinnerSet
from ..submissions.model import Submission
from ..syndication.posts import OutboxPost
from ..timeutil import rfc3339

RANKING_COLUMNS = [
    "rank",
    "submission_id",
    "category_id",
    "country",
    "score",
    "views",
    "likes",
    "shares",
]


def _csv(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def rankings_csv(
    snapshot: MetricsSnapshot,
    submissions: Iterable[Submission],
    config: ContestConfig,
    group_by: GroupBy,
) -> str:
    live = {s.submission_id: s for s in submissions if s.is_live}
    ranking = rank(snapshot, live.values(), group_by, config.score_weights)
    rows = []
    for group in sorted(ranking):
        for position, submission_id in enumerate(ranking[group], start=1):
            submission = live[submission_id]
            scored = community_score(snapshot.sample_for(submission_id), config.score_weights)
            rows.append(
                [
                    position,
                    submission_id,
                    submission.category_id,
                    submission.country,
                    format_score(scored.score),
                    scored.views,
                    scored.likes,
                    scored.shares,
                ]
            )
    return _csv(RANKING_COLUMNS, rows)


def winners_csv(winner_set: WinnerSet) -> str:
    rows = [
        [
            category,
            winner.submission_id,
            format_score(winner.jury_aggregate),
            "true" if winner_set.audience_award == winner.submission_id else "false",
        ]
        for category, winner in sorted(winner_set.winners.items())
    ]
    return _csv(["category_id", "submission_id", "jury_aggregate", "audience_award"], rows)


def samples_csv(history: Iterable[MetricsSample]) -> str:
    ordered = sorted(history, key=lambda s: (s.submission_id, s.observed_at, s.provider_id))
    rows = [
        [s.submission_id, rfc3339(s.observed_at), s.views, s.likes, s.shares, s.provider_id]
        for s in ordered
    ]
    return _csv(
        ["submission_id", "observed_at", "views", "likes", "shares", "provider_id"], rows
    )


def outbox_csv(posts: Iterable[OutboxPost]) -> str:
    ordered = sorted(posts, key=lambda p: (p.created_at, p.post_id))
    rows = [
        [p.post_id, p.channel_id, p.state.value, rfc3339(p.created_at), p.body]
        for p in ordered
    ]
    return _csv(["post_id", "channel_id", "state", "created_at", "body"], rows)


def write_exports(exports: Mapping[str, str], out_dir: str | Path) -> list[Path]:
    """Write named CSV payloads into out_dir; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, payload in sorted(exports.items()):
        path = out / name
        path.write_text(payload, encoding="utf-8")
        paths.append(path)
    return paths
