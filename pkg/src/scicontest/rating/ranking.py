"""Rankings over the frozen snapshot and the jury shortlist.

The shortlist is the union of the top entry per participating country and
the top entry per category, deduplicated; provenance tags record which
argmax(es) carried each entry in.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from typing import Any, Iterable, Mapping

from ..domain.config import ContestConfig, ScoreWeights
from ..metrics.samples import MetricsSnapshot
from ..submissions.model import Submission
from ..timeutil import parse_rfc3339, rfc3339
from .scores import community_score, rank_key

TOP_OF_COUNTRY = "TOP_OF_COUNTRY"
TOP_OF_CATEGORY = "TOP_OF_CATEGORY"


class GroupBy(str, Enum):
    COUNTRY = "COUNTRY"
    CATEGORY = "CATEGORY"


@dataclass(frozen=True)
class Provenance:
    kind: str  # TOP_OF_COUNTRY | TOP_OF_CATEGORY
    key: str  # country code or category id

    def __str__(self) -> str:
        return f"{self.kind}({self.key})"


@dataclass(frozen=True)
class ShortlistEntry:
    submission_id: str
    provenance: tuple[Provenance, ...]


@dataclass(frozen=True)
class Shortlist:
    entries: tuple[ShortlistEntry, ...]  # ordered by submission_id
    built_from: datetime  # snapshot freeze instant
    warnings: tuple[str, ...] = ()

    def ids(self) -> frozenset[str]:
        return frozenset(entry.submission_id for entry in self.entries)

    def __contains__(self, submission_id: str) -> bool:
        return submission_id in self.ids()


def _group_key(submission: Submission, group_by: GroupBy) -> str:
    key = submission.country if group_by is GroupBy.COUNTRY else submission.category_id
    assert key is not None, "finalized submissions always carry country and category"
    return key


def rank(
    snapshot: MetricsSnapshot,
    submissions: Iterable[Submission],
    group_by: GroupBy,
    weights: ScoreWeights,
) -> dict[str, list[str]]:
    """Per-group descending ranking under the total order.

    Input order never affects the output; each group's list is a
    permutation of the group's members.
    """
    groups: dict[str, list[tuple]] = {}
    for submission in submissions:
        if not submission.is_live:
            continue
        scored = community_score(snapshot.sample_for(submission.submission_id), weights)
        key = rank_key(scored.score, submission.submitted_at, submission.submission_id)
        groups.setdefault(_group_key(submission, group_by), []).append(
            (key, submission.submission_id)
        )
    return {
        group: [sid for _key, sid in sorted(members)]
        for group, members in sorted(groups.items())
    }


def build_shortlist(
    snapshot: MetricsSnapshot,
    submissions: Iterable[Submission],
    config: ContestConfig,
) -> Shortlist:
    """Top of each country united with top of each category."""
    live = [s for s in submissions if s.is_live]
    by_country = rank(snapshot, live, GroupBy.COUNTRY, config.score_weights)
    by_category = rank(snapshot, live, GroupBy.CATEGORY, config.score_weights)

    provenance: dict[str, list[Provenance]] = {}
    for country, ordered in by_country.items():
        if ordered:
            provenance.setdefault(ordered[0], []).append(
                Provenance(TOP_OF_COUNTRY, country)
            )
    for category, ordered in by_category.items():
        if ordered:
            provenance.setdefault(ordered[0], []).append(
                Provenance(TOP_OF_CATEGORY, category)
            )

    warnings = []
    participating = len(by_country)
    if participating < config.target_min_countries:
        warnings.append(
            f"WARNING: {participating} participating countries,"
            f" below the target of {config.target_min_countries}"
        )

    entries = tuple(
        ShortlistEntry(sid, tuple(sorted(tags, key=lambda p: (p.kind, p.key))))
        for sid, tags in sorted(provenance.items())
    )
    return Shortlist(entries, snapshot.frozen_at, tuple(warnings))


def shortlist_to_doc(shortlist: Shortlist) -> dict[str, Any]:
    return {
        "built_from": rfc3339(shortlist.built_from),
        "warnings": list(shortlist.warnings),
        "entries": [
            {
                "submission_id": entry.submission_id,
                "provenance": [{"kind": p.kind, "key": p.key} for p in entry.provenance],
            }
            for entry in shortlist.entries
        ],
    }


def shortlist_from_doc(doc: Mapping[str, Any]) -> Shortlist:
    return Shortlist(
        entries=tuple(
            ShortlistEntry(
                entry["submission_id"],
                tuple(Provenance(p["kind"], p["key"]) for p in entry["provenance"]),
            )
            for entry in doc["entries"]
        ),
        built_from=parse_rfc3339(doc["built_from"]),
        warnings=tuple(doc["warnings"]),
    )
