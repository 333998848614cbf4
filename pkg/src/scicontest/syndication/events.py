"""Contest events that trigger outbound social posts."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from typing import Any, Mapping

from ..timeutil import parse_rfc3339, rfc3339


class EventKind(str, Enum):
    SUBMISSION_FINALIZED = "SUBMISSION_FINALIZED"
    SHORTLIST_PUBLISHED = "SHORTLIST_PUBLISHED"
    WINNERS_ANNOUNCED = "WINNERS_ANNOUNCED"
    CONTENT_UPDATED = "CONTENT_UPDATED"


@dataclass(frozen=True)
class ContestEvent:
    kind: EventKind
    subject_id: str
    occurred_at: datetime


def event_to_doc(event: ContestEvent) -> dict[str, Any]:
    return {
        "kind": event.kind.value,
        "subject_id": event.subject_id,
        "occurred_at": rfc3339(event.occurred_at),
    }


def event_from_doc(doc: Mapping[str, Any]) -> ContestEvent:
    return ContestEvent(
        EventKind(doc["kind"]), doc["subject_id"], parse_rfc3339(doc["occurred_at"])
    )
