"""Topic sheet catalog.

Sheets are operator-provided fixture content; the loader only enforces the
id scheme and uniqueness. The shipped default catalog holds 25 sheets per
age group plus the open topic, 51 in total.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Mapping, Sequence

from ..errors import ContestError

TOPIC_ID_PATTERN = re.compile(r"^AG[12X]_[0-9]{2}$")
OPEN_TOPIC_ID = "AGX_51"
VALID_SCOPES = ("AG1", "AG2", "both")


@dataclass(frozen=True)
class TopicSheet:
    id: str
    title: str
    age_group_scope: str  # AG1 | AG2 | both
    locales: tuple[str, ...]
    keywords: tuple[str, ...]
    body: str


def parse_topic_catalog(records: Sequence[Mapping[str, Any]]) -> list[TopicSheet]:
    """Validate a parsed catalog document into TopicSheets."""
    if not isinstance(records, (list, tuple)):
        raise ContestError("PARSE_ERROR", "topic catalog must be a list of records")
    sheets: list[TopicSheet] = []
    seen: set[str] = set()
    for record in records:
        try:
            sheet = TopicSheet(
                id=record["id"],
                title=record["title"],
                age_group_scope=record["age_group_scope"],
                locales=tuple(record.get("locales", ())),
                keywords=tuple(record.get("keywords", ())),
                body=record.get("body", ""),
            )
        except (KeyError, TypeError) as bad:
            raise ContestError("PARSE_ERROR", f"malformed topic record: {bad}")
        if not TOPIC_ID_PATTERN.match(sheet.id):
            raise ContestError("BAD_ID_FORMAT", f"bad topic id {sheet.id!r}")
        if sheet.id in seen:
            raise ContestError("DUPLICATE_TOPIC_ID", f"duplicate topic id {sheet.id!r}")
        if sheet.age_group_scope not in VALID_SCOPES:
            raise ContestError(
                "PARSE_ERROR", f"bad age_group_scope {sheet.age_group_scope!r}"
            )
        seen.add(sheet.id)
        sheets.append(sheet)
    return sheets


def load_topic_catalog(path: str | Path) -> list[TopicSheet]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as bad:
        raise ContestError("PARSE_ERROR", f"topic catalog is not valid JSON: {bad}")
    return parse_topic_catalog(doc)


def default_topic_catalog() -> list[TopicSheet]:
    text = resources.files("scicontest.data").joinpath("default_topics.json").read_text("utf-8")
    return parse_topic_catalog(json.loads(text))
