"""Outbound post rendering.

Templates are plain text files with {title}, {topic}, {link} and {hashtag}
placeholders, one per (event kind, channel). Rendering is deterministic;
the contest hashtag is always present, and length trimming only ever
shortens free-text fields, never links or the hashtag.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from ..errors import ContestError
from ..timeutil import parse_rfc3339, rfc3339
from .events import ContestEvent

ELLIPSIS = "…"
FREE_TEXT_FIELDS = ("title", "topic")
PROTECTED_FIELDS = ("link", "hashtag")


class PostState(str, Enum):
    PENDING = "PENDING"
    DELIVERED = "DELIVERED"
    FAILED = "FAILED"


@dataclass(frozen=True)
class Channel:
    channel_id: str
    text_limit: int = 280


@dataclass(frozen=True)
class OutboxPost:
    post_id: str
    channel_id: str
    body: str
    created_at: datetime
    state: PostState = PostState.PENDING
    attempts: int = 0
    next_attempt_at: datetime | None = None
    last_error: str | None = None


class TemplateSet:
    def __init__(self, templates: Mapping[tuple[str, str], str]):
        self._templates = dict(templates)

    def lookup(self, kind: str, channel_id: str) -> str:
        try:
            return self._templates[(kind, channel_id)]
        except KeyError:
            raise ContestError(
                "NO_TEMPLATE", f"no post template for event {kind} on channel {channel_id!r}"
            )

    @classmethod
    def from_dir(cls, path: str | Path) -> "TemplateSet":
        """Load `<EVENT_KIND>.<channel>.txt` files from a directory."""
        templates = {}
        for file in sorted(Path(path).glob("*.txt")):
            kind, _, channel = file.stem.partition(".")
            if not channel:
                continue
            templates[(kind, channel)] = file.read_text(encoding="utf-8").rstrip("\n")
        return cls(templates)

    @classmethod
    def default(cls) -> "TemplateSet":
        root = resources.files("scicontest.data").joinpath("templates")
        templates = {}
        for entry in root.iterdir():
            if not entry.name.endswith(".txt"):
                continue
            kind, _, rest = entry.name.partition(".")
            channel = rest[: -len(".txt")]
            templates[(kind, channel)] = entry.read_text("utf-8").rstrip("\n")
        return cls(templates)


def _placeholders(template: str) -> list[str]:
    return [name for _, name, _, _ in string.Formatter().parse(template) if name]


def render_event_post(
    event: ContestEvent,
    template_set: TemplateSet,
    channel: Channel,
    context: Mapping[str, str],
    hashtag: str,
    post_id: str,
) -> OutboxPost:
    """Fill the template for (event kind, channel) and fit the limit.

    Free-text fields are trimmed with an ellipsis when the body would
    exceed the channel limit; the link and hashtag always survive intact.
    """
    template = template_set.lookup(event.kind.value, channel.channel_id)
    fields = _placeholders(template)
    if "hashtag" not in fields:
        template += " {hashtag}"
        fields.append("hashtag")

    values = {
        "title": str(context.get("title", "")),
        "topic": str(context.get("topic", "")),
        "link": str(context.get("link", "")),
        "hashtag": hashtag,
    }

    skeleton_len = len(template.format(**{**values, "title": "", "topic": ""}))
    budget = channel.text_limit - skeleton_len
    if budget < 0:
        raise ContestError(
            "TEMPLATE_OVERFLOW",
            f"template for {event.kind.value}/{channel.channel_id} cannot fit"
            f" within {channel.text_limit} characters",
        )
    trimmed = dict(values)
    for name in fields:
        if name not in FREE_TEXT_FIELDS:
            continue
        text = values[name]
        if len(text) > budget:
            text = text[: max(budget - 1, 0)] + ELLIPSIS if budget > 0 else ""
        trimmed[name] = text
        budget -= len(text)

    body = template.format(**trimmed)
    assert hashtag in body and len(body) <= channel.text_limit
    return OutboxPost(
        post_id=post_id,
        channel_id=channel.channel_id,
        body=body,
        created_at=event.occurred_at,
    )


def post_to_doc(post: OutboxPost) -> dict[str, Any]:
    return {
        "post_id": post.post_id,
        "channel_id": post.channel_id,
        "body": post.body,
        "created_at": rfc3339(post.created_at),
        "state": post.state.value,
        "attempts": post.attempts,
        "next_attempt_at": rfc3339(post.next_attempt_at) if post.next_attempt_at else None,
        "last_error": post.last_error,
    }


def post_from_doc(doc: Mapping[str, Any]) -> OutboxPost:
    return OutboxPost(
        post_id=doc["post_id"],
        channel_id=doc["channel_id"],
        body=doc["body"],
        created_at=parse_rfc3339(doc["created_at"]),
        state=PostState(doc["state"]),
        attempts=doc["attempts"],
        next_attempt_at=(
            parse_rfc3339(doc["next_attempt_at"]) if doc["next_attempt_at"] else None
        ),
        last_error=doc["last_error"],
    )
