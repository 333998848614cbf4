"""Timestamps, RFC 3339 parsing, and injectable clocks.

All timestamps in the system are timezone-aware UTC datetimes. Services
never call ``datetime.now`` directly; they go through a Clock so tests and
the contest simulator can run on virtual time.
"""

from __future__ import annotations

from datetime import date, datetime, timedelta, timezone

from .errors import ContestError

UTC = timezone.utc


def parse_rfc3339(value: str) -> datetime:
    """Parse an RFC 3339 timestamp into an aware UTC datetime."""
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        parsed = datetime.fromisoformat(text)
    except ValueError:
        raise ContestError("INVALID_DATE", f"not an RFC 3339 timestamp: {value!r}")
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=UTC)
    return parsed.astimezone(UTC)


def parse_date(value: str) -> date:
    try:
        return date.fromisoformat(value.strip())
    except ValueError:
        raise ContestError("INVALID_DATE", f"not a YYYY-MM-DD date: {value!r}")


def rfc3339(moment: datetime) -> str:
    """Render an aware datetime as RFC 3339 with a Z suffix."""
    if moment.tzinfo is None:
        moment = moment.replace(tzinfo=UTC)
    return moment.astimezone(UTC).isoformat().replace("+00:00", "Z")


class Clock:
    """Wall-clock time source."""

    def now(self) -> datetime:
        return datetime.now(UTC)


class ManualClock(Clock):
    """Clock advanced explicitly; the simulator's virtual time."""

    def __init__(self, start: datetime):
        self._now = start.astimezone(UTC)

    def now(self) -> datetime:
        return self._now

    def set(self, moment: datetime) -> None:
        self._now = moment.astimezone(UTC)

    def advance(self, delta: timedelta) -> None:
        self._now = self._now + delta
