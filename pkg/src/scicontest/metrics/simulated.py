"""Deterministic metrics provider driven by a fixture file.

The fixture is a sequence of records {url, virtual_time, views, likes,
shares}, either one JSON record per line or a JSON list (optionally under a
"samples" key). Counters behave like real platform counters: at virtual
time t a link reports its most recent record with virtual_time <= t, and is
unavailable before its first record.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from pathlib import Path
from typing import Any, Iterable, Mapping

from ..errors import ContestError
from ..submissions.media import MediaLink
from .poller import MetricCounts

REQUIRED_FIELDS = ("url", "virtual_time", "views", "likes", "shares")


class SimulatedProvider:
    provider_id = "simulated"

    def __init__(self, rows: Iterable[Mapping[str, Any]]):
        timeline: dict[str, list[tuple[int, MetricCounts]]] = {}
        seen: set[tuple[str, int]] = set()
        for row in rows:
            for fieldname in REQUIRED_FIELDS:
                if fieldname not in row:
                    raise ContestError(
                        "PARSE_ERROR", f"fixture record misses field {fieldname!r}: {row}"
                    )
            url = row["url"]
            try:
                t = int(row["virtual_time"])
                counts = MetricCounts(int(row["views"]), int(row["likes"]), int(row["shares"]))
            except (TypeError, ValueError) as bad:
                raise ContestError("PARSE_ERROR", f"bad fixture record {row}: {bad}")
            if min(counts.views, counts.likes, counts.shares) < 0 or t < 0:
                raise ContestError("PARSE_ERROR", f"negative value in fixture record {row}")
            if (url, t) in seen:
                raise ContestError(
                    "PARSE_ERROR", f"ambiguous fixture: two records for {url!r} at t={t}"
                )
            seen.add((url, t))
            timeline.setdefault(url, []).append((t, counts))
        self._timeline = {
            url: sorted(points) for url, points in timeline.items()
        }
        self.virtual_time = 0

    def set_time(self, virtual_time: int) -> None:
        self.virtual_time = virtual_time

    def ticks(self) -> list[int]:
        """Every distinct virtual time mentioned by the fixture, ascending."""
        return sorted({t for points in self._timeline.values() for t, _ in points})

    def fetch(self, media_link: MediaLink) -> MetricCounts | None:
        return self.fetch_at(media_link, self.virtual_time)

    def fetch_at(self, media_link: MediaLink, virtual_time: int) -> MetricCounts | None:
        points = self._timeline.get(media_link.raw_url)
        if points is None:
            points = self._timeline.get(media_link.normalized_url)
        if not points:
            return None
        index = bisect_right([t for t, _ in points], virtual_time)
        if index == 0:
            return None  # link not yet published at this virtual time
        return points[index - 1][1]


def parse_fixture_rows(text: str) -> list[dict[str, Any]]:
    """Accept a JSON list, a {"samples": [...]} document, or JSON lines."""
    stripped = text.strip()
    if not stripped:
        return []
    try:
        doc = json.loads(stripped)
    except json.JSONDecodeError:
        rows = []
        for lineno, line in enumerate(stripped.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rows.append(json.loads(line))
            except json.JSONDecodeError as bad:
                raise ContestError("PARSE_ERROR", f"fixture line {lineno} is not JSON: {bad}")
        return rows
    if isinstance(doc, list):
        return doc
    if isinstance(doc, dict) and isinstance(doc.get("samples"), list):
        return doc["samples"]
    raise ContestError("PARSE_ERROR", "fixture must be a record list or JSON lines")


def simulated_provider(source: str | Path) -> SimulatedProvider:
    """Build a provider from a fixture file path or raw fixture text."""
    path = Path(source)
    text = path.read_text(encoding="utf-8") if path.exists() else str(source)
    return SimulatedProvider(parse_fixture_rows(text))
