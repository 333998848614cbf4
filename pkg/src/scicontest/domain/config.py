"""Contest configuration: window, eligible countries, age groups, media
types, score weights.

The shipped default reproduces the pilot contest: a January-to-April
submission window, the EU member whitelist, two age groups (10-14 and
15-20) and six media types, which together yield the twelve categories the
rating pipeline is sized for.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from ..errors import ConfigError, ContestError
from ..timeutil import parse_rfc3339

DEFAULT_HASHTAG = "#SciChallenge2017"


@dataclass(frozen=True)
class AgeGroupDef:
    id: str
    min_age: int  # completed years, inclusive
    max_age: int  # inclusive


@dataclass(frozen=True)
class MediaTypeDef:
    id: str
    display_name: str


@dataclass(frozen=True)
class ScoreWeights:
    """Non-negative rational weights for the community score formula."""

    views: Fraction
    likes: Fraction
    shares: Fraction

    def scaled(self, factor: Fraction) -> "ScoreWeights":
        return ScoreWeights(self.views * factor, self.likes * factor, self.shares * factor)


def parse_weight(value: Any) -> Fraction:
    """Accept ints, decimal strings, or 'p/q' rational strings."""
    try:
        weight = Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ContestError("INVALID_CONFIG", f"not a rational weight: {value!r}")
    if weight < 0:
        raise ContestError("INVALID_CONFIG", f"negative weight: {value!r}")
    return weight


@dataclass(frozen=True)
class ContestConfig:
    submission_open: datetime
    submission_close: datetime
    metrics_freeze: datetime
    eligible_countries: frozenset[str]
    age_groups: tuple[AgeGroupDef, ...]
    media_types: tuple[MediaTypeDef, ...]
    score_weights: ScoreWeights
    target_min_countries: int = 15
    jury_scale_max: int = 10
    required_hashtag: str = DEFAULT_HASHTAG
    age_reference_date: datetime | None = None
    jury_criteria: Mapping[str, tuple[str, ...]] | None = None
    extras: Mapping[str, Any] = field(default_factory=dict, compare=False)

    @property
    def age_reference(self) -> datetime:
        """Instant at which completed age is measured (defaults to close)."""
        return self.age_reference_date or self.submission_close

    def media_type_ids(self) -> tuple[str, ...]:
        return tuple(mt.id for mt in self.media_types)

    def age_group_ids(self) -> tuple[str, ...]:
        return tuple(ag.id for ag in self.age_groups)

    def validate(self) -> None:
        problems = []
        if not self.submission_open < self.submission_close:
            problems.append("submission_open must precede submission_close")
        if not self.submission_close <= self.metrics_freeze:
            problems.append("submission_close must not be after metrics_freeze")
        if not self.age_groups:
            problems.append("at least one age group is required")
        if not self.media_types:
            problems.append("at least one media type is required")

        seen_ag = set()
        for group in self.age_groups:
            if group.id in seen_ag:
                problems.append(f"duplicate age group id {group.id!r}")
            seen_ag.add(group.id)
            if group.min_age > group.max_age:
                problems.append(f"age group {group.id!r} has min_age > max_age")
        ordered = sorted(self.age_groups, key=lambda g: g.min_age)
        for earlier, later in zip(ordered, ordered[1:]):
            if later.min_age <= earlier.max_age:
                problems.append(
                    f"age groups {earlier.id!r} and {later.id!r} overlap"
                )
            elif later.min_age != earlier.max_age + 1:
                problems.append(
                    f"age groups {earlier.id!r} and {later.id!r} are not contiguous"
                )

        seen_mt = set()
        seen_names = set()
        for media in self.media_types:
            if not media.id:
                problems.append("media type with empty id")
            if media.id in seen_mt:
                problems.append(f"duplicate media type id {media.id!r}")
            seen_mt.add(media.id)
            name = media.display_name.strip().lower()
            if not name:
                problems.append(f"media type {media.id!r} has an empty name")
            if name in seen_names:
                problems.append(f"duplicate media type name {media.display_name!r}")
            seen_names.add(name)

        for code in self.eligible_countries:
            if not (len(code) == 2 and code.isalpha() and code.isupper()):
                problems.append(f"not an ISO-3166-1 alpha-2 code: {code!r}")

        if self.target_min_countries < 1:
            problems.append("target_min_countries must be positive")
        if self.jury_scale_max < 1:
            problems.append("jury_scale_max must be positive")
        if not self.required_hashtag.startswith("#"):
            problems.append("required_hashtag must start with '#'")

        if problems:
            raise ConfigError(problems)


def config_from_document(doc: Mapping[str, Any]) -> ContestConfig:
    """Build and validate a ContestConfig from a parsed config document.

    Unknown keys are preserved in ``extras`` for service-level settings
    (jurors, admin key, channels, ...).
    """
    try:
        weights_doc = doc.get("score_weights", {})
        config = ContestConfig(
            submission_open=parse_rfc3339(doc["submission_open"]),
            submission_close=parse_rfc3339(doc["submission_close"]),
            metrics_freeze=parse_rfc3339(doc["metrics_freeze"]),
            eligible_countries=frozenset(doc["eligible_countries"]),
            age_groups=tuple(
                AgeGroupDef(g["id"], int(g["min_age"]), int(g["max_age"]))
                for g in doc["age_groups"]
            ),
            media_types=tuple(
                MediaTypeDef(m["id"], m["display_name"]) for m in doc["media_types"]
            ),
            score_weights=ScoreWeights(
                views=parse_weight(weights_doc.get("w_views", 1)),
                likes=parse_weight(weights_doc.get("w_likes", 3)),
                shares=parse_weight(weights_doc.get("w_shares", 5)),
            ),
            target_min_countries=int(doc.get("target_min_countries", 15)),
            jury_scale_max=int(doc.get("jury_scale_max", 10)),
            required_hashtag=doc.get("required_hashtag", DEFAULT_HASHTAG),
            age_reference_date=(
                parse_rfc3339(doc["age_reference_date"])
                if doc.get("age_reference_date")
                else None
            ),
            jury_criteria=(
                {k: tuple(v) for k, v in doc["jury_criteria"].items()}
                if doc.get("jury_criteria")
                else None
            ),
            extras={
                k: v
                for k, v in doc.items()
                if k
                not in {
                    "submission_open",
                    "submission_close",
                    "metrics_freeze",
                    "eligible_countries",
                    "age_groups",
                    "media_types",
                    "score_weights",
                    "target_min_countries",
                    "jury_scale_max",
                    "required_hashtag",
                    "age_reference_date",
                    "jury_criteria",
                }
            },
        )
    except KeyError as missing:
        raise ConfigError([f"missing config field {missing.args[0]!r}"])
    except (TypeError, ValueError) as bad:
        raise ConfigError([f"malformed config field: {bad}"])
    config.validate()
    return config


def load_config(path: str | Path) -> ContestConfig:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as bad:
        raise ConfigError([f"config is not valid JSON: {bad}"])
    if not isinstance(doc, dict):
        raise ConfigError(["config document must be a JSON object"])
    return config_from_document(doc)


def default_config() -> ContestConfig:
    """The shipped default: 2 age groups x 6 media types, EU whitelist."""
    text = resources.files("scicontest.data").joinpath("default_config.json").read_text("utf-8")
    return config_from_document(json.loads(text))
