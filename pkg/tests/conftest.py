"""Shared fixtures: configs, clocks, and instance builders."""

from __future__ import annotations

from datetime import date, datetime, timedelta, timezone
from fractions import Fraction

import pytest

from scicontest.domain import default_config
from scicontest.domain.config import (
    AgeGroupDef,
    ContestConfig,
    MediaTypeDef,
    ScoreWeights,
)
from scicontest.timeutil import ManualClock

UTC = timezone.utc

OPEN = datetime(2017, 1, 1, tzinfo=UTC)
CLOSE = datetime(2017, 4, 30, 23, 59, 59, tzinfo=UTC)
FREEZE = datetime(2017, 5, 7, tzinfo=UTC)


def make_config(**overrides) -> ContestConfig:
    base = dict(
        submission_open=OPEN,
        submission_close=CLOSE,
        metrics_freeze=FREEZE,
        eligible_countries=frozenset({"AT", "DE", "SE", "CZ", "CY", "SI", "HU", "GB"}),
        age_groups=(AgeGroupDef("AG1", 10, 14), AgeGroupDef("AG2", 15, 20)),
        media_types=(
            MediaTypeDef("poster", "Poster"),
            MediaTypeDef("presentation", "Presentation"),
            MediaTypeDef("video", "Video"),
        ),
        score_weights=ScoreWeights(Fraction(1), Fraction(3), Fraction(5)),
        target_min_countries=15,
    )
    base.update(overrides)
    config = ContestConfig(**base)
    config.validate()
    return config


@pytest.fixture
def config() -> ContestConfig:
    return make_config()


@pytest.fixture
def full_config() -> ContestConfig:
    return default_config()


@pytest.fixture
def clock() -> ManualClock:
    return ManualClock(OPEN + timedelta(days=10))


def birth_date_for_age(age: int, reference: date) -> date:
    """A birth date that gives exactly `age` completed years at `reference`."""
    return reference.replace(year=reference.year - age)
