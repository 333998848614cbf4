"""Eligibility gate: residence country, age group, submission window.

Failures never raise; the result lists every rejection code so the UI can
show all problems at once. Age is measured as completed years at the
configured reference date, not at the moment of the check, so the outcome
cannot drift while the contest runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime
from typing import Callable, Sequence

from ..errors import ContestError
from .config import AgeGroupDef, ContestConfig

COUNTRY_NOT_ELIGIBLE = "COUNTRY_NOT_ELIGIBLE"
AGE_OUT_OF_RANGE = "AGE_OUT_OF_RANGE"
WINDOW_CLOSED = "WINDOW_CLOSED"

# Extension hook: (rule_name, predicate) pairs; a predicate returns a
# rejection code or None. The default rule list is empty.
EligibilityRule = tuple[str, Callable[[str, date, datetime, ContestConfig], str | None]]


@dataclass(frozen=True)
class EligibilityResult:
    eligible: bool
    age_group: str | None
    reasons: tuple[str, ...]

    def __post_init__(self):
        assert self.eligible == (not self.reasons) == (self.age_group is not None)


def completed_age(birth_date: date, reference_date: date) -> int:
    """Age in completed years at the reference date."""
    years = reference_date.year - birth_date.year
    if (reference_date.month, reference_date.day) < (birth_date.month, birth_date.day):
        years -= 1
    return years


def derive_age_group(
    birth_date: date, reference_date: date, config: ContestConfig
) -> AgeGroupDef | None:
    """The unique age group containing the completed age, if any."""
    if birth_date > reference_date:
        raise ContestError("INVALID_DATE", "birth date is after the reference date")
    age = completed_age(birth_date, reference_date)
    for group in config.age_groups:
        if group.min_age <= age <= group.max_age:
            return group
    return None


def validate_eligibility(
    country: str,
    birth_date: date,
    now: datetime,
    config: ContestConfig,
    extra_rules: Sequence[EligibilityRule] = (),
) -> EligibilityResult:
    """Run every eligibility predicate; reasons list every failed check."""
    reasons: list[str] = []
    if country not in config.eligible_countries:
        reasons.append(COUNTRY_NOT_ELIGIBLE)

    group = derive_age_group(birth_date, config.age_reference.date(), config)
    if group is None:
        reasons.append(AGE_OUT_OF_RANGE)

    if not (config.submission_open <= now <= config.submission_close):
        reasons.append(WINDOW_CLOSED)

    for _name, rule in extra_rules:
        code = rule(country, birth_date, now, config)
        if code is not None:
            reasons.append(code)

    if reasons:
        return EligibilityResult(False, None, tuple(reasons))
    assert group is not None
    return EligibilityResult(True, group.id, ())
