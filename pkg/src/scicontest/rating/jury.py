"""Jury rating: the per-age-group scoring matrix and score aggregation.

Younger entries are rated on problem presentation, creativity, added value
and future thinking; older entries additionally on scientific approach.
Aggregation is a mean over jurors of the (optionally weighted) mean over
criteria, in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction
from typing import Any, Mapping, Sequence

from ..domain.config import ContestConfig
from ..errors import ContestError
from ..timeutil import parse_rfc3339, rfc3339
from .ranking import Shortlist

BASE_CRITERIA = (
    "problem_presentation",
    "creativity",
    "added_value",
    "future_thinking",
)
SENIOR_CRITERIA = BASE_CRITERIA + ("scientific_approach",)


@dataclass(frozen=True)
class ScoringMatrix:
    criteria: Mapping[str, tuple[str, ...]]  # age_group_id -> ordered criteria
    scale_max: int
    criteria_weights: Mapping[str, Fraction] = field(default_factory=dict)

    def for_group(self, age_group_id: str) -> tuple[str, ...]:
        try:
            return self.criteria[age_group_id]
        except KeyError:
            raise ContestError("UNKNOWN_AGE_GROUP", f"no criteria for {age_group_id!r}")

    def weight(self, criterion: str) -> Fraction:
        return self.criteria_weights.get(criterion, Fraction(1))

    def validate(self) -> None:
        groups = list(self.criteria.items())
        for group_id, names in groups:
            if len(set(names)) != len(names):
                raise ContestError(
                    "INVALID_MATRIX", f"duplicate criterion in group {group_id!r}"
                )
        # Larger criteria sets must extend smaller ones, never diverge.
        for group_id, names in groups:
            for other_id, other_names in groups:
                if len(other_names) <= len(names) and not set(other_names) <= set(names):
                    raise ContestError(
                        "INVALID_MATRIX",
                        f"criteria of {group_id!r} do not subsume {other_id!r}",
                    )


def default_matrix(config: ContestConfig) -> ScoringMatrix:
    """Matrix from config overrides, or the standard two-tier criteria.

    Without overrides the youngest age group gets the four base criteria
    and every older group additionally gets scientific_approach.
    """
    if config.jury_criteria:
        matrix = ScoringMatrix(dict(config.jury_criteria), config.jury_scale_max)
    else:
        youngest = min(config.age_groups, key=lambda g: g.min_age)
        matrix = ScoringMatrix(
            {
                group.id: BASE_CRITERIA if group.id == youngest.id else SENIOR_CRITERIA
                for group in config.age_groups
            },
            config.jury_scale_max,
        )
    matrix.validate()
    return matrix


@dataclass(frozen=True)
class JuryScore:
    juror_id: str
    submission_id: str
    scores: Mapping[str, int]  # criterion -> integer score on the matrix scale
    recorded_at: datetime


def record_jury_score(
    score: JuryScore,
    matrix: ScoringMatrix,
    shortlist: Shortlist,
    age_group_by_submission: Mapping[str, str],
) -> JuryScore:
    """Validate a juror's score-set against the matrix and shortlist.

    Pure check; persistence (including replace-with-audit) is the caller's
    job.
    """
    if score.submission_id not in shortlist:
        raise ContestError(
            "NOT_SHORTLISTED", f"{score.submission_id} is not on the jury shortlist"
        )
    group_id = age_group_by_submission[score.submission_id]
    expected = matrix.for_group(group_id)
    if set(score.scores.keys()) != set(expected):
        raise ContestError(
            "CRITERIA_MISMATCH",
            f"scores must cover exactly the {group_id} criteria",
            details={"expected": list(expected), "got": sorted(score.scores)},
        )
    for criterion, value in score.scores.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise ContestError("SCORE_OUT_OF_RANGE", f"{criterion} score must be an integer")
        if not 0 <= value <= matrix.scale_max:
            raise ContestError(
                "SCORE_OUT_OF_RANGE",
                f"{criterion} score {value} outside 0..{matrix.scale_max}",
            )
    return score


def aggregate_jury(
    scores: Sequence[JuryScore], matrix: ScoringMatrix, age_group_id: str
) -> Fraction:
    """Mean over jurors of the weighted mean over the group's criteria."""
    if not scores:
        raise ContestError("NO_SCORES", "no jury scores to aggregate")
    criteria = matrix.for_group(age_group_id)
    total_weight = sum((matrix.weight(c) for c in criteria), Fraction(0))
    per_juror = [
        sum((matrix.weight(c) * score.scores[c] for c in criteria), Fraction(0))
        / total_weight
        for score in scores
    ]
    return sum(per_juror, Fraction(0)) / len(per_juror)


def jury_score_to_doc(score: JuryScore) -> dict[str, Any]:
    return {
        "juror_id": score.juror_id,
        "submission_id": score.submission_id,
        "scores": dict(sorted(score.scores.items())),
        "recorded_at": rfc3339(score.recorded_at),
    }


def jury_score_from_doc(doc: Mapping[str, Any]) -> JuryScore:
    return JuryScore(
        juror_id=doc["juror_id"],
        submission_id=doc["submission_id"],
        scores=dict(doc["scores"]),
        recorded_at=parse_rfc3339(doc["recorded_at"]),
    )
