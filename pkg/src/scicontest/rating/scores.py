"""Community scores and the total order used by every ranking.

Scores are exact rationals (weighted sums of integer counters with rational
weights); comparisons never touch floating point, so rankings are stable
across platforms and replays. Floats appear only when formatting for
display.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from fractions import Fraction

from ..domain.config import ScoreWeights
from ..metrics.samples import MetricsSample


@dataclass(frozen=True)
class CommunityScore:
    submission_id: str
    score: Fraction
    views: int
    likes: int
    shares: int


def community_score(sample: MetricsSample, weights: ScoreWeights) -> CommunityScore:
    """Weighted sum of the sample's counters, exactly."""
    value = (
        weights.views * sample.views
        + weights.likes * sample.likes
        + weights.shares * sample.shares
    )
    return CommunityScore(sample.submission_id, value, sample.views, sample.likes, sample.shares)


def rank_key(score: Fraction, submitted_at: datetime, submission_id: str):
    """Total order: score desc, then earlier submission, then id.

    Total because submission ids are unique; every tie resolves
    deterministically regardless of input order.
    """
    return (-score, submitted_at, submission_id)


def format_score(value: Fraction) -> str:
    """Exact textual form for exports: integer when integral, else p/q."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
