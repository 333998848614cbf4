"""Winner selection: one winner per category from the jury-rated shortlist."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from ..domain.categories import enumerate_categories
from ..domain.config import ContestConfig
from ..errors import ContestError
from ..submissions.model import Submission
from .jury import JuryScore, ScoringMatrix, aggregate_jury
from .ranking import Shortlist
from .scores import format_score


@dataclass(frozen=True)
class CategoryWinner:
    submission_id: str
    jury_aggregate: Fraction


@dataclass(frozen=True)
class WinnerSet:
    winners: Mapping[str, CategoryWinner]  # category_id -> winner
    warnings: tuple[str, ...] = ()
    audience_award: str | None = None

    def winner_ids(self) -> frozenset[str]:
        return frozenset(w.submission_id for w in self.winners.values())


def select_winners(
    shortlist: Shortlist,
    submissions: Iterable[Submission],
    scores_by_submission: Mapping[str, Sequence[JuryScore]],
    matrix: ScoringMatrix,
    config: ContestConfig,
) -> WinnerSet:
    """Highest jury aggregate per category; ties fall back to the ranking
    order's non-score keys (earlier submission, then id)."""
    by_id = {s.submission_id: s for s in submissions if s.is_live}
    categories = enumerate_categories(config)
    age_group_of = {category.id: category.age_group_id for category in categories}

    shortlisted = [by_id[entry.submission_id] for entry in shortlist.entries]
    unscored = sorted(
        s.submission_id for s in shortlisted if not scores_by_submission.get(s.submission_id)
    )
    if unscored:
        raise ContestError(
            "UNSCORED_ENTRIES",
            "every shortlisted entry needs at least one jury score-set",
            details=unscored,
        )

    winners: dict[str, CategoryWinner] = {}
    warnings: list[str] = []
    for category in categories:
        candidates = [s for s in shortlisted if s.category_id == category.id]
        if not candidates:
            warnings.append(f"WARNING: no shortlisted entry in category {category.id}")
            continue
        ranked = sorted(
            candidates,
            key=lambda s: (
                -aggregate_jury(
                    scores_by_submission[s.submission_id],
                    matrix,
                    age_group_of[category.id],
                ),
                s.submitted_at,
                s.submission_id,
            ),
        )
        best = ranked[0]
        winners[category.id] = CategoryWinner(
            best.submission_id,
            aggregate_jury(
                scores_by_submission[best.submission_id], matrix, age_group_of[category.id]
            ),
        )
    return WinnerSet(winners, tuple(warnings))


def record_audience_award(winner_set: WinnerSet, submission_id: str) -> WinnerSet:
    """Operator-entered decision from the live award event; overwrites."""
    if submission_id not in winner_set.winner_ids():
        raise ContestError("NOT_A_WINNER", f"{submission_id} is not among the winners")
    return replace(winner_set, audience_award=submission_id)


def winner_set_to_doc(winner_set: WinnerSet) -> dict[str, Any]:
    return {
        "winners": {
            category: {
                "submission_id": w.submission_id,
                "jury_aggregate": format_score(w.jury_aggregate),
            }
            for category, w in sorted(winner_set.winners.items())
        },
        "warnings": list(winner_set.warnings),
        "audience_award": winner_set.audience_award,
    }


def winner_set_from_doc(doc: Mapping[str, Any]) -> WinnerSet:
    return WinnerSet(
        winners={
            category: CategoryWinner(w["submission_id"], Fraction(w["jury_aggregate"]))
            for category, w in doc["winners"].items()
        },
        warnings=tuple(doc["warnings"]),
        audience_award=doc["audience_award"],
    )
