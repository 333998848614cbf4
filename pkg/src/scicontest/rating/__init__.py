"""Rating pipeline: community scores, rankings, shortlist, jury, winners.

Everything here is a pure, deterministic function over the frozen snapshot
and immutable inputs; the same inputs give the same winners across process
restarts and input permutations.
"""

from .jury import (
    BASE_CRITERIA,
    SENIOR_CRITERIA,
    JuryScore,
    ScoringMatrix,
    aggregate_jury,
    default_matrix,
    jury_score_from_doc,
    jury_score_to_doc,
    record_jury_score,
)
from .ranking import (
    TOP_OF_CATEGORY,
    TOP_OF_COUNTRY,
    GroupBy,
    Provenance,
    Shortlist,
    ShortlistEntry,
    build_shortlist,
    rank,
    shortlist_from_doc,
    shortlist_to_doc,
)
from .scores import CommunityScore, community_score, format_score, rank_key
from .winners import (
    CategoryWinner,
    WinnerSet,
    record_audience_award,
    select_winners,
    winner_set_from_doc,
    winner_set_to_doc,
)

__all__ = [
    "BASE_CRITERIA",
    "CategoryWinner",
    "CommunityScore",
    "GroupBy",
    "JuryScore",
    "Provenance",
    "ScoringMatrix",
    "SENIOR_CRITERIA",
    "Shortlist",
    "ShortlistEntry",
    "TOP_OF_CATEGORY",
    "TOP_OF_COUNTRY",
    "WinnerSet",
    "aggregate_jury",
    "build_shortlist",
    "community_score",
    "default_matrix",
    "format_score",
    "jury_score_from_doc",
    "jury_score_to_doc",
    "rank",
    "rank_key",
    "record_audience_award",
    "record_jury_score",
    "select_winners",
    "shortlist_from_doc",
    "shortlist_to_doc",
    "winner_set_from_doc",
    "winner_set_to_doc",
]
