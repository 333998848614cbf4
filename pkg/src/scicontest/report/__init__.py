"""Figure rendering for contest reports."""

from .figures import (
    community_scores_figure,
    render_contest_figures,
    submissions_by_category_figure,
    submissions_by_country_figure,
    winner_aggregates_figure,
)

__all__ = [
    "community_scores_figure",
    "render_contest_figures",
    "submissions_by_category_figure",
    "submissions_by_country_figure",
    "winner_aggregates_figure",
]
