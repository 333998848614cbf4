"""Contest report figures.

Renders the platform's activity views to PNG files next to the CSV
exports: participation by country and category, the community score field,
and the winners' jury aggregates.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

FIGURE_STYLE = {
    "figure.figsize": (7.0, 4.0),
    "figure.dpi": 100,
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.labelsize": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "grid.linewidth": 0.5,
}

BAR_COLOR = "#3b6ea5"
HIGHLIGHT_COLOR = "#d08700"


def _bar_figure(
    labels: Sequence[str],
    values: Sequence[float],
    title: str,
    ylabel: str,
    path: Path,
    highlight: Sequence[bool] | None = None,
) -> Path:
    with plt.rc_context(FIGURE_STYLE):
        fig, ax = plt.subplots()
        colors = (
            [HIGHLIGHT_COLOR if h else BAR_COLOR for h in highlight]
            if highlight
            else BAR_COLOR
        )
        ax.bar(range(len(labels)), values, color=colors)
        ax.set_xticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=45, ha="right")
        ax.set_title(title)
        ax.set_ylabel(ylabel)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def submissions_by_country_figure(counts: Mapping[str, int], path: Path) -> Path:
    items = sorted(counts.items())
    return _bar_figure(
        [k for k, _ in items],
        [v for _, v in items],
        "Submissions by country",
        "entries",
        path,
    )


def submissions_by_category_figure(counts: Mapping[str, int], path: Path) -> Path:
    items = sorted(counts.items())
    return _bar_figure(
        [k for k, _ in items],
        [v for _, v in items],
        "Submissions by category",
        "entries",
        path,
    )


def community_scores_figure(
    scores: Mapping[str, Fraction], path: Path, top_n: int = 20
) -> Path:
    ordered = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))[:top_n]
    return _bar_figure(
        [k for k, _ in ordered],
        [float(v) for _, v in ordered],
        f"Top {len(ordered)} community scores",
        "weighted score",
        path,
    )


def winner_aggregates_figure(
    aggregates: Mapping[str, Fraction], path: Path, audience_award_category: str | None = None
) -> Path:
    items = sorted(aggregates.items())
    return _bar_figure(
        [k for k, _ in items],
        [float(v) for _, v in items],
        "Winner jury aggregates by category",
        "jury aggregate",
        path,
        highlight=[k == audience_award_category for k, _ in items],
    )


def render_contest_figures(service, out_dir: str | Path) -> list[Path]:
    """Render every figure the current contest state supports."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    stats = service.contest_stats()
    if stats["by_country"]:
        written.append(
            submissions_by_country_figure(
                stats["by_country"], out / "submissions_by_country.png"
            )
        )
    if stats["by_category"]:
        written.append(
            submissions_by_category_figure(
                stats["by_category"], out / "submissions_by_category.png"
            )
        )

    snapshot = service.snapshot()
    if snapshot is not None and snapshot.entries:
        from ..rating.scores import community_score

        scores = {
            sid: community_score(sample, service.config.score_weights).score
            for sid, sample in snapshot.entries.items()
        }
        written.append(community_scores_figure(scores, out / "community_scores.png"))

    winner_set = service.winners()
    if winner_set is not None and winner_set.winners:
        aggregates = {
            category: winner.jury_aggregate
            for category, winner in winner_set.winners.items()
        }
        award_category = next(
            (
                category
                for category, winner in winner_set.winners.items()
                if winner.submission_id == winner_set.audience_award
            ),
            None,
        )
        written.append(
            winner_aggregates_figure(
                aggregates, out / "winner_aggregates.png", award_category
            )
        )
    return written
