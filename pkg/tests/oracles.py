"""Independent brute-force oracles for the rating pipeline.

Deliberately naive: pairwise comparators plus full scans and selection
sort, sharing no code with the engine's sort-based path. Slow but obviously
correct; every equivalence test in the suite checks the engine against
these.
"""

from __future__ import annotations

from fractions import Fraction

from scicontest.rating.jury import aggregate_jury


def brute_score(sample, weights) -> Fraction:
    return (
        weights.views * Fraction(sample.views)
        + weights.likes * Fraction(sample.likes)
        + weights.shares * Fraction(sample.shares)
    )


def beats(a, b) -> bool:
    """Pairwise comparator of (score, submitted_at, submission_id) triples."""
    if a[0] != b[0]:
        return a[0] > b[0]
    if a[1] != b[1]:
        return a[1] < b[1]
    return a[2] < b[2]


def selection_sort(triples):
    """Comparison sort by repeated scans for the entry beating all others."""
    remaining = list(triples)
    ordered = []
    while remaining:
        best = remaining[0]
        for candidate in remaining[1:]:
            if beats(candidate, best):
                best = candidate
        ordered.append(best)
        remaining.remove(best)
    return ordered


def triple(submission, snapshot, weights):
    sample = snapshot.entries[submission.submission_id]
    return (brute_score(sample, weights), submission.submitted_at, submission.submission_id)


def oracle_rank(snapshot, submissions, by_country, weights):
    """Group then selection-sort; returns group -> ordered submission ids."""
    groups = {}
    for submission in submissions:
        if not submission.is_live:
            continue
        key = submission.country if by_country else submission.category_id
        groups.setdefault(key, []).append(submission)
    return {
        key: [t[2] for t in selection_sort([triple(s, snapshot, weights) for s in members])]
        for key, members in groups.items()
    }


def oracle_group_top(snapshot, submissions, by_country, weights):
    """Full-scan argmax per group; returns group -> top submission id."""
    tops = {}
    groups = {}
    for submission in submissions:
        if not submission.is_live:
            continue
        key = submission.country if by_country else submission.category_id
        groups.setdefault(key, []).append(submission)
    for key, members in groups.items():
        best = members[0]
        for candidate in members[1:]:
            if beats(triple(candidate, snapshot, weights), triple(best, snapshot, weights)):
                best = candidate
        tops[key] = best.submission_id
    return tops


def oracle_shortlist_ids(snapshot, submissions, config) -> set[str]:
    """Union of per-country and per-category maxima, recomputed by full scan."""
    weights = config.score_weights
    country_tops = oracle_group_top(snapshot, submissions, True, weights)
    category_tops = oracle_group_top(snapshot, submissions, False, weights)
    return set(country_tops.values()) | set(category_tops.values())


def oracle_provenance_sound(snapshot, submissions, config, shortlist) -> bool:
    """No other live entry of the same country/category strictly outscores a
    tagged one."""
    weights = config.score_weights
    live = [s for s in submissions if s.is_live]
    by_id = {s.submission_id: s for s in live}
    for entry in shortlist.entries:
        tagged = by_id[entry.submission_id]
        tagged_score = brute_score(snapshot.entries[tagged.submission_id], weights)
        for tag in entry.provenance:
            for other in live:
                if other.submission_id == tagged.submission_id:
                    continue
                same_group = (
                    other.country == tag.key
                    if tag.kind == "TOP_OF_COUNTRY"
                    else other.category_id == tag.key
                )
                if same_group:
                    other_score = brute_score(snapshot.entries[other.submission_id], weights)
                    if other_score > tagged_score:
                        return False
    return True


def oracle_winners(shortlisted, scores_by_submission, matrix, age_group_of):
    """Full-scan argmax per category on (aggregate, submitted_at, id)."""
    by_category = {}
    for submission in shortlisted:
        by_category.setdefault(submission.category_id, []).append(submission)
    winners = {}
    for category, members in by_category.items():
        def key(s):
            aggregate = aggregate_jury(
                scores_by_submission[s.submission_id], matrix, age_group_of[category]
            )
            return (aggregate, s.submitted_at, s.submission_id)

        best = members[0]
        for candidate in members[1:]:
            if beats(key(candidate), key(best)):
                best = candidate
        winners[category] = best.submission_id
    return winners
