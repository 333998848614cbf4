"""Category algebra: the (age group, media type) pairs entries compete in."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ContestError
from .config import ContestConfig


@dataclass(frozen=True)
class Category:
    age_group_id: str
    media_type_id: str

    @property
    def id(self) -> str:
        return f"{self.age_group_id}-{self.media_type_id}"


def enumerate_categories(config: ContestConfig) -> list[Category]:
    """Cartesian product age_groups x media_types, in config order."""
    return [
        Category(group.id, media.id)
        for group in config.age_groups
        for media in config.media_types
    ]


def category_index(config: ContestConfig) -> dict[str, Category]:
    return {category.id: category for category in enumerate_categories(config)}


def assign_category(age_group_id: str, media_type_id: str, config: ContestConfig) -> str:
    if age_group_id not in config.age_group_ids():
        raise ContestError("UNKNOWN_AGE_GROUP", f"no age group {age_group_id!r}")
    if media_type_id not in config.media_type_ids():
        raise ContestError("UNKNOWN_MEDIA_TYPE", f"no media type {media_type_id!r}")
    return Category(age_group_id, media_type_id).id
